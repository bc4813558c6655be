#include "cyc/construct.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "cyc/error.hpp"

namespace cyc {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Writes a permutation of 0..n-1 as 1-based disjoint cycles, fixed points
// omitted; the identity is "()".
std::string cycles_1based(const std::vector<elem>& image) {
  std::string out;
  std::vector<char> visited(image.size(), 0);
  for (std::size_t start = 0; start < image.size(); ++start) {
    if (visited[start] || image[start] == start) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!visited[x]) {
      visited[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = image[x];
    }
    out += ")";
  }
  if (out.empty()) out = "()";
  return out;
}

std::string action_text(const ActionSpec& action) {
  if (action.trivial) return "trivial";
  if (action.inversion) return "inv";
  std::string out;
  for (std::size_t i = 0; i < action.generator_images.size(); ++i) {
    if (i > 0) out += ", ";
    out += "gen " + std::to_string(action.generator_images[i].first) + " -> " +
           cycles_1based(action.generator_images[i].second);
  }
  return out;
}

void check_automorphism(const Group& n, const std::vector<elem>& image,
                        const std::string& label) {
  if (image.size() != n.order()) {
    throw Error(ErrorKind::ActionNotAutomorphism,
                label + ": image vector has " + std::to_string(image.size()) +
                    " entries for a group of order " + std::to_string(n.order()));
  }
  std::vector<char> seen(n.order(), 0);
  for (elem v : image) {
    if (v >= n.order() || seen[v]) {
      throw Error(ErrorKind::ActionNotAutomorphism,
                  label + ": image is not a permutation of the group elements");
    }
    seen[v] = 1;
  }
  if (image[0] != 0) {
    throw Error(ErrorKind::ActionNotAutomorphism,
                label + ": image moves the identity");
  }
  for (std::size_t a = 0; a < n.order(); ++a) {
    for (std::size_t b = 0; b < n.order(); ++b) {
      if (image[n.mul(static_cast<elem>(a), static_cast<elem>(b))] !=
          n.mul(image[a], image[b])) {
        throw Error(ErrorKind::ActionNotAutomorphism,
                    label + ": image breaks the product at (" + std::to_string(a) + "," +
                        std::to_string(b) + ")");
      }
    }
  }
}

}  // namespace

Group cyclic(std::size_t n) {
  if (n < 1 || n > 4096) {
    throw Error(ErrorKind::BadParameter, "Z(n) needs 1 <= n <= 4096, got " + std::to_string(n));
  }
  std::vector<elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<elem>((a + b) % n);
    }
  }
  return validate_table(n, table, "Z(" + std::to_string(n) + ")");
}

Group elem_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::BadParameter, "EA(p,k) needs prime p, got " + std::to_string(p));
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    if (n > 4096) {
      throw Error(ErrorKind::BadParameter,
                  "EA(" + std::to_string(p) + "," + std::to_string(k) + ") exceeds order 4096");
    }
  }
  std::vector<elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // Base-p digitwise sum: digit i carries weight p^i.
      std::size_t sum = 0, weight = 1, x = a, y = b;
      for (std::size_t i = 0; i < k; ++i) {
        sum += ((x + y) % p) * weight;
        x /= p;
        y /= p;
        weight *= p;
      }
      table[a * n + b] = static_cast<elem>(sum);
    }
  }
  return validate_table(n, table, "EA(" + std::to_string(p) + "," + std::to_string(k) + ")");
}

Group dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0 || order > 4096) {
    throw Error(ErrorKind::BadParameter,
                "D(n) needs even n >= 2, got " + std::to_string(order));
  }
  std::size_t n = order / 2;
  std::vector<elem> table(order * order);
  auto rot = [&](std::size_t i) { return static_cast<elem>(((i % n) + n) % n); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      table[i * order + k] = rot(i + k);                    // a^i * a^k
      table[i * order + (n + k)] = static_cast<elem>(n + rot(n + k - i));  // a^i * b a^k
      table[(n + i) * order + k] = static_cast<elem>(n + rot(i + k));      // b a^i * a^k
      table[(n + i) * order + (n + k)] = rot(n + k - i);    // b a^i * b a^k
    }
  }
  return validate_table(order, table, "D(" + std::to_string(order) + ")");
}

Group dicyclic(std::size_t order) {
  if (order < 4 || order % 4 != 0 || order > 4096) {
    throw Error(ErrorKind::BadParameter,
                "Dic(n) needs n divisible by 4, n >= 4, got " + std::to_string(order));
  }
  std::size_t m = order / 4;
  std::size_t h = 2 * m;  // |a|
  std::vector<elem> table(order * order);
  auto rot = [&](std::size_t i) { return static_cast<elem>(((i % h) + h) % h); };
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t k = 0; k < h; ++k) {
      table[i * order + k] = rot(i + k);                       // a^i * a^k
      table[i * order + (h + k)] = static_cast<elem>(h + rot(h + k - i));   // a^i * b a^k
      table[(h + i) * order + k] = static_cast<elem>(h + rot(i + k));       // b a^i * a^k
      table[(h + i) * order + (h + k)] = rot(m + h + k - i);   // b a^i * b a^k = a^(m+k-i)
    }
  }
  return validate_table(order, table, "Dic(" + std::to_string(order) + ")");
}

Group quaternion_generalized(std::size_t order) {
  if (order < 8 || !is_power_of_two(order) || order > 4096) {
    throw Error(ErrorKind::BadParameter,
                "Q(n) needs a power of two n >= 8, got " + std::to_string(order));
  }
  Group g = dicyclic(order);
  return validate_table(order, g.table(), "Q(" + std::to_string(order) + ")");
}

Group modular_maximal_cyclic(std::size_t order) {
  if (order < 16 || !is_power_of_two(order) || order > 4096) {
    throw Error(ErrorKind::BadParameter,
                "M(n) needs a power of two n >= 16, got " + std::to_string(order));
  }
  std::size_t h = order / 2;   // |a|
  std::size_t t = 1 + order / 4;  // b a b^-1 = a^t
  std::vector<elem> table(order * order);
  auto rot = [&](std::size_t i) { return static_cast<elem>(i % h); };
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t k = 0; k < h; ++k) {
      table[i * order + k] = rot(i + k);                      // a^i * a^k
      table[i * order + (h + k)] = static_cast<elem>(h + rot(t * i + k));  // a^i * b a^k
      table[(h + i) * order + k] = static_cast<elem>(h + rot(i + k));      // b a^i * a^k
      table[(h + i) * order + (h + k)] = rot(t * i + k);      // b a^i * b a^k
    }
  }
  return validate_table(order, table, "M(" + std::to_string(order) + ")");
}

Group heisenberg_mod_p(std::size_t p) {
  if (!is_prime(p) || p > 13) {
    throw Error(ErrorKind::BadParameter,
                "Heis(p) needs a prime p <= 13, got " + std::to_string(p));
  }
  std::size_t n = p * p * p;
  std::vector<elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      std::size_t ra = (a + a2) % p;
      std::size_t rb = (b + b2) % p;
      std::size_t rc = (c + c2 + a * b2) % p;
      table[x * n + y] = static_cast<elem>(ra * p * p + rb * p + rc);
    }
  }
  return validate_table(n, table, "Heis(" + std::to_string(p) + ")");
}

Group direct_product(const Group& a, const Group& b) {
  std::size_t n = a.order() * b.order();
  if (n > 65535) {
    throw Error(ErrorKind::ClosureTooLarge,
                "prod(" + a.label() + "," + b.label() + ") exceeds the element index range");
  }
  std::size_t nb = b.order();
  std::vector<elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    elem xa = static_cast<elem>(x / nb), xb = static_cast<elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      elem ya = static_cast<elem>(y / nb), yb = static_cast<elem>(y % nb);
      table[x * n + y] = static_cast<elem>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  return validate_table(n, table, "prod(" + a.label() + "," + b.label() + ")");
}

Group semidirect(const Group& n, const Group& h, const ActionSpec& action) {
  std::string label = "sdp(" + n.label() + "," + h.label() + "," + action_text(action) + ")";

  // Resolve the action into one automorphism of N per named generator of H.
  std::vector<std::pair<elem, std::vector<elem>>> gens;
  if (action.trivial) {
    // Identity action; nothing to generate.
  } else if (action.inversion) {
    if (h.order() < 2) {
      throw Error(ErrorKind::BadParameter, label + ": \"inv\" names element 1, but |H| = 1");
    }
    std::vector<elem> inv_map(n.order());
    for (std::size_t x = 0; x < n.order(); ++x) inv_map[x] = n.inv(static_cast<elem>(x));
    gens.emplace_back(static_cast<elem>(1), std::move(inv_map));
  } else {
    if (action.generator_images.empty()) {
      throw Error(ErrorKind::BadParameter, label + ": empty action");
    }
    for (const auto& [g, image] : action.generator_images) {
      if (g >= h.order()) {
        throw Error(ErrorKind::BadParameter,
                    label + ": generator index " + std::to_string(g) + " outside H");
      }
      gens.emplace_back(g, image);
    }
  }
  for (const auto& [g, image] : gens) check_automorphism(n, image, label);

  // Extend generator images to a map alpha: H -> Aut(N) along right
  // multiplication, alpha(u*g) = alpha(u) o alpha(g). Every (u, generator)
  // edge is either the defining assignment or a consistency check, which
  // pins the homomorphism property on all of <gens>.
  std::vector<std::optional<std::vector<elem>>> alpha(h.order());
  std::vector<elem> identity_map(n.order());
  for (std::size_t x = 0; x < n.order(); ++x) identity_map[x] = static_cast<elem>(x);
  alpha[0] = identity_map;

  if (action.trivial) {
    for (std::size_t u = 0; u < h.order(); ++u) alpha[u] = identity_map;
  } else {
    std::vector<elem> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      elem u = queue[qi];
      for (const auto& [g, image] : gens) {
        elem v = h.mul(u, g);
        std::vector<elem> composed(n.order());
        for (std::size_t x = 0; x < n.order(); ++x) composed[x] = (*alpha[u])[image[x]];
        if (!alpha[v].has_value()) {
          alpha[v] = std::move(composed);
          queue.push_back(v);
        } else if (*alpha[v] != composed) {
          throw Error(ErrorKind::ActionNotHomomorphism,
                      label + ": images are inconsistent at H element " + std::to_string(v));
        }
      }
    }
    for (std::size_t u = 0; u < h.order(); ++u) {
      if (!alpha[u].has_value()) {
        throw Error(ErrorKind::GeneratorsDontGenerate,
                    label + ": named generators reach only " + std::to_string(queue.size()) +
                        " of " + std::to_string(h.order()) + " H elements");
      }
    }
  }

  std::size_t order = n.order() * h.order();
  if (order > 65535) {
    throw Error(ErrorKind::ClosureTooLarge, label + ": exceeds the element index range");
  }
  std::size_t nh = h.order();
  std::vector<elem> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    elem n1 = static_cast<elem>(x / nh), h1 = static_cast<elem>(x % nh);
    const std::vector<elem>& act = *alpha[h1];
    for (std::size_t y = 0; y < order; ++y) {
      elem n2 = static_cast<elem>(y / nh), h2 = static_cast<elem>(y % nh);
      table[x * order + y] = static_cast<elem>(n.mul(n1, act[n2]) * nh + h.mul(h1, h2));
    }
  }
  return validate_table(order, table, label);
}

Group from_permutations(std::size_t degree,
                        const std::vector<std::vector<elem>>& generators,
                        std::size_t order_cap) {
  if (degree < 1 || degree > 4096) {
    throw Error(ErrorKind::BadParameter,
                "perm(...) needs degree between 1 and 4096, got " + std::to_string(degree));
  }
  for (const auto& g : generators) {
    if (g.size() != degree) {
      throw Error(ErrorKind::NotAPermutation,
                  "generator acts on " + std::to_string(g.size()) + " points, expected " +
                      std::to_string(degree));
    }
    std::vector<char> seen(degree, 0);
    for (elem v : g) {
      if (v >= degree || seen[v]) {
        throw Error(ErrorKind::NotAPermutation,
                    "generator " + cycles_1based(g) + " is not a permutation of 1.." +
                        std::to_string(degree));
      }
      seen[v] = 1;
    }
  }

  // Breadth-first closure; element 0 is the identity, new elements appear in
  // discovery order via sigma * generator.
  std::vector<std::vector<elem>> elements;
  std::map<std::vector<elem>, elem> index_of;
  std::vector<elem> identity(degree);
  for (std::size_t x = 0; x < degree; ++x) identity[x] = static_cast<elem>(x);
  elements.push_back(identity);
  index_of[identity] = 0;

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      std::vector<elem> product(degree);
      for (std::size_t x = 0; x < degree; ++x) product[x] = elements[i][g[x]];
      if (index_of.emplace(product, static_cast<elem>(elements.size())).second) {
        if (elements.size() >= order_cap) {
          throw Error(ErrorKind::ClosureTooLarge,
                      "permutation closure exceeds the order cap " + std::to_string(order_cap));
        }
        elements.push_back(std::move(product));
      }
    }
  }

  std::string label = "perm(" + std::to_string(degree) + ";";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    label += (i == 0 ? " " : ", ") + cycles_1based(generators[i]);
  }
  label += ")";

  std::size_t n = elements.size();
  std::vector<elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<elem> product(degree);
      for (std::size_t x = 0; x < degree; ++x) product[x] = elements[i][elements[j][x]];
      table[i * n + j] = index_of.at(product);
    }
  }
  return validate_table(n, table, label);
}

}  // namespace cyc
