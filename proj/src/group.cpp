#include "cyc/group.hpp"

#include <algorithm>
#include <numeric>

#include "cyc/error.hpp"
#include "cyc/parallel.hpp"

namespace cyc {

namespace {

std::string cell(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

Group::Group(std::size_t order, std::vector<elem> table, std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
  inverse_.assign(order_, 0);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == 0) {
        inverse_[a] = static_cast<elem>(b);
        break;
      }
    }
  }
}

Group validate_table(std::size_t order, const std::vector<elem>& table,
                     const std::string& label) {
  if (order == 0) {
    throw Error(ErrorKind::BadParameter, label + ": a group has at least one element");
  }
  if (order > 65535) {
    throw Error(ErrorKind::BadParameter, label + ": order " + std::to_string(order) +
                                             " exceeds the element index range");
  }
  if (table.size() != order * order) {
    throw Error(ErrorKind::BadParameter,
                label + ": table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(order * order));
  }

  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (table[a * order + b] >= order) {
        throw Error(ErrorKind::OutOfRangeEntry,
                    label + ": entry " + std::to_string(table[a * order + b]) + " at " +
                        cell(a, b) + " outside 0.." + std::to_string(order - 1));
      }
    }
  }

  for (std::size_t a = 0; a < order; ++a) {
    if (table[0 * order + a] != a) {
      throw Error(ErrorKind::NoIdentityAtZero,
                  label + ": 0*" + std::to_string(a) + " = " +
                      std::to_string(table[a]) + ", so 0 is not a left identity");
    }
    if (table[a * order + 0] != a) {
      throw Error(ErrorKind::NoIdentityAtZero,
                  label + ": " + std::to_string(a) + "*0 = " +
                      std::to_string(table[a * order]) + ", so 0 is not a right identity");
    }
  }

  // Latin square: every row and every column is a permutation of 0..order-1.
  std::vector<char> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      elem v = table[a * order + b];
      if (seen[v]) {
        throw Error(ErrorKind::NotLatinSquare,
                    label + ": row " + std::to_string(a) + " repeats value " +
                        std::to_string(v));
      }
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < order; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < order; ++a) {
      elem v = table[a * order + b];
      if (seen[v]) {
        throw Error(ErrorKind::NotLatinSquare,
                    label + ": column " + std::to_string(b) + " repeats value " +
                        std::to_string(v));
      }
      seen[v] = 1;
    }
  }

  // Associativity, the O(n^3) part; split across threads by the first factor.
  parallel_for(order, [&](std::size_t a) {
    const elem* row_a = table.data() + a * order;
    for (std::size_t b = 0; b < order; ++b) {
      const elem* row_ab = table.data() + static_cast<std::size_t>(row_a[b]) * order;
      const elem* row_b = table.data() + b * order;
      for (std::size_t c = 0; c < order; ++c) {
        if (row_ab[c] != row_a[row_b[c]]) {
          throw Error(ErrorKind::NotAssociative,
                      label + ": (" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                          std::to_string(c) + " = " + std::to_string(row_ab[c]) + " but " +
                          std::to_string(a) + "*(" + std::to_string(b) + "*" +
                          std::to_string(c) + ") = " + std::to_string(row_a[row_b[c]]));
        }
      }
    }
  });

  return Group(order, table, label);
}

elem multiply(const Group& g, elem a, elem b) {
  if (a >= g.order() || b >= g.order()) {
    throw Error(ErrorKind::OutOfRangeEntry,
                g.label() + ": multiply" + cell(a, b) + " outside the group");
  }
  return g.mul(a, b);
}

elem inverse(const Group& g, elem a) {
  if (a >= g.order()) {
    throw Error(ErrorKind::OutOfRangeEntry,
                g.label() + ": inverse(" + std::to_string(a) + ") outside the group");
  }
  return g.inv(a);
}

elem power(const Group& g, elem a, std::int64_t k) {
  if (a >= g.order()) {
    throw Error(ErrorKind::OutOfRangeEntry,
                g.label() + ": power(" + std::to_string(a) + ") outside the group");
  }
  if (k < 0) {
    a = g.inv(a);
    k = -k;
  }
  elem result = 0;  // identity
  elem base = a;
  std::uint64_t e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1) result = g.mul(result, base);
    base = g.mul(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t element_order(const Group& g, elem x) {
  if (x >= g.order()) {
    throw Error(ErrorKind::OutOfRangeEntry,
                g.label() + ": element_order(" + std::to_string(x) + ") outside the group");
  }
  std::size_t order = 1;
  elem current = x;
  while (current != 0) {
    current = g.mul(current, x);
    ++order;
  }
  return order;
}

std::vector<elem> cyclic_subgroup(const Group& g, elem x) {
  if (x >= g.order()) {
    throw Error(ErrorKind::OutOfRangeEntry,
                g.label() + ": cyclic_subgroup(" + std::to_string(x) + ") outside the group");
  }
  std::vector<elem> members{0};
  elem current = x;
  while (current != 0) {
    members.push_back(current);
    current = g.mul(current, x);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<elem> generator_class(const Group& g, elem x) {
  std::size_t m = element_order(g, x);
  std::vector<elem> result;
  elem current = x;
  // Walk x, x^2, ..., x^m and keep the powers with exponent coprime to m.
  for (std::size_t k = 1; k <= m; ++k) {
    if (std::gcd(k, m) == 1) result.push_back(current);
    current = g.mul(current, x);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Census census(const Group& g) {
  std::size_t n = g.order();
  Census result;
  result.group_order = n;

  std::vector<char> visited(n, 0);
  std::size_t exp = 1;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t ord = element_order(g, static_cast<elem>(x));
    result.order_profile[ord] += 1;
    exp = std::lcm(exp, ord);
    if (visited[x]) continue;
    // x is the least element of its class: record the class, mark members.
    std::vector<elem> cls = generator_class(g, static_cast<elem>(x));
    for (elem y : cls) visited[y] = 1;
    result.classes.push_back(CensusClass{ord, static_cast<elem>(x), cls.size()});
  }

  std::sort(result.classes.begin(), result.classes.end(),
            [](const CensusClass& a, const CensusClass& b) {
              if (a.subgroup_order != b.subgroup_order) {
                return a.subgroup_order < b.subgroup_order;
              }
              return a.representative < b.representative;
            });
  result.cyclic_count = result.classes.size();
  auto it = result.order_profile.find(2);
  result.involution_count = it == result.order_profile.end() ? 0 : it->second;
  result.exponent = exp;
  return result;
}

ExactFraction phi_sum_count(const Group& g) {
  ExactFraction sum;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t ord = element_order(g, static_cast<elem>(x));
    sum = sum + ExactFraction(1, static_cast<std::int64_t>(euler_phi(ord)));
  }
  if (!sum.is_integer()) {
    throw Error(ErrorKind::InternalInconsistency,
                g.label() + ": totient sum " + sum.to_string() + " is not an integer");
  }
  return sum;
}

std::size_t count_elements_of_order(const Group& g, std::size_t k) {
  std::size_t count = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (element_order(g, static_cast<elem>(x)) == k) ++count;
  }
  return count;
}

std::size_t involution_count(const Group& g) { return count_elements_of_order(g, 2); }

std::size_t exponent(const Group& g) {
  std::size_t exp = 1;
  for (std::size_t x = 0; x < g.order(); ++x) {
    exp = std::lcm(exp, element_order(g, static_cast<elem>(x)));
  }
  return exp;
}

bool is_subgroup(const Group& g, const std::vector<elem>& s) {
  if (s.empty()) return false;
  std::vector<char> member(g.order(), 0);
  for (elem x : s) {
    if (x >= g.order()) return false;
    member[x] = 1;
  }
  if (!member[0]) return false;
  for (elem a : s) {
    for (elem b : s) {
      if (!member[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal(const Group& g, const std::vector<elem>& s) {
  if (!is_subgroup(g, s)) return false;
  std::vector<char> member(g.order(), 0);
  for (elem x : s) member[x] = 1;
  for (std::size_t a = 0; a < g.order(); ++a) {
    elem ai = g.inv(static_cast<elem>(a));
    for (elem x : s) {
      if (!member[g.mul(g.mul(static_cast<elem>(a), x), ai)]) return false;
    }
  }
  return true;
}

std::vector<elem> generated_subgroup(const Group& g, const std::vector<elem>& seed) {
  std::vector<char> member(g.order(), 0);
  std::vector<elem> closure{0};
  member[0] = 1;
  for (elem x : seed) {
    if (x >= g.order()) {
      throw Error(ErrorKind::OutOfRangeEntry,
                  g.label() + ": seed element " + std::to_string(x) + " outside the group");
    }
    if (!member[x]) {
      member[x] = 1;
      closure.push_back(x);
    }
  }
  // Breadth-first closure under multiplication; finite order makes inverses
  // automatic.
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (std::size_t j = 0; j < closure.size(); ++j) {
      elem p = g.mul(closure[i], closure[j]);
      if (!member[p]) {
        member[p] = 1;
        closure.push_back(p);
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

std::vector<elem> center(const Group& g) {
  std::vector<elem> result;
  for (std::size_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (g.mul(static_cast<elem>(z), static_cast<elem>(a)) !=
          g.mul(static_cast<elem>(a), static_cast<elem>(z))) {
        central = false;
        break;
      }
    }
    if (central) result.push_back(static_cast<elem>(z));
  }
  return result;
}

std::vector<elem> derived_subgroup(const Group& g) {
  std::vector<elem> commutators;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      elem c = g.mul(g.mul(static_cast<elem>(a), static_cast<elem>(b)),
                     g.mul(g.inv(static_cast<elem>(a)), g.inv(static_cast<elem>(b))));
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  return generated_subgroup(g, commutators);
}

Group quotient_group(const Group& g, const std::vector<elem>& normal_subgroup) {
  if (!is_normal(g, normal_subgroup)) {
    throw Error(ErrorKind::BadParameter,
                g.label() + ": quotient by a set that is not a normal subgroup");
  }
  std::size_t n = g.order();
  // Assign each element the least member of its coset, then rank the cosets
  // by that representative so the identity coset lands at index 0.
  std::vector<elem> coset_rep(n, 0);
  std::vector<char> assigned(n, 0);
  std::vector<elem> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    std::vector<elem> coset;
    for (elem s : normal_subgroup) coset.push_back(g.mul(static_cast<elem>(a), s));
    elem least = *std::min_element(coset.begin(), coset.end());
    for (elem x : coset) {
      assigned[x] = 1;
      coset_rep[x] = least;
    }
    reps.push_back(least);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<std::size_t> index_of_rep(n, 0);
  for (std::size_t i = 0; i < reps.size(); ++i) index_of_rep[reps[i]] = i;

  std::size_t q = reps.size();
  std::vector<elem> table(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      elem prod = g.mul(reps[i], reps[j]);
      table[i * q + j] = static_cast<elem>(index_of_rep[coset_rep[prod]]);
    }
  }
  return validate_table(q, table, g.label() + "/N" + std::to_string(normal_subgroup.size()));
}

std::vector<std::size_t> abelianization_invariants(const Group& g) {
  Group quotient = quotient_group(g, derived_subgroup(g));
  // Peel cyclic factors of maximal order off the abelian quotient: the
  // largest invariant factor is the exponent, and an element of that order
  // spans a direct factor.
  std::vector<std::size_t> factors;
  Group current = quotient;
  while (current.order() > 1) {
    std::size_t exp = 1;
    elem witness = 0;
    for (std::size_t x = 0; x < current.order(); ++x) {
      std::size_t ord = element_order(current, static_cast<elem>(x));
      if (ord > exp) {
        exp = ord;
        witness = static_cast<elem>(x);
      }
    }
    factors.push_back(exp);
    current = quotient_group(current, cyclic_subgroup(current, witness));
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace cyc
