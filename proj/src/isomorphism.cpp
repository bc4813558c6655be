#include "cyc/isomorphism.hpp"

#include <algorithm>
#include <functional>

#include "cyc/error.hpp"

namespace cyc {

namespace {

bool is_abelian(const Group& g) {
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      if (g.mul(static_cast<elem>(a), static_cast<elem>(b)) !=
          g.mul(static_cast<elem>(b), static_cast<elem>(a))) {
        return false;
      }
    }
  }
  return true;
}

constexpr int kUnassigned = -1;

// Shared state of the generator-image backtracking search.
struct SearchState {
  const Group& g;
  const Group& h;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<elem> gens;                       // minimal generating set of g
  std::vector<std::vector<elem>> candidates;    // per generator, same-order h elements
};

// Extends the partial map `phi` (g index -> h index, kUnassigned when unset)
// to the closure of its assigned elements under products, mirroring every
// product on the h side. Returns false on any clash (different required
// images, or two g elements needing the same h element).
bool saturate(const Group& g, const Group& h, std::vector<int>& phi, std::vector<char>& used) {
  std::vector<elem> known;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (phi[x] != kUnassigned) known.push_back(static_cast<elem>(x));
  }
  auto mirror = [&](elem a, elem b) {
    elem product = g.mul(a, b);
    elem image = h.mul(static_cast<elem>(phi[a]), static_cast<elem>(phi[b]));
    if (phi[product] == kUnassigned) {
      if (used[image]) return false;
      phi[product] = image;
      used[image] = 1;
      known.push_back(product);
      return true;
    }
    return phi[product] == image;
  };
  for (std::size_t i = 0; i < known.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (!mirror(known[i], known[j])) return false;
      if (i != j && !mirror(known[j], known[i])) return false;
    }
  }
  return true;
}

bool assign(SearchState& state, std::size_t depth, std::vector<int>& phi,
            std::vector<char>& used, IsoResult& result) {
  if (depth == state.gens.size()) {
    // Generators all placed and the closure is clash-free; the generating
    // set makes the map total. Verify the witness against both full tables.
    std::vector<elem> mapping(state.g.order());
    for (std::size_t x = 0; x < state.g.order(); ++x) {
      if (phi[x] == kUnassigned) return false;
      mapping[x] = static_cast<elem>(phi[x]);
    }
    for (std::size_t a = 0; a < state.g.order(); ++a) {
      for (std::size_t b = 0; b < state.g.order(); ++b) {
        if (mapping[state.g.mul(static_cast<elem>(a), static_cast<elem>(b))] !=
            state.h.mul(mapping[a], mapping[b])) {
          return false;
        }
      }
    }
    result.isomorphic = true;
    result.mapping = std::move(mapping);
    return true;
  }

  for (elem candidate : state.candidates[depth]) {
    if (used[candidate]) continue;
    if (++state.nodes > state.budget) {
      throw Error(ErrorKind::SearchBudgetExceeded,
                  state.g.label() + " vs " + state.h.label() + ": exceeded " +
                      std::to_string(state.budget) + " search nodes");
    }
    std::vector<int> next_phi = phi;
    std::vector<char> next_used = used;
    next_phi[state.gens[depth]] = candidate;
    next_used[candidate] = 1;
    if (saturate(state.g, state.h, next_phi, next_used) &&
        assign(state, depth + 1, next_phi, next_used, result)) {
      return true;
    }
  }
  return false;
}

}  // namespace

Fingerprint fingerprint(const Group& g) {
  Fingerprint fp;
  Census c = census(g);
  fp.order = g.order();
  fp.abelian = is_abelian(g);
  fp.order_profile.assign(c.order_profile.begin(), c.order_profile.end());
  fp.cyclic_count = c.cyclic_count;
  fp.involution_count = c.involution_count;
  fp.center_order = center(g).size();
  fp.derived_order = derived_subgroup(g).size();
  fp.exponent = c.exponent;
  fp.abelianization = abelianization_invariants(g);
  return fp;
}

std::vector<elem> minimal_generating_set(const Group& g) {
  if (g.order() == 1) return {};
  std::size_t n = g.order();

  // Iterative deepening on set size; within one size, combinations of
  // indices 1..n-1 in lexicographic order, so the first hit is the
  // lexicographically least. The identity never appears in a minimal set.
  std::vector<elem> chosen;
  std::function<bool(std::size_t, elem)> extend = [&](std::size_t remaining, elem start) {
    if (remaining == 0) {
      return generated_subgroup(g, chosen).size() == n;
    }
    for (std::size_t x = start; x < n; ++x) {
      chosen.push_back(static_cast<elem>(x));
      if (extend(remaining - 1, static_cast<elem>(x + 1))) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t k = 1; k <= 16; ++k) {
    chosen.clear();
    if (extend(k, 1)) return chosen;
  }
  throw Error(ErrorKind::InternalInconsistency,
              g.label() + ": no generating set of size <= 16 found");
}

IsoResult are_isomorphic(const Group& g, const Group& h, std::uint64_t budget) {
  IsoResult result;
  if (fingerprint(g) != fingerprint(h)) return result;
  if (g.order() == 1) {
    result.isomorphic = true;
    result.mapping = {0};
    return result;
  }

  SearchState state{g, h, budget, 0, {}, {}};
  state.gens = minimal_generating_set(g);

  // Candidate images, pruned by element order (isomorphisms preserve it).
  std::vector<std::size_t> h_orders(h.order());
  for (std::size_t x = 0; x < h.order(); ++x) {
    h_orders[x] = element_order(h, static_cast<elem>(x));
  }
  for (elem gen : state.gens) {
    std::size_t want = element_order(g, gen);
    std::vector<elem> pool;
    for (std::size_t x = 0; x < h.order(); ++x) {
      if (h_orders[x] == want) pool.push_back(static_cast<elem>(x));
    }
    state.candidates.push_back(std::move(pool));
  }

  std::vector<int> phi(g.order(), kUnassigned);
  std::vector<char> used(h.order(), 0);
  phi[0] = 0;
  used[0] = 1;
  assign(state, 0, phi, used, result);
  result.nodes_explored = state.nodes;
  return result;
}

std::string classify_against(const Group& g,
                             const std::vector<std::pair<std::string, Group>>& candidates,
                             std::uint64_t budget) {
  std::string match;
  bool found = false;
  for (const auto& [name, candidate] : candidates) {
    if (are_isomorphic(g, candidate, budget).isomorphic) {
      if (found) {
        throw Error(ErrorKind::AmbiguousMatch,
                    g.label() + " matches both \"" + match + "\" and \"" + name + "\"");
      }
      match = name;
      found = true;
    }
  }
  return found ? match : "unmatched";
}

}  // namespace cyc
