#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyc/group.hpp"

namespace cyc {

// Cheap isomorphism invariants. Equal fingerprints are necessary but not
// sufficient for isomorphism (distinct groups of order 32 in the shipped
// catalog collide), so fingerprint inequality is a sound fast reject.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<std::pair<std::size_t, std::size_t>> order_profile;  // (element order, count)
  std::size_t cyclic_count = 0;
  std::size_t involution_count = 0;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t exponent = 0;
  std::vector<std::size_t> abelianization;  // invariant factors d1 | d2 | ...

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Group& g);

struct IsoResult {
  bool isomorphic = false;
  // When isomorphic: mapping[x] is the image of x, verified against both
  // full tables. Empty otherwise.
  std::vector<elem> mapping;
  std::uint64_t nodes_explored = 0;
};

constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Decides G ~= H. Fingerprints first; on agreement, backtracking search
// assigning images to a minimal generating set of G (candidates pruned by
// element order, partial maps closed under multiplication as they grow).
// Every positive answer carries an explicitly verified bijection. Throws
// SearchBudgetExceeded after `budget` assignment nodes.
IsoResult are_isomorphic(const Group& g, const Group& h,
                         std::uint64_t budget = kDefaultSearchBudget);

// Smallest generating set, found by iterative deepening on size; among sets
// of minimal size, the lexicographically least index tuple. The trivial
// group yields the empty set.
std::vector<elem> minimal_generating_set(const Group& g);

// Name of the unique candidate isomorphic to g, "unmatched" if none.
// Throws AmbiguousMatch if two candidates both match.
std::string classify_against(const Group& g,
                             const std::vector<std::pair<std::string, Group>>& candidates,
                             std::uint64_t budget = kDefaultSearchBudget);

}  // namespace cyc
