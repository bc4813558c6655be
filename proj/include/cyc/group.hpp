#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cyc/numtheory.hpp"

namespace cyc {

// Element index inside a group's Cayley table.
using elem = std::uint16_t;

constexpr std::size_t kDefaultOrderCap = 512;

// A finite group given by its full multiplication table. Immutable once
// constructed; construction always runs the full validation (index range,
// identity at index 0, Latin-square property, associativity), so any Group
// that exists is a genuine group.
class Group {
 public:
  // Empty placeholder (order 0); real groups only come from validate_table.
  Group() = default;

  std::size_t order() const { return order_; }
  const std::string& label() const { return label_; }

  elem mul(elem a, elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  elem inv(elem a) const { return inverse_[a]; }

  const std::vector<elem>& table() const { return table_; }

 private:
  friend Group validate_table(std::size_t order, const std::vector<elem>& table,
                              const std::string& label);
  Group(std::size_t order, std::vector<elem> table, std::string label);

  std::size_t order_ = 0;
  std::vector<elem> table_;
  std::vector<elem> inverse_;
  std::string label_;
};

// Checks that `table` (row-major, order x order) is the Cayley table of a
// group with identity at index 0 and returns the validated Group.
// Validation order: entry range, identity at zero, Latin square,
// associativity. Throws Error with the matching kind, naming `label` and the
// first offending cell or triple.
Group validate_table(std::size_t order, const std::vector<elem>& table,
                     const std::string& label);

elem multiply(const Group& g, elem a, elem b);
elem inverse(const Group& g, elem a);

// a^k for any integer k (k = 0 gives the identity; negative k uses the
// inverse). Square-and-multiply, so fast for large |k|.
elem power(const Group& g, elem a, std::int64_t k);

// Multiplicative order of x: least m >= 1 with x^m = identity.
std::size_t element_order(const Group& g, elem x);

// Elements of <x> as a sorted ascending index list.
std::vector<elem> cyclic_subgroup(const Group& g, elem x);

// All y with <y> = <x> (the generators of <x>), sorted ascending.
// Its size is always phi(|x|).
std::vector<elem> generator_class(const Group& g, elem x);

// One equivalence class of the "generates the same cyclic subgroup"
// relation: the class of elements generating a cyclic subgroup of order
// `subgroup_order`, represented by its least element index.
struct CensusClass {
  std::size_t subgroup_order = 0;
  elem representative = 0;
  std::size_t size = 0;

  bool operator==(const CensusClass&) const = default;
};

// Full cyclic-subgroup census of a group: the classes partition the
// elements, and cyclic_count (the number of classes) is the number of
// distinct cyclic subgroups.
struct Census {
  std::size_t group_order = 0;
  std::vector<CensusClass> classes;  // sorted by (subgroup_order, representative)
  std::size_t cyclic_count = 0;      // = classes.size()
  std::size_t involution_count = 0;  // elements of order 2
  std::size_t exponent = 0;          // lcm of element orders
  std::map<std::size_t, std::size_t> order_profile;  // element order -> count

  bool operator==(const Census&) const = default;
};

Census census(const Group& g);

// Sum over all elements of 1/phi(|x|) in exact arithmetic. Always an
// integer equal to the number of cyclic subgroups; a non-integral result
// would mean the kernel itself is broken (InternalInconsistency).
ExactFraction phi_sum_count(const Group& g);

std::size_t count_elements_of_order(const Group& g, std::size_t k);
std::size_t involution_count(const Group& g);
std::size_t exponent(const Group& g);

// Subgroup predicates over sorted index sets.
bool is_subgroup(const Group& g, const std::vector<elem>& s);
bool is_normal(const Group& g, const std::vector<elem>& s);

// Closure of `seed` under multiplication (and hence inverses), sorted
// ascending. An empty seed yields the trivial subgroup {0}.
std::vector<elem> generated_subgroup(const Group& g, const std::vector<elem>& seed);

std::vector<elem> center(const Group& g);
std::vector<elem> derived_subgroup(const Group& g);

// Invariant factors d1 | d2 | ... | dk of G / [G,G] (each di > 1), in
// ascending order. Empty for a perfect or trivial abelianization.
std::vector<std::size_t> abelianization_invariants(const Group& g);

// Quotient of g by a normal subgroup (cosets indexed by least member; the
// identity coset gets index 0). Used for abelianization; exposed for tests.
Group quotient_group(const Group& g, const std::vector<elem>& normal_subgroup);

}  // namespace cyc
