#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cyc/construct.hpp"
#include "cyc/expr.hpp"
#include "cyc/group.hpp"
#include "cyc/numtheory.hpp"
#include "helpers.hpp"

using namespace cyc;

namespace {

std::vector<std::pair<std::size_t, std::pair<elem, std::size_t>>> class_rows(const Census& c) {
  std::vector<std::pair<std::size_t, std::pair<elem, std::size_t>>> rows;
  for (const CensusClass& cls : c.classes) {
    rows.push_back({cls.subgroup_order, {cls.representative, cls.size}});
  }
  return rows;
}

}  // namespace

TEST_CASE("table validation accepts groups and explains every rejection") {
  // Z2 is the smallest nontrivial valid table.
  Group z2 = validate_table(2, {0, 1, 1, 0}, "pair");
  CHECK(z2.order() == 2);
  CHECK(z2.mul(1, 1) == 0);
  CHECK(z2.inv(1) == 1);

  CHECK_KIND(validate_table(0, {}, "t"), BadParameter);
  CHECK_KIND(validate_table(2, {0, 1, 1}, "t"), BadParameter);
  CHECK_KIND_MSG(validate_table(2, {0, 1, 1, 2}, "t"), OutOfRangeEntry, "entry 2");
  CHECK_KIND(validate_table(2, {1, 0, 0, 1}, "t"), NoIdentityAtZero);
  CHECK_KIND(validate_table(2, {0, 1, 1, 1}, "t"), NotLatinSquare);

  // A Latin square with identity that fails associativity; the first bad
  // triple in scan order is (1,1,2) and the report must name it.
  std::vector<elem> square = {
      0, 1, 2, 3, 4,  //
      1, 0, 3, 4, 2,  //
      2, 3, 4, 0, 1,  //
      3, 4, 1, 2, 0,  //
      4, 2, 0, 1, 3,  //
  };
  CHECK_KIND_MSG(validate_table(5, square, "sq"), NotAssociative,
                 "(1*1)*2 = 2 but 1*(1*2) = 4");
}

TEST_CASE("element arithmetic on Q(8) and Z(12)") {
  Group q8 = quaternion_generalized(8);
  CHECK(multiply(q8, 1, 4) == 7);
  CHECK(inverse(q8, 1) == 3);
  CHECK(element_order(q8, 1) == 4);
  CHECK_KIND(multiply(q8, 1, 8), OutOfRangeEntry);
  CHECK_KIND(inverse(q8, 9), OutOfRangeEntry);

  Group z12 = cyclic(12);
  CHECK(element_order(z12, 1) == 12);
  CHECK(element_order(z12, 2) == 6);
  CHECK(power(z12, 1, 0) == 0);
  CHECK(power(z12, 1, 25) == 1);
  CHECK(power(z12, 1, -1) == 11);
  CHECK(power(z12, 5, 100) == (5 * 100) % 12);
  CHECK_KIND(power(z12, 12, 2), OutOfRangeEntry);
}

TEST_CASE("cyclic subgroups and generator classes") {
  Group z12 = cyclic(12);
  CHECK(cyclic_subgroup(z12, 2) == std::vector<elem>{0, 2, 4, 6, 8, 10});
  CHECK(generator_class(z12, 1) == std::vector<elem>{1, 5, 7, 11});

  Group q8 = quaternion_generalized(8);
  CHECK(generator_class(q8, 1) == std::vector<elem>{1, 3});
  CHECK(cyclic_subgroup(q8, 2) == std::vector<elem>{0, 2});
}

TEST_CASE("census of Q(8), Z(12), D(8)") {
  Census q8 = census(quaternion_generalized(8));
  CHECK(q8.cyclic_count == 5);
  CHECK(q8.involution_count == 1);
  CHECK(q8.exponent == 4);
  std::vector<std::pair<std::size_t, std::pair<elem, std::size_t>>> q8_rows = {
      {1, {0, 1}}, {2, {2, 1}}, {4, {1, 2}}, {4, {4, 2}}, {4, {5, 2}},
  };
  CHECK(class_rows(q8) == q8_rows);
  CHECK(q8.order_profile == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {4, 6}});

  Census z12 = census(cyclic(12));
  CHECK(z12.cyclic_count == 6);
  CHECK(z12.involution_count == 1);
  CHECK(z12.exponent == 12);
  std::vector<std::pair<std::size_t, std::pair<elem, std::size_t>>> z12_rows = {
      {1, {0, 1}}, {2, {6, 1}}, {3, {4, 2}}, {4, {3, 2}}, {6, {2, 2}}, {12, {1, 4}},
  };
  CHECK(class_rows(z12) == z12_rows);

  Census d8 = census(dihedral(8));
  CHECK(d8.cyclic_count == 7);
  CHECK(d8.involution_count == 5);
  CHECK(d8.exponent == 4);
  std::vector<std::pair<std::size_t, std::pair<elem, std::size_t>>> d8_rows = {
      {1, {0, 1}}, {2, {2, 1}}, {2, {4, 1}}, {2, {5, 1}}, {2, {6, 1}}, {2, {7, 1}}, {4, {1, 2}},
  };
  CHECK(class_rows(d8) == d8_rows);
}

TEST_CASE("totient bookkeeping") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);

  Group q8 = quaternion_generalized(8);
  CHECK(phi_sum_count(q8) == ExactFraction::whole(5));

  Group z12 = cyclic(12);
  CHECK(count_elements_of_order(z12, 12) == 4);
  CHECK(count_elements_of_order(z12, 5) == 0);
  CHECK(involution_count(dihedral(8)) == 5);
  CHECK(exponent(z12) == 12);
  CHECK(exponent(dihedral(8)) == 4);
}

TEST_CASE("exact fractions") {
  ExactFraction half(1, 2);
  ExactFraction third(1, 3);
  CHECK((half + third) == ExactFraction(5, 6));
  CHECK((half - third) == ExactFraction(1, 6));
  CHECK((half * third) == ExactFraction(1, 6));
  CHECK(ExactFraction(4, 8) == half);
  CHECK(ExactFraction(-1, -2) == half);
  CHECK(ExactFraction(1, -2) == ExactFraction(-1, 2));
  CHECK(half.to_string() == "1/2");
  CHECK(ExactFraction::whole(3).to_string() == "3");
  CHECK(ExactFraction::whole(3).is_integer());
  CHECK(!half.is_integer());
  CHECK_KIND(ExactFraction(1, 0), BadParameter);
}

TEST_CASE("subgroup predicates and closure") {
  Group d8 = dihedral(8);
  std::vector<elem> rotations = {0, 1, 2, 3};
  CHECK(is_subgroup(d8, rotations));
  CHECK(is_normal(d8, rotations));

  std::vector<elem> reflection = {0, 4};
  CHECK(is_subgroup(d8, reflection));
  CHECK(!is_normal(d8, reflection));

  CHECK(!is_subgroup(d8, std::vector<elem>{0, 1}));     // not closed
  CHECK(!is_subgroup(d8, std::vector<elem>{1, 2, 3}));  // no identity
  CHECK(!is_subgroup(d8, std::vector<elem>{}));

  CHECK(generated_subgroup(d8, {1}) == rotations);
  CHECK(generated_subgroup(d8, {1, 4}).size() == 8);
  CHECK(generated_subgroup(d8, {}) == std::vector<elem>{0});
  CHECK_KIND(generated_subgroup(d8, {9}), OutOfRangeEntry);
}

TEST_CASE("center, derived subgroup, abelianization") {
  CHECK(center(dihedral(8)) == std::vector<elem>{0, 2});
  CHECK(center(quaternion_generalized(8)) == std::vector<elem>{0, 2});
  CHECK(derived_subgroup(quaternion_generalized(8)) == std::vector<elem>{0, 2});

  Group s4 = from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  CHECK(s4.order() == 24);
  CHECK(derived_subgroup(s4).size() == 12);

  CHECK(abelianization_invariants(dihedral(8)) == std::vector<std::size_t>{2, 2});
  CHECK(abelianization_invariants(quaternion_generalized(8)) == std::vector<std::size_t>{2, 2});
  CHECK(abelianization_invariants(dihedral(6)) == std::vector<std::size_t>{2});
  CHECK(abelianization_invariants(cyclic(12)) == std::vector<std::size_t>{12});
  CHECK(abelianization_invariants(cyclic(1)).empty());

  Group a4 = from_permutations(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
  CHECK(a4.order() == 12);
  CHECK(abelianization_invariants(a4) == std::vector<std::size_t>{3});

  Group pauli = eval_expr("sdp(EA(2,2),Z(4),gen 1 -> (2 3))");
  CHECK(abelianization_invariants(pauli) == std::vector<std::size_t>{2, 4});
  CHECK(abelianization_invariants(direct_product(cyclic(4), cyclic(4))) ==
        std::vector<std::size_t>{4, 4});
}

TEST_CASE("quotient groups") {
  Group q8 = quaternion_generalized(8);
  Group v4 = quotient_group(q8, center(q8));
  CHECK(v4.order() == 4);
  Census c = census(v4);
  CHECK(c.cyclic_count == 4);
  CHECK(c.involution_count == 3);
  CHECK(c.exponent == 2);

  Group d8 = dihedral(8);
  CHECK_KIND(quotient_group(d8, std::vector<elem>{0, 4}), BadParameter);
}

TEST_CASE("census of the trivial group") {
  Census c = census(cyclic(1));
  CHECK(c.cyclic_count == 1);
  CHECK(c.involution_count == 0);
  CHECK(c.exponent == 1);
  CHECK(c.classes.size() == 1);
  CHECK(c.classes[0].subgroup_order == 1);
  CHECK(c.classes[0].size == 1);
}
