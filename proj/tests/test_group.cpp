#include "doctest.h"
#include "skewlab/group.hpp"

#include <algorithm>

using namespace skewlab;

namespace {

// independent oracle: permutations of {0,1,2} in lexicographic order,
// composed directly; the group constructor must reproduce this table
std::vector<std::vector<int>> lex_perms3() {
  return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}

}  // namespace

TEST_CASE("order-2 group validates with identity and inverses") {
  FiniteGroup g = validate_group({{0, 1}, {1, 0}});
  CHECK(g.identity == 0);
  CHECK(g.inv == std::vector<int>{0, 1});
  CHECK(is_abelian(g));
}

TEST_CASE("repeated entry is rejected as NotLatinSquare") {
  try {
    validate_group({{0, 1}, {1, 1}});
    FAIL("expected NotLatinSquare");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::NotLatinSquare);
    CHECK(e.witness_a() == 1);
  }
}

TEST_CASE("a loop of order 5 is rejected as NotAssociative") {
  // Latin square with identity 0; Lagrange rules out a group of order 5
  // containing an element of order 2, so associativity must fail
  std::vector<std::vector<int>> t = {{0, 1, 2, 3, 4},
                                     {1, 0, 3, 4, 2},
                                     {2, 3, 4, 0, 1},
                                     {3, 4, 1, 2, 0},
                                     {4, 2, 0, 1, 3}};
  try {
    (void)validate_group(t);
    FAIL("expected NotAssociative");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::NotAssociative);
  }
}

TEST_CASE("symmetric_group(3) matches direct permutation composition") {
  FiniteGroup s3 = symmetric_group(3);
  REQUIRE(s3.order == 6);
  CHECK(s3.identity == 0);
  auto ps = lex_perms3();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> comp(3);
      for (int x = 0; x < 3; ++x) comp[x] = ps[i][ps[j][x]];
      CHECK(ps[s3.op(i, j)] == comp);
    }
  CHECK(!is_abelian(s3));
  CHECK(group_center(s3).count() == 1);
  CHECK(element_order_multiset(s3) == std::vector<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("conjugacy classes of S3 have sizes 1, 2, 3") {
  FiniteGroup s3 = symmetric_group(3);
  std::vector<int> sizes;
  for (int x = 0; x < 6; ++x) sizes.push_back(conjugacy_class(s3, x).count());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("subgroup closure") {
  FiniteGroup z6 = cyclic_group(6);
  CHECK(subgroup_closure(z6, ElementSet(6)) == ElementSet::singleton(6, 0));
  CHECK(subgroup_closure(z6, ElementSet::of(6, {2})) ==
        ElementSet::of(6, {0, 2, 4}));
  FiniteGroup s3 = symmetric_group(3);
  // a transposition and a 3-cycle generate everything
  CHECK(subgroup_closure(s3, ElementSet::of(6, {2, 3})).count() == 6);
}

TEST_CASE("coset partition of S3 by A3") {
  FiniteGroup s3 = symmetric_group(3);
  ElementSet a3 = ElementSet::of(6, {0, 3, 4});
  REQUIRE(is_normal_subgroup(s3, a3));
  CHECK(coset_count(s3, a3) == 2);
  CHECK(coset_transversal(s3, a3)[0] == 0);
}

TEST_CASE("quotient of D4 by its center is Klein") {
  FiniteGroup d4 = dihedral_group(4);
  ElementSet z = group_center(d4);
  REQUIRE(z.count() == 2);
  FiniteGroup q = quotient_group(d4, z);
  CHECK(q.order == 4);
  CHECK(element_order_multiset(q) == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("standard constructors have the expected element orders") {
  CHECK(element_order_multiset(cyclic_group(8)) ==
        std::vector<int>{1, 2, 4, 4, 8, 8, 8, 8});
  CHECK(element_order_multiset(quaternion_group()) ==
        std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});
  CHECK(element_order_multiset(dihedral_group(4)) ==
        std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4});
  FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(element_order_multiset(klein) == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("automorphism counts of small groups") {
  CHECK(count_automorphisms(cyclic_group(6)) == 2);
  CHECK(count_automorphisms(symmetric_group(3)) == 6);
  CHECK(count_automorphisms(direct_product(cyclic_group(2),
                                           cyclic_group(2))) == 6);
  CHECK(count_automorphisms(cyclic_group(8)) == 4);
  CHECK(count_automorphisms(quaternion_group()) == 24);
  FiniteGroup z2cube = direct_product(
      direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  CHECK(count_automorphisms(z2cube) == 168);
}

TEST_CASE("transpose is the opposite group") {
  FiniteGroup z6 = cyclic_group(6);
  CHECK(transpose(z6).table == z6.table);
  FiniteGroup s3 = symmetric_group(3);
  CHECK(transpose(s3).table != s3.table);
  CHECK(transpose(transpose(s3)).table == s3.table);
}

TEST_CASE("group exponent") {
  CHECK(group_exponent(cyclic_group(6)) == 6);
  CHECK(group_exponent(symmetric_group(3)) == 6);
  CHECK(group_exponent(quaternion_group()) == 4);
}
