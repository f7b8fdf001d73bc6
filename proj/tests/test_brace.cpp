#include "doctest.h"
#include "skewlab/brace.hpp"

#include <algorithm>

using namespace skewlab;

// lexicographic permutation indices in symmetric_group(3):
// 0=e 1=(23) 2=(12) 3=(123) 4=(132) 5=(13), acting on letters {1,2,3}
namespace {
constexpr int kE = 0, kT12 = 2, kC123 = 3, kC132 = 4;
}

TEST_CASE("trivial brace has identity lambda") {
  FiniteSkewBrace b = trivial_brace(cyclic_group(2));
  for (int a = 0; a < 2; ++a)
    for (int x = 0; x < 2; ++x) CHECK(b.lambda(a, x) == x);
}

TEST_CASE("opTriv(S3) lambda is conjugation") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  const FiniteGroup& g = b.mul;  // plain S3
  for (int a = 0; a < 6; ++a)
    for (int x = 0; x < 6; ++x) {
      int conj = g.op(g.op(a, x), g.inv[a]);
      CHECK(b.lambda(a, x) == conj);
    }
  // (12)(123)(12)^{-1} = (132)
  CHECK(lambda_of(b, kT12, kC123) == kC132);
  // automorphisms fix the neutral element
  for (int a = 0; a < 6; ++a) CHECK(lambda_of(b, a, kE) == kE);
}

TEST_CASE("identity mismatch is rejected") {
  // both tables are groups, but the mul table has its identity at index 1
  try {
    validate_brace({{0, 1}, {1, 0}}, {{1, 0}, {0, 1}});
    FAIL("expected IdentityMismatch");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::IdentityMismatch);
  }
}

TEST_CASE("Z6 addition cannot pair with the S3 table") {
  try {
    validate_brace(cyclic_group(6), symmetric_group(3));
    FAIL("expected DistributivityFailure");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == Violation::DistributivityFailure);
  }
}

TEST_CASE("Z4 addition does pair with the Klein table") {
  // the unique Klein table on {0,1,2,3} with identity 0 forms a skew brace
  // with cyclic addition: lambda of an odd element is negation
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
  FiniteSkewBrace b = validate_brace(z4, klein);
  for (int x = 0; x < 4; ++x) {
    CHECK(b.lambda(1, x) == (4 - x) % 4);
    CHECK(b.lambda(2, x) == x);
    CHECK(b.lambda(3, x) == (4 - x) % 4);
  }
  CHECK(is_two_sided(b));
}

TEST_CASE("theta specializations") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  for (int p = 0; p < 6; ++p)
    for (int x = 0; x < 6; ++x) {
      CHECK(theta_of(b, 0, p, x) == b.lambda(p, x));
      for (int a = 0; a < 6; ++a)
        if (p == 0)
          CHECK(theta_of(b, a, 0, x) == b.plus(b.plus(a, x), b.neg(a)));
    }
  // trivial brace on an abelian group: theta is the identity
  FiniteSkewBrace t = trivial_brace(cyclic_group(6));
  for (int a = 0; a < 6; ++a)
    for (int p = 0; p < 6; ++p)
      for (int x = 0; x < 6; ++x) CHECK(theta_of(t, a, p, x) == x);
}

TEST_CASE("star vanishes on the identity") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  for (int a = 0; a < 6; ++a) {
    CHECK(star(b, a, 0) == 0);
    CHECK(star(b, 0, a) == 0);
  }
  FiniteSkewBrace t = trivial_brace(cyclic_group(6));
  for (int a = 0; a < 6; ++a)
    for (int x = 0; x < 6; ++x) CHECK(star(t, a, x) == 0);
}

TEST_CASE("star_op agrees with star of the opposite brace") {
  for (const FiniteGroup& g :
       {symmetric_group(3), cyclic_group(6), quaternion_group()}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    FiniteSkewBrace op = opposite(b);
    for (int a = 0; a < b.order; ++a)
      for (int x = 0; x < b.order; ++x)
        CHECK(star_op(b, a, x) == star(op, a, x));
  }
}

TEST_CASE("opposite is an involution") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  FiniteSkewBrace bb = opposite(opposite(b));
  CHECK(bb.add.table == b.add.table);
  CHECK(bb.mul.table == b.mul.table);
  // opposite of a trivial brace on an abelian group is itself
  FiniteSkewBrace t = trivial_brace(cyclic_group(4));
  CHECK(opposite(t).add.table == t.add.table);
  // opposite of the trivial brace on S3 is the almost trivial one
  FiniteSkewBrace ats3 = opposite(trivial_brace(symmetric_group(3)));
  for (int a = 0; a < 6; ++a)
    for (int x = 0; x < 6; ++x)
      CHECK(ats3.circ(a, x) == ats3.plus(x, a));
}

TEST_CASE("two-sidedness") {
  CHECK(is_two_sided(trivial_brace(symmetric_group(3))));
  CHECK(is_two_sided(op_trivial_brace(symmetric_group(3))));
  CHECK(is_two_sided(trivial_brace(cyclic_group(5))));
}

TEST_CASE("multiplicative conjugation respects both tables when two-sided") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  REQUIRE(is_two_sided(b));
  for (int g = 0; g < 6; ++g) {
    auto phi = [&](int x) { return b.circ(b.circ(b.bar(g), x), g); };
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) {
        CHECK(phi(b.plus(x, y)) == b.plus(phi(x), phi(y)));
        CHECK(phi(b.circ(x, y)) == b.circ(phi(x), phi(y)));
      }
  }
}

TEST_CASE("orbits of opTriv(S3) are conjugacy classes") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  CHECK(theta_orbit(b, kC123) == ElementSet::of(6, {kC123, kC132}));
  CHECK(lambda_orbit(b, kC123) == ElementSet::of(6, {kC123, kC132}));
  CHECK(theta_orbit(b, kT12).count() == 3);
  // trivial brace: lambda orbits are singletons
  FiniteSkewBrace t = trivial_brace(cyclic_group(6));
  for (int x = 0; x < 6; ++x)
    CHECK(lambda_orbit(t, x) == ElementSet::singleton(6, x));
}

TEST_CASE("theta orbit contains the lambda orbit and the additive class") {
  for (const FiniteGroup& g : {symmetric_group(3), quaternion_group()}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    for (int x = 0; x < b.order; ++x) {
      ElementSet to = theta_orbit(b, x);
      CHECK(lambda_orbit(b, x).is_subset_of(to));
      CHECK(conjugacy_class(b.add, x).is_subset_of(to));
    }
  }
}

TEST_CASE("orbit-stabilizer identities") {
  for (const FiniteGroup& g : {symmetric_group(3), quaternion_group()}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    long long n = b.order;
    for (int x = 0; x < b.order; ++x) {
      CHECK((long long)lambda_orbit(b, x).count() *
                stab_lambda(b, x).count() ==
            n);
      CHECK((long long)theta_orbit(b, x).count() * stab_theta_size(b, x) ==
            n * n);
    }
  }
  // trivial brace: stabilizer is everything
  FiniteSkewBrace t = trivial_brace(cyclic_group(6));
  CHECK(stab_lambda(t, 3) == ElementSet::full(6));
}

TEST_CASE("kernel, fix, socle and annihilator") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  CHECK(ker_lambda(b) == ElementSet::singleton(6, 0));  // Z(S3) is trivial
  CHECK(soc(b) == ElementSet::singleton(6, 0));
  CHECK(ann(b) == ElementSet::singleton(6, 0));
  CHECK(fix_set(b) == ElementSet::singleton(6, 0));

  FiniteSkewBrace t = trivial_brace(cyclic_group(6));
  CHECK(soc(t) == ElementSet::full(6));
  CHECK(ann(t) == ElementSet::full(6));
  CHECK(fix_set(t) == ElementSet::full(6));
}

TEST_CASE("fix is a trivial sub skew brace") {
  for (const FiniteGroup& g : {symmetric_group(3), dihedral_group(4)}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    ElementSet f = fix_set(b);
    CHECK(f.test(0));
    f.for_each([&](int a) {
      f.for_each([&](int x) {
        CHECK(f.test(b.plus(a, x)));
        CHECK(f.test(b.circ(a, x)));
        CHECK(b.plus(a, x) == b.circ(a, x));
      });
    });
  }
}

TEST_CASE("B^2 of opTriv(S3) is A3; commutator contains it") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  ElementSet a3 = ElementSet::of(6, {0, kC123, kC132});
  CHECK(star_span(b) == a3);
  CHECK(star_span(b).is_subset_of(commutator_ideal(b)));

  FiniteSkewBrace t = trivial_brace(symmetric_group(3));
  CHECK(star_span(t) == ElementSet::singleton(6, 0));
  // trivial brace: commutator ideal is the derived subgroup
  CHECK(commutator_ideal(t) == a3);
}

TEST_CASE("b2_op equals star_span of the opposite brace") {
  for (const FiniteGroup& g :
       {symmetric_group(3), quaternion_group(), cyclic_group(6)}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    CHECK(b2_op(b) == star_span(opposite(b)));
  }
}
