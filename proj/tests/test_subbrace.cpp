#include "doctest.h"
#include "skewlab/enumerate.hpp"
#include "skewlab/subbrace.hpp"

#include <random>

using namespace skewlab;

namespace {
constexpr int kT12 = 2, kC123 = 3, kC132 = 4;

ElementSet random_subset(int n, std::mt19937_64& rng) {
  ElementSet s(n);
  for (int i = 0; i < n; ++i)
    if (rng() & 1) s.set(i);
  return s;
}
}  // namespace

TEST_CASE("closures") {
  FiniteSkewBrace t = trivial_brace(cyclic_group(6));
  CHECK(add_closure(t, ElementSet(6)) == ElementSet::singleton(6, 0));
  CHECK(add_closure(t, ElementSet::of(6, {2})) == ElementSet::of(6, {0, 2, 4}));
  // trivial brace: subbrace closure is additive closure
  CHECK(subbrace_closure(t, ElementSet::of(6, {2})).members ==
        add_closure(t, ElementSet::of(6, {2})));

  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  CHECK(add_closure(b, ElementSet::of(6, {kT12, kC123})) ==
        ElementSet::full(6));
  CHECK(subbrace_closure(b, ElementSet::singleton(6, 0)).members ==
        ElementSet::singleton(6, 0));
}

TEST_CASE("subbrace closure is the least subbrace containing the seed") {
  std::mt19937_64 rng(7);
  for (const FiniteGroup& g : {symmetric_group(3), dihedral_group(3)}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    auto subs = enumerate_subbraces(b);
    for (int trial = 0; trial < 20; ++trial) {
      ElementSet seed = random_subset(b.order, rng);
      ElementSet closed = subbrace_closure(b, seed).members;
      CHECK(is_subbrace(b, closed));
      CHECK(seed.is_subset_of(closed));
      for (const SubBraceHandle& s : subs)
        if (seed.is_subset_of(s.members)) CHECK(closed.is_subset_of(s.members));
    }
  }
}

TEST_CASE("predicate hierarchy on opTriv(S3)") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  ElementSet zero = ElementSet::singleton(6, 0);
  ElementSet full = ElementSet::full(6);
  for (const ElementSet& s : {zero, full}) {
    CHECK(is_subbrace(b, s));
    CHECK(is_left_ideal(b, s));
    CHECK(is_strong_left_ideal(b, s));
    CHECK(is_ideal(b, s));
  }
  ElementSet a3 = ElementSet::of(6, {0, kC123, kC132});
  CHECK(is_ideal(b, a3));  // normal subgroups of G are ideals of opTriv(G)
  ElementSet t = ElementSet::of(6, {0, kT12});
  CHECK(is_subbrace(b, t));
  CHECK(!is_left_ideal(b, t));  // conjugation moves a transposition
}

TEST_CASE("hierarchy implications hold for every subset") {
  std::mt19937_64 rng(11);
  FiniteSkewBrace b = op_trivial_brace(dihedral_group(4));
  for (int trial = 0; trial < 200; ++trial) {
    ElementSet s = random_subset(b.order, rng);
    if (is_ideal(b, s)) CHECK(is_strong_left_ideal(b, s));
    if (is_strong_left_ideal(b, s)) CHECK(is_left_ideal(b, s));
    // strong left ideal iff additive subgroup closed under theta
    if (is_subgroup(b.add, s)) {
      bool theta_inv = true;
      s.for_each([&](int x) {
        for (int p = 0; p < b.order && theta_inv; ++p)
          for (int a = 0; a < b.order && theta_inv; ++a)
            if (!s.test(theta_of(b, a, p, x))) theta_inv = false;
      });
      CHECK(is_strong_left_ideal(b, s) == theta_inv);
    }
  }
}

TEST_CASE("left ideal cosets coincide") {
  // for a left ideal L: a∘L = a+L as sets
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  ElementSet a3 = ElementSet::of(6, {0, kC123, kC132});
  REQUIRE(is_left_ideal(b, a3));
  for (int a = 0; a < 6; ++a) {
    ElementSet mul_coset(6), add_coset(6);
    a3.for_each([&](int l) {
      mul_coset.set(b.circ(a, l));
      add_coset.set(b.plus(a, l));
    });
    CHECK(mul_coset == add_coset);
  }
}

TEST_CASE("strong left ideal closure") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  CHECK(strong_left_ideal_closure(b, ElementSet::singleton(6, 0)) ==
        ElementSet::singleton(6, 0));
  CHECK(strong_left_ideal_closure(b, ElementSet::of(6, {kC123})) ==
        ElementSet::of(6, {0, kC123, kC132}));
  CHECK(strong_left_ideal_closure(b, ElementSet::of(6, {kT12})) ==
        ElementSet::full(6));
}

TEST_CASE("strong left ideal closure is a closure operator") {
  std::mt19937_64 rng(13);
  for (const FiniteGroup& g : {symmetric_group(3), quaternion_group()}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    for (int trial = 0; trial < 30; ++trial) {
      ElementSet s = random_subset(b.order, rng);
      ElementSet t = random_subset(b.order, rng);
      ElementSet cs = strong_left_ideal_closure(b, s);
      CHECK(s.is_subset_of(cs));                              // extensive
      CHECK(strong_left_ideal_closure(b, cs) == cs);          // idempotent
      ElementSet cst = strong_left_ideal_closure(b, s | t);   // monotone
      CHECK(cs.is_subset_of(cst));
      CHECK(is_strong_left_ideal(b, cs));
    }
  }
}

TEST_CASE("dietzmann closure equals the ideal closure") {
  std::mt19937_64 rng(17);
  for (const FiniteGroup& g : {symmetric_group(3), dihedral_group(4)}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    for (int x = 0; x < b.order; ++x) {
      ElementSet seed = ElementSet::singleton(b.order, x);
      CHECK(dietzmann_closure(b, seed) ==
            strong_left_ideal_closure(b, seed));
    }
    for (int trial = 0; trial < 10; ++trial) {
      ElementSet seed = random_subset(b.order, rng);
      CHECK(dietzmann_closure(b, seed) ==
            strong_left_ideal_closure(b, seed));
    }
  }
}

TEST_CASE("coset indices") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  SubBraceHandle whole = make_subbrace(b, ElementSet::full(6));
  CHECK(index_add(b, whole) == 1);
  CHECK(index_mul(b, whole) == 1);
  SubBraceHandle a3 = make_subbrace(b, ElementSet::of(6, {0, kC123, kC132}));
  CHECK(index_add(b, a3) == 2);
  CHECK(index_mul(b, a3) == 2);
}

TEST_CASE("sli_in_subbrace") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  SubBraceHandle whole = make_subbrace(b, ElementSet::full(6));
  CHECK(sli_in_subbrace(b, whole) == ElementSet::full(6));

  // core of a non-normal order-2 subgroup is trivial
  SubBraceHandle t = make_subbrace(b, ElementSet::of(6, {0, kT12}));
  CHECK(sli_in_subbrace(b, t) == ElementSet::singleton(6, 0));

  // trivial brace: the construction is the additive normal core
  FiniteSkewBrace ts3 = trivial_brace(symmetric_group(3));
  SubBraceHandle tt = make_subbrace(ts3, ElementSet::of(6, {0, kT12}));
  CHECK(sli_in_subbrace(ts3, tt) == ElementSet::singleton(6, 0));
  SubBraceHandle ta3 = make_subbrace(ts3, ElementSet::of(6, {0, kC123, kC132}));
  CHECK(sli_in_subbrace(ts3, ta3) == ElementSet::of(6, {0, kC123, kC132}));

  CHECK_THROWS_AS(
      (void)sli_in_subbrace(b, SubBraceHandle{&b, ElementSet::of(6, {kT12})}),
      ValidationError);
}

TEST_CASE("sli postconditions are transversal independent") {
  std::mt19937_64 rng(23);
  for (const FiniteGroup& g : {symmetric_group(3), dihedral_group(4)}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    for (const SubBraceHandle& a : enumerate_subbraces(b)) {
      for (int trial = 0; trial < 5; ++trial) {
        ElementSet l = sli_in_subbrace(b, a, &rng);
        CHECK(l.is_subset_of(a.members));
        CHECK(is_strong_left_ideal(b, l));
      }
    }
  }
}

TEST_CASE("two-sided ideal construction") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  SubBraceHandle t = make_subbrace(b, ElementSet::of(6, {0, kT12}));
  ElementSet i = ideal_in_subbrace_two_sided(b, t);
  CHECK(i == ElementSet::singleton(6, 0));
  SubBraceHandle whole = make_subbrace(b, ElementSet::full(6));
  CHECK(ideal_in_subbrace_two_sided(b, whole) == ElementSet::full(6));
}

TEST_CASE("gens_to_group_gens") {
  FiniteSkewBrace t = trivial_brace(cyclic_group(6));
  ElementSet u = gens_to_group_gens(t, ElementSet::of(6, {1}));
  CHECK(u == ElementSet::of(6, {1, 5}));
  CHECK(add_closure(t, u) == ElementSet::full(6));
  CHECK(mul_closure(t, u) == ElementSet::full(6));

  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  ElementSet u2 = gens_to_group_gens(b, ElementSet::of(6, {kT12, kC123}));
  // conjugation closure plus inverses: all transpositions and both 3-cycles
  CHECK(u2 == ElementSet::of(6, {1, 2, 3, 4, 5}));
  CHECK(add_closure(b, u2) == ElementSet::full(6));
  CHECK(mul_closure(b, u2) == ElementSet::full(6));

  CHECK_THROWS_AS((void)gens_to_group_gens(b, ElementSet::of(6, {kC123})),
                  ValidationError);
}

TEST_CASE("lamf bound on opTriv(S3) is tight") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  BoundReport r = verify_lamf_bound(b, ElementSet::of(6, {kT12, kC123}));
  CHECK(r.value == 6);        // ker λ = Z(S3) is trivial
  CHECK(r.orbit_bound == 6);  // class sizes 3 * 2
  CHECK(r.power_bound == 9);  // k^t = 3^2
  CHECK(r.holds);

  FiniteSkewBrace t = trivial_brace(cyclic_group(4));
  BoundReport rt = verify_lamf_bound(t, ElementSet::of(4, {1}));
  CHECK(rt.value == 1);
  CHECK(rt.orbit_bound == 1);
  CHECK(rt.holds);

  CHECK_THROWS_AS((void)verify_lamf_bound(b, ElementSet::of(6, {kC123})),
                  ValidationError);
}

TEST_CASE("thetafg and oversoc bounds on opTriv(S3)") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  BoundReport r = verify_thetafg_bound(b, ElementSet::of(6, {kT12, kC123}));
  CHECK(r.value == 6);        // Soc is trivial
  CHECK(r.orbit_bound == 6);  // theta classes of sizes 3 and 2
  CHECK(r.holds);

  BoundReport o = verify_oversoc_bound(b);
  CHECK(o.value == 3);         // largest theta orbit
  CHECK(o.orbit_bound == 36);  // m·n' = 6·6
  CHECK(o.holds);

  BoundReport l = verify_lambda_order_bound(b);
  CHECK(l.value == 2);  // conjugation by a transposition has order 2
  CHECK(l.power_bound == 6);  // k! = 3!
  CHECK(l.holds);
}

TEST_CASE("BFC exponent bound") {
  BoundReport r = verify_bfc_exponent(symmetric_group(3));
  CHECK(r.value == 6);          // S3/Z = S3 has exponent 6
  CHECK(r.power_bound == 6);    // k! = 3!
  CHECK(r.holds);
  CHECK(verify_bfc_exponent(quaternion_group()).holds);
  CHECK(verify_bfc_exponent(cyclic_group(8)).holds);
}

TEST_CASE("stabilizer of a subgroup and the Aut embedding") {
  FiniteSkewBrace b = op_trivial_brace(symmetric_group(3));
  ElementSet a3 = ElementSet::of(6, {0, kC123, kC132});
  CHECK(stab_lambda_set(b, a3) == ElementSet::full(6));
  CHECK(pstab(b, a3) == a3);  // centralizer of A3 in S3
  QuotientEmbeddingReport rep = quotient_embedding_check(b, a3);
  CHECK(rep.quotient_order == 2);
  CHECK(rep.aut_order == 2);  // Aut(Z3)
  CHECK(rep.holds());

  ElementSet zero = ElementSet::singleton(6, 0);
  QuotientEmbeddingReport rep0 = quotient_embedding_check(b, zero);
  CHECK(rep0.stab_size == 6);
  CHECK(rep0.pstab_size == 6);
  CHECK(rep0.quotient_order == 1);
  CHECK(rep0.holds());

  // H = carrier: pstab is ker λ, quotient embeds in Aut(B,+)
  QuotientEmbeddingReport repf =
      quotient_embedding_check(b, ElementSet::full(6));
  CHECK(repf.pstab_size == ker_lambda(b).count());
  CHECK(repf.holds());

  CHECK_THROWS_AS((void)pstab(b, ElementSet::of(6, {kT12})), ValidationError);
}

TEST_CASE("B^2 coset generators") {
  std::mt19937_64 rng(29);
  for (const FiniteGroup& g :
       {symmetric_group(3), quaternion_group(), cyclic_group(6)}) {
    FiniteSkewBrace b = op_trivial_brace(g);
    B2GenReport det = b2_coset_generators(b);
    CHECK(det.holds);
    for (int trial = 0; trial < 5; ++trial)
      CHECK(b2_coset_generators(b, &rng).holds);
  }
  FiniteSkewBrace t = trivial_brace(cyclic_group(4));
  B2GenReport r = b2_coset_generators(t);
  CHECK(r.expected == ElementSet::singleton(4, 0));
  CHECK(r.holds);
}

TEST_CASE("enumerate_subbraces") {
  FiniteSkewBrace p5 = trivial_brace(cyclic_group(5));
  CHECK(enumerate_subbraces(p5).size() == 2);  // {0} and B only

  FiniteSkewBrace z4 = trivial_brace(cyclic_group(4));
  auto subs4 = enumerate_subbraces(z4);
  REQUIRE(subs4.size() == 3);
  CHECK(subs4[0].members == ElementSet::singleton(4, 0));
  CHECK(subs4[1].members == ElementSet::of(4, {0, 2}));
  CHECK(subs4[2].members == ElementSet::full(4));

  FiniteSkewBrace s3 = op_trivial_brace(symmetric_group(3));
  CHECK(enumerate_subbraces(s3).size() == 6);  // = subgroups of S3
}
