#pragma once

#include <random>
#include <vector>

#include "skewlab/brace.hpp"

namespace skewlab {

// Sub skew brace of a parent: an additive subgroup closed under ∘,
// multiplicative inverse and the λ-action of its own elements.
struct SubBraceHandle {
  const FiniteSkewBrace* parent = nullptr;
  ElementSet members;
};

ElementSet add_closure(const FiniteSkewBrace& b, const ElementSet& s);
ElementSet mul_closure(const FiniteSkewBrace& b, const ElementSet& s);
SubBraceHandle subbrace_closure(const FiniteSkewBrace& b,
                                const ElementSet& s);
SubBraceHandle make_subbrace(const FiniteSkewBrace& b, const ElementSet& s);

bool is_subbrace(const FiniteSkewBrace& b, const ElementSet& s);
bool is_left_ideal(const FiniteSkewBrace& b, const ElementSet& s);
bool is_strong_left_ideal(const FiniteSkewBrace& b, const ElementSet& s);
bool is_ideal(const FiniteSkewBrace& b, const ElementSet& s);

// Least strong left ideal containing s: additive span of the θ-images of s.
ElementSet strong_left_ideal_closure(const FiniteSkewBrace& b,
                                     const ElementSet& s);

// Same ideal via the orbit-then-span route: full θ-orbit of every seed
// element first, then alternating additive span / θ-image sweeps to a
// fixpoint. Must agree with strong_left_ideal_closure.
ElementSet dietzmann_closure(const FiniteSkewBrace& b, const ElementSet& s);

// Coset counts by explicit partition of the respective group.
int index_add(const FiniteSkewBrace& b, const SubBraceHandle& a);
int index_mul(const FiniteSkewBrace& b, const SubBraceHandle& a);

// Strong left ideal of finite index inside a sub skew brace, built by the
// two-stage intersection over transversals: L1 = ∩_t λ_t(A) over a
// multiplicative transversal, then the additive normal core of L1.
// Deterministic transversals use the least-element-index rule; pass an rng
// to draw random coset representatives instead.
ElementSet sli_in_subbrace(const FiniteSkewBrace& b, const SubBraceHandle& a,
                           std::mt19937_64* rng = nullptr);

// For two-sided braces: intersect the multiplicative conjugates of the
// strong left ideal to get an ideal of finite index inside A.
ElementSet ideal_in_subbrace_two_sided(const FiniteSkewBrace& b,
                                       const SubBraceHandle& a,
                                       std::mt19937_64* rng = nullptr);

// U = T' ∪ (-T') with T' the union of all λ-images of T; generates both
// groups whenever T generates the brace.
ElementSet gens_to_group_gens(const FiniteSkewBrace& b, const ElementSet& t);

struct BoundReport {
  long long value = 0;       // the measured index / orbit size
  long long orbit_bound = 0; // product-of-orbits (or m·n) bound
  long long power_bound = 0; // k^t or k! style bound
  bool holds = false;
};

// |B:ker λ| ≤ Π|[x_i]_λ| ≤ k^t for an additively generating set.
BoundReport verify_lamf_bound(const FiniteSkewBrace& b,
                              const ElementSet& generators);
// |B:Soc(B)| ≤ Π|[x_i]_θ| ≤ k^t for an additively generating set.
BoundReport verify_thetafg_bound(const FiniteSkewBrace& b,
                                 const ElementSet& generators);
// every θ-orbit has size ≤ m·n' with m = |B:Z(B,+)|, n' = |B:ker λ|.
BoundReport verify_oversoc_bound(const FiniteSkewBrace& b);
// every λ_b has multiplicative order ≤ k! with k = max θ-orbit size.
BoundReport verify_lambda_order_bound(const FiniteSkewBrace& b);
// group form: exponent of G/Z(G) divides k! with k = max class size.
BoundReport verify_bfc_exponent(const FiniteGroup& g);

ElementSet stab_lambda_set(const FiniteSkewBrace& b, const ElementSet& h);
ElementSet pstab(const FiniteSkewBrace& b, const ElementSet& h);

struct QuotientEmbeddingReport {
  long long stab_size = 0;
  long long pstab_size = 0;
  long long quotient_order = 0;
  unsigned long long aut_order = 0;
  bool pstab_normal = false;
  bool divides = false;
  bool holds() const { return pstab_normal && divides; }
};

// Stab_λ(H)/PStab(H) embeds into Aut(H,+): normality plus divisibility.
QuotientEmbeddingReport quotient_embedding_check(const FiniteSkewBrace& b,
                                                 const ElementSet& h);

struct B2GenReport {
  ElementSet generated;
  ElementSet expected;  // star_span(B)
  bool holds = false;
};

// add_closure({x_i * y_j}) over transversals of ker λ (multiplicative) and
// Fix(B) (additive) must equal B².
B2GenReport b2_coset_generators(const FiniteSkewBrace& b,
                                std::mt19937_64* rng = nullptr);

// All sub skew braces, by closure-extension search from {0}.
std::vector<SubBraceHandle> enumerate_subbraces(const FiniteSkewBrace& b);

}  // namespace skewlab
