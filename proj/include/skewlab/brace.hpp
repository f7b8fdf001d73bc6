#pragma once

#include <vector>

#include "skewlab/group.hpp"

namespace skewlab {

// Finite skew brace on {0,...,order-1}: an additive and a multiplicative
// group table on the same carrier satisfying a∘(b+c) = a∘b - a + a∘c,
// with the lambda table lam[a][b] = -a + a∘b cached at validation.
// Immutable after validation; safe to share across threads.
struct FiniteSkewBrace {
  int order = 0;
  FiniteGroup add;
  FiniteGroup mul;
  std::vector<int> lam;  // row-major, lam[a*order+b]

  int plus(int a, int b) const { return add.op(a, b); }
  int neg(int a) const { return add.inv[a]; }
  int circ(int a, int b) const { return mul.op(a, b); }
  int bar(int a) const { return mul.inv[a]; }
  int zero() const { return add.identity; }
  int lambda(int a, int b) const { return lam[a * order + b]; }
};

// Full validation: shared identity, distributivity on all triples, lambda
// rows are additive automorphisms, lambda is a homomorphism of the
// multiplicative group into Aut(B,+).
FiniteSkewBrace validate_brace(FiniteGroup add, FiniteGroup mul);
FiniteSkewBrace validate_brace(const std::vector<std::vector<int>>& add_rows,
                               const std::vector<std::vector<int>>& mul_rows);

// Trivial brace (a∘b = a+b) and almost trivial brace opTriv (a+b := b·a,
// a∘b := a·b) on a group.
FiniteSkewBrace trivial_brace(const FiniteGroup& g);
FiniteSkewBrace op_trivial_brace(const FiniteGroup& g);

int lambda_of(const FiniteSkewBrace& b, int a, int x);
int theta_of(const FiniteSkewBrace& b, int a, int p, int x);  // a + λ_p(x) - a
int star(const FiniteSkewBrace& b, int a, int x);             // λ_a(x) - x
int star_op(const FiniteSkewBrace& b, int a, int x);  // star in opposite(b)

FiniteSkewBrace opposite(const FiniteSkewBrace& b);
bool is_two_sided(const FiniteSkewBrace& b);

ElementSet lambda_orbit(const FiniteSkewBrace& b, int x);
ElementSet theta_orbit(const FiniteSkewBrace& b, int x);
ElementSet stab_lambda(const FiniteSkewBrace& b, int x);
long long stab_theta_size(const FiniteSkewBrace& b, int x);

ElementSet ker_lambda(const FiniteSkewBrace& b);
ElementSet fix_set(const FiniteSkewBrace& b);
ElementSet center_add(const FiniteSkewBrace& b);
ElementSet center_mul(const FiniteSkewBrace& b);
ElementSet soc(const FiniteSkewBrace& b);
ElementSet ann(const FiniteSkewBrace& b);

// B^2 = additive subgroup generated by {a*b}; B^2_op the same in the
// opposite brace; B' generated by [B,B]_+ together with B^2.
ElementSet star_span(const FiniteSkewBrace& b);
ElementSet b2_op(const FiniteSkewBrace& b);
ElementSet commutator_ideal(const FiniteSkewBrace& b);

}  // namespace skewlab
