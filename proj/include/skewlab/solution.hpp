#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skewlab/brace.hpp"

namespace skewlab {

// Finite non-degenerate set-theoretic solution on {0,...,size-1}.
// Convention: lam[x][y] = λ_x(y) and rho[x][y] = ρ_x(y), both row-indexed
// by the acting element, so the pair map is r(x,y) = (lam[x][y], rho[y][x]).
struct FiniteSolution {
  int size = 0;
  std::vector<int> lam;  // row-major
  std::vector<int> rho;

  int l(int x, int y) const { return lam[x * size + y]; }
  int p(int x, int y) const { return rho[x * size + y]; }
  std::pair<int, int> r(int x, int y) const { return {l(x, y), p(y, x)}; }
};

struct Partition {
  int size = 0;
  std::vector<int> block_id;  // contiguous ids from 0, first-seen order
  int block_count = 0;
};

class PartialResult : public CapExceeded {
 public:
  explicit PartialResult(std::string reason)
      : CapExceeded("partial result: " + std::move(reason)) {}
};

// Non-degeneracy (permutation rows), bijectivity of the pair map, and the
// braid relation on all triples. Throws naming the first violation.
FiniteSolution validate_solution(int size, std::vector<int> lam,
                                 std::vector<int> rho);
FiniteSolution validate_solution(const std::vector<std::vector<int>>& lam_rows,
                                 const std::vector<std::vector<int>>& rho_rows);

bool is_involutive(const FiniteSolution& x);

// r'(x,y) = (y, λ_y ρ_{λ_x^{-1}(y)}(x))
FiniteSolution derived_solution(const FiniteSolution& x);

struct Retract {
  FiniteSolution solution;
  std::vector<int> projection;  // original index -> class index
};

// Quotient by λ_x = λ_y ∧ ρ_x = ρ_y; throws IllDefined (an internal-bug
// signal, not a reachable input state) if representatives disagree.
Retract retract(const FiniteSolution& x);

// Sizes of iterated retracts until the size stabilizes or max_steps entries.
std::vector<int> retract_tower(const FiniteSolution& x, int max_steps = 64);

// r_B(a,b) = (λ_a(b), \bar{λ_a(b)} ∘ a ∘ b)
FiniteSolution brace_to_solution(const FiniteSkewBrace& b);

// Y and its complement both closed under the pair map; restricted rows are
// re-checked to be permutations of each part.
bool is_decomposition_factor(const FiniteSolution& x, const ElementSet& y);

struct MinimalFactor {
  ElementSet set;
  bool exact = true;  // false: upper bound only (orbit too large to split)
};

// Smallest decomposition factor containing x0: the orbit of x0 under the
// group generated by all rows is a factor and bounds the answer; within it
// exact bipartition search with unit propagation decides separability.
// Orbits larger than 16 points are returned as flagged upper bounds.
MinimalFactor minimal_factor(const FiniteSolution& x, int x0);

// Partition into minimal factors. Throws PartialResult if any orbit was too
// large for the exact search.
Partition decomposition_atoms(const FiniteSolution& x);

// Elements lying in a finite decomposition factor: the whole carrier for a
// finite solution. Kept for interface uniformity; the result is checked to
// be a decomposition factor.
ElementSet delta_f(const FiniteSolution& x);

// All decomposition factors by subset enumeration; size <= 12.
std::vector<ElementSet> brute_force_factors(const FiniteSolution& x);

// Permutation solution r(x,y) = (σ(y), τ(x)) with στ = τσ, built from
// seeded powers of a common permutation. Deterministic per (n, seed).
FiniteSolution random_solution(int n, std::uint64_t seed);

// Every valid solution on {0..n-1}, by exhaustive enumeration of (λ,ρ) row
// tables with Yang-Baxter pruning; n <= 4.
std::vector<FiniteSolution> all_solutions_of_size(int n);

}  // namespace skewlab
