#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewlab/brace.hpp"

namespace skewlab {

// One representative per isomorphism class of groups of order n, generated
// by backtracking over Cayley tables (identity pinned at index 0) with
// closure propagation; deduplicated by canonical relabelling. n <= 8.
std::vector<FiniteGroup> enumerate_groups(int n);

// All skew braces with the given additive table, up to brace isomorphism.
// Two independent strategies; both outputs are canonical-key sets and the
// acceptance sweep requires them to be identical.
enum class BraceSearchStrategy {
  MulTableBacktracking,   // cells of the ∘ table with Latin/assoc/distrib
                          // propagation
  LambdaFunctionSearch,   // maps B -> Aut(B,+) with the crossed-homomorphism
                          // condition, mul reconstructed
};
std::vector<FiniteSkewBrace> enumerate_braces_on_group(
    const FiniteGroup& add, BraceSearchStrategy strategy);

// Bijection fixing 0 preserving both tables, by backtracking with
// per-element invariant pruning.
bool brace_isomorphic(const FiniteSkewBrace& b1, const FiniteSkewBrace& b2);

// Lexicographically minimal concatenated (add, mul) tables over all
// relabellings fixing the identity at 0.
std::vector<std::uint8_t> canonical_key(const FiniteSkewBrace& b);

struct BraceCatalogEntry {
  int order = 0;
  FiniteSkewBrace brace;
  std::vector<std::uint8_t> canonical_key;
};

// Full catalog for all orders <= max_order (<= 8), deterministically
// ordered by (order, canonical key).
std::vector<BraceCatalogEntry> build_catalog(int max_order);

}  // namespace skewlab
