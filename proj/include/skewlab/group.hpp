#pragma once

#include <cstdint>
#include <vector>

#include "skewlab/element_set.hpp"
#include "skewlab/errors.hpp"

namespace skewlab {

// Finite group on the carrier {0,...,order-1}, given by its full Cayley
// table. Immutable after validation; all queries are pure table lookups.
struct FiniteGroup {
  int order = 0;
  std::vector<int> table;  // row-major, table[a*order+b] = a·b
  int identity = 0;
  std::vector<int> inv;

  int op(int a, int b) const { return table[a * order + b]; }
};

// Checks Latin-square, identity and associativity on all triples; computes
// identity and inverses. Throws ValidationError naming the first violation.
FiniteGroup validate_group(int order, std::vector<int> table);
FiniteGroup validate_group(const std::vector<std::vector<int>>& rows);

bool is_abelian(const FiniteGroup& g);
ElementSet group_center(const FiniteGroup& g);
ElementSet conjugacy_class(const FiniteGroup& g, int x);
int element_order(const FiniteGroup& g, int x);
std::vector<int> element_order_multiset(const FiniteGroup& g);  // sorted

// Least subgroup containing seed, by worklist closure.
ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed);
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);
bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s);

// Number of left cosets a·H, computed by explicit partition (not division).
int coset_count(const FiniteGroup& g, const ElementSet& subgroup);
// Least-index representative per left coset, in first-seen order of sweep.
std::vector<int> coset_transversal(const FiniteGroup& g,
                                   const ElementSet& subgroup);

// The opposite group (transposed table).
FiniteGroup transpose(const FiniteGroup& g);

// Relabels a subgroup onto {0..k-1} (members in increasing index order).
// to_sub, when given, receives the carrier->subgroup index map (-1 outside).
FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElementSet& members,
                              std::vector<int>* to_sub = nullptr);

// Quotient by a normal subgroup; cosets labelled by least member, relabelled
// to {0..k-1} in increasing order of that representative.
FiniteGroup quotient_group(const FiniteGroup& g, const ElementSet& normal);

long long group_exponent(const FiniteGroup& g);

// |Aut(g)| by generator-image backtracking. Intended for order <= 64.
unsigned long long count_automorphisms(const FiniteGroup& g);
std::vector<std::vector<int>> all_automorphisms(const FiniteGroup& g);

// Table constructors for the standard small groups used throughout.
FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup dihedral_group(int n);  // order 2n, n >= 1
FiniteGroup quaternion_group();     // Q8
FiniteGroup symmetric_group(int m); // order m!, m <= 5; lex-ordered perms

}  // namespace skewlab
