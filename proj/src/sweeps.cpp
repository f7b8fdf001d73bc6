#include "skewlab/sweeps.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "skewlab/families.hpp"
#include "skewlab/io.hpp"
#include "skewlab/solution.hpp"
#include "skewlab/subbrace.hpp"

namespace skewlab {

namespace {

std::string fmt_count(long long n, const char* what) {
  std::ostringstream os;
  os << n << " " << what;
  return os.str();
}

// a greedy small additive generating set, least-index-first
ElementSet greedy_add_generators(const FiniteSkewBrace& b) {
  ElementSet gens(b.order);
  ElementSet have = add_closure(b, gens);
  for (int x = 0; x < b.order && have.count() < b.order; ++x) {
    if (have.test(x)) continue;
    gens.set(x);
    have = add_closure(b, gens);
  }
  return gens;
}

SweepResult sweep_axioms() {
  SweepResult r{"axioms", true, ""};
  long long braces = 0, checks = 0;
  for (const auto& e : sweep_catalog()) {
    const FiniteSkewBrace& b = e.brace;
    ++braces;
    for (int a = 0; a < b.order; ++a)
      for (int x = 0; x < b.order; ++x) {
        if (b.circ(a, x) != b.plus(a, b.lambda(a, x))) {
          r.pass = false;
          r.detail = "a∘b != a+λ_a(b)";
          return r;
        }
        for (int y = 0; y < b.order; ++y) {
          ++checks;
          if (b.lambda(a, b.plus(x, y)) !=
              b.plus(b.lambda(a, x), b.lambda(a, y))) {
            r.pass = false;
            r.detail = "λ_a not additive";
            return r;
          }
          if (b.lam[b.circ(a, x) * b.order + y] !=
              b.lambda(a, b.lambda(x, y))) {
            r.pass = false;
            r.detail = "λ not a homomorphism";
            return r;
          }
        }
      }
  }
  r.detail = fmt_count(braces, "braces, ") + fmt_count(checks, "triples");
  return r;
}

SweepResult sweep_orbit_stabilizer() {
  SweepResult r{"orbit-stabilizer", true, ""};
  long long checks = 0;
  for (const auto& e : sweep_catalog()) {
    const FiniteSkewBrace& b = e.brace;
    long long n = b.order;
    for (int x = 0; x < b.order; ++x) {
      ++checks;
      if ((long long)lambda_orbit(b, x).count() * stab_lambda(b, x).count() !=
          n) {
        r.pass = false;
        r.detail = "λ orbit-stabilizer fails at order " +
                   std::to_string(b.order);
        return r;
      }
      if ((long long)theta_orbit(b, x).count() * stab_theta_size(b, x) !=
          n * n) {
        r.pass = false;
        r.detail = "θ orbit-stabilizer fails at order " +
                   std::to_string(b.order);
        return r;
      }
    }
  }
  r.detail = fmt_count(checks, "elements");
  return r;
}

SweepResult sweep_index() {
  SweepResult r{"index", true, ""};
  long long pairs = 0;
  for (const auto& e : sweep_catalog()) {
    const FiniteSkewBrace& b = e.brace;
    for (const SubBraceHandle& a : enumerate_subbraces(b)) {
      ++pairs;
      if (index_add(b, a) != index_mul(b, a)) {
        r.pass = false;
        r.detail = "index_add != index_mul at order " +
                   std::to_string(b.order) + ", subbrace " +
                   a.members.to_string();
        return r;
      }
    }
  }
  r.detail = fmt_count(pairs, "(brace, subbrace) pairs");
  return r;
}

SweepResult sweep_sli() {
  SweepResult r{"sli", true, ""};
  long long pairs = 0;
  for (const auto& e : sweep_catalog()) {
    const FiniteSkewBrace& b = e.brace;
    bool two_sided = is_two_sided(b);
    for (const SubBraceHandle& a : enumerate_subbraces(b)) {
      ++pairs;
      ElementSet l = sli_in_subbrace(b, a);
      if (!l.is_subset_of(a.members) || !is_strong_left_ideal(b, l)) {
        r.pass = false;
        r.detail = "sli output not a strong left ideal inside A";
        return r;
      }
      ElementSet again = sli_in_subbrace(b, SubBraceHandle{&b, l});
      if (again != l) {
        r.pass = false;
        r.detail = "sli construction not idempotent";
        return r;
      }
      if (two_sided) {
        ElementSet i = ideal_in_subbrace_two_sided(b, a);
        if (!i.is_subset_of(a.members) || !is_ideal(b, i)) {
          r.pass = false;
          r.detail = "two-sided ideal construction failed";
          return r;
        }
      }
    }
  }
  r.detail = fmt_count(pairs, "(brace, subbrace) pairs");
  return r;
}

SweepResult sweep_dietzmann() {
  SweepResult r{"dietzmann", true, ""};
  long long cases = 0;
  for (const auto& e : sweep_catalog()) {
    const FiniteSkewBrace& b = e.brace;
    for (int x = 0; x < b.order; ++x) {
      ++cases;
      ElementSet d = dietzmann_closure(b, ElementSet::singleton(b.order, x));
      ElementSet s =
          strong_left_ideal_closure(b, ElementSet::singleton(b.order, x));
      if (d != s || !is_strong_left_ideal(b, d) || !d.test(x)) {
        r.pass = false;
        r.detail = "closure mismatch at order " + std::to_string(b.order) +
                   ", seed " + std::to_string(x);
        return r;
      }
    }
  }
  r.detail = fmt_count(cases, "singleton seeds");
  return r;
}

SweepResult sweep_bounds() {
  SweepResult r{"bounds", true, ""};
  long long braces = 0;
  for (const auto& e : sweep_catalog()) {
    const FiniteSkewBrace& b = e.brace;
    ++braces;
    ElementSet gens = greedy_add_generators(b);
    if (!verify_lamf_bound(b, gens).holds) {
      r.pass = false;
      r.detail = "ker λ index bound fails at order " + std::to_string(b.order);
      return r;
    }
    if (!verify_thetafg_bound(b, gens).holds) {
      r.pass = false;
      r.detail = "socle index bound fails at order " + std::to_string(b.order);
      return r;
    }
    if (!verify_oversoc_bound(b).holds) {
      r.pass = false;
      r.detail = "θ-orbit m·n bound fails at order " + std::to_string(b.order);
      return r;
    }
    if (!verify_lambda_order_bound(b).holds) {
      r.pass = false;
      r.detail = "λ order k! bound fails at order " + std::to_string(b.order);
      return r;
    }
    for (const FiniteGroup* g : {&b.add, &b.mul}) {
      if (!verify_bfc_exponent(*g).holds) {
        r.pass = false;
        r.detail = "BFC exponent bound fails at order " +
                   std::to_string(b.order);
        return r;
      }
    }
  }
  r.detail = fmt_count(braces, "braces (incl. both groups per brace)");
  return r;
}

SweepResult sweep_b2() {
  SweepResult r{"b2", true, ""};
  long long checks = 0;
  std::mt19937_64 rng(0x5eedb2);
  for (const auto& e : sweep_catalog()) {
    const FiniteSkewBrace& b = e.brace;
    B2GenReport det = b2_coset_generators(b);
    ++checks;
    if (!det.holds) {
      r.pass = false;
      r.detail = "deterministic transversal fails at order " +
                 std::to_string(b.order);
      return r;
    }
    for (int k = 0; k < 5; ++k) {
      ++checks;
      if (!b2_coset_generators(b, &rng).holds) {
        r.pass = false;
        r.detail = "randomized transversal fails at order " +
                   std::to_string(b.order);
        return r;
      }
    }
  }
  r.detail = fmt_count(checks, "transversal draws");
  return r;
}

SweepResult sweep_solutions() {
  SweepResult r{"solutions", true, ""};
  long long braces = 0;
  for (const auto& e : sweep_catalog()) {
    const FiniteSkewBrace& b = e.brace;
    ++braces;
    FiniteSolution rb = brace_to_solution(b);  // validator-gated
    FiniteSolution der = derived_solution(rb);
    (void)der;
    Retract ret = retract(rb);
    // projection must be a solution morphism
    const std::vector<int>& p = ret.projection;
    for (int x = 0; x < rb.size; ++x)
      for (int y = 0; y < rb.size; ++y) {
        if (p[rb.l(x, y)] != ret.solution.l(p[x], p[y]) ||
            p[rb.p(x, y)] != ret.solution.p(p[x], p[y])) {
          r.pass = false;
          r.detail = "retract projection is not a morphism at order " +
                     std::to_string(b.order);
          return r;
        }
      }
  }
  r.detail = fmt_count(braces, "braces: r_B, derived, retract validated");
  return r;
}

namespace {

// atoms from a full factor list: atom(x) = ∩ { factors containing x }
Partition atoms_from_factors(int n, const std::vector<ElementSet>& factors) {
  Partition part;
  part.size = n;
  part.block_id.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (part.block_id[x] >= 0) continue;
    ElementSet atom = ElementSet::full(n);
    for (const ElementSet& f : factors)
      if (f.test(x)) atom = atom & f;
    atom.for_each([&](int y) { part.block_id[y] = part.block_count; });
    ++part.block_count;
  }
  return part;
}

bool same_partition(const Partition& a, const Partition& b) {
  if (a.size != b.size || a.block_count != b.block_count) return false;
  std::map<int, int> m;
  for (int i = 0; i < a.size; ++i) {
    auto it = m.find(a.block_id[i]);
    if (it == m.end())
      m[a.block_id[i]] = b.block_id[i];
    else if (it->second != b.block_id[i])
      return false;
  }
  return true;
}

bool decomposition_agrees(const FiniteSolution& s, std::string* why) {
  Partition fast = decomposition_atoms(s);
  std::vector<ElementSet> factors = brute_force_factors(s);
  Partition slow = atoms_from_factors(s.size, factors);
  if (!same_partition(fast, slow)) {
    *why = "atom partitions disagree (size " + std::to_string(s.size) + ")";
    return false;
  }
  // every union of atoms must be a factor; atoms must match minimal_factor
  for (int x = 0; x < s.size; ++x) {
    MinimalFactor mf = minimal_factor(s, x);
    if (!mf.exact || !is_decomposition_factor(s, mf.set)) {
      *why = "minimal_factor output is not a factor";
      return false;
    }
    for (const ElementSet& f : factors)
      if (f.test(x) && !mf.set.is_subset_of(f)) {
        *why = "minimal_factor not minimal";
        return false;
      }
  }
  return true;
}

}  // namespace

SweepResult sweep_decomposition() {
  SweepResult r{"decomposition", true, ""};
  long long cases = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const FiniteSolution& s : all_solutions_of_size(n)) {
      ++cases;
      std::string why;
      if (!decomposition_agrees(s, &why)) {
        r.pass = false;
        r.detail = why;
        return r;
      }
    }
  }
  std::mt19937_64 rng(0xa70315);
  for (int i = 0; i < 200; ++i) {
    int n = 5 + int(rng() % 6);  // sizes 5..10
    FiniteSolution s = random_solution(n, rng());
    ++cases;
    std::string why;
    if (!decomposition_agrees(s, &why)) {
      r.pass = false;
      r.detail = why;
      return r;
    }
  }
  r.detail = fmt_count(cases, "solutions (exhaustive ≤4 and 200 random)");
  return r;
}

SweepResult sweep_families() {
  SweepResult r{"families", true, ""};
  struct Claim {
    const char* id;
    long long radius;
    std::size_t cap;
  };
  const Claim claims[] = {
      {"cdinf-soc-2z", 1000, 10000},
      {"cdinf-torsion-odd", 1000, 10000},
      {"free2-orbit-le-2", 8, 10000},
      {"rosita-lambdaf", 20, 10000},
      {"rosita-ann-trivial", 20, 10000},
  };
  std::ostringstream detail;
  for (const Claim& c : claims) {
    WindowReport rep = fam_window_check(c.id, c.radius, c.cap);
    detail << c.id << ":" << rep.checked << " ";
    if (!rep.ok()) {
      r.pass = false;
      r.detail = std::string(c.id) + " counterexample " +
                 rep.first_counterexample;
      return r;
    }
  }
  r.detail = detail.str() + "elements checked, 0 counterexamples";
  return r;
}

SweepResult sweep_enumeration() {
  SweepResult r{"enumeration", true, ""};
  long long groups = 0, braces = 0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<FiniteGroup> gs = enumerate_groups(n);
    groups += (long long)gs.size();
    for (const FiniteGroup& g : gs) {
      auto a = enumerate_braces_on_group(
          g, BraceSearchStrategy::MulTableBacktracking);
      auto b = enumerate_braces_on_group(
          g, BraceSearchStrategy::LambdaFunctionSearch);
      braces += (long long)b.size();
      if (a.size() != b.size()) {
        r.pass = false;
        r.detail = "strategy counts differ on a group of order " +
                   std::to_string(n);
        return r;
      }
      for (std::size_t i = 0; i < a.size(); ++i)
        if (canonical_key(a[i]) != canonical_key(b[i])) {
          r.pass = false;
          r.detail = "strategy iso-class sets differ on a group of order " +
                     std::to_string(n);
          return r;
        }
    }
    bool prime = n >= 2;
    for (int d = 2; d < n; ++d)
      if (n % d == 0) prime = false;
    if (prime) {
      std::size_t count = 0;
      for (const FiniteGroup& g : gs)
        count += enumerate_braces_on_group(
                     g, BraceSearchStrategy::LambdaFunctionSearch)
                     .size();
      if (count != 1) {
        r.pass = false;
        r.detail = "prime order " + std::to_string(n) + " has " +
                   std::to_string(count) + " brace classes";
        return r;
      }
    }
  }
  // the five standard order-8 groups each appear exactly once
  std::vector<FiniteGroup> named;
  named.push_back(cyclic_group(8));
  named.push_back(direct_product(cyclic_group(4), cyclic_group(2)));
  named.push_back(direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                 cyclic_group(2)));
  named.push_back(dihedral_group(4));
  named.push_back(quaternion_group());
  std::vector<FiniteGroup> enumerated = enumerate_groups(8);
  for (const FiniteGroup& g : named) {
    int hits = 0;
    for (const FiniteGroup& h : enumerated)
      if (brace_isomorphic(trivial_brace(g), trivial_brace(h))) ++hits;
    if (hits != 1) {
      r.pass = false;
      r.detail = "a standard order-8 group is not uniquely enumerated";
      return r;
    }
  }
  r.detail = fmt_count(groups, "groups, ") + fmt_count(braces, "brace classes");
  return r;
}

SweepResult sweep_generic_forms() {
  SweepResult r{"generic-forms", true, ""};
  std::mt19937_64 rng(0xfa111e5);
  long long samples = 0;
  for (Family f : {Family::CDInf, Family::OpTrivDInf, Family::Rosita,
                   Family::Free2}) {
    for (int i = 0; i < 1000; ++i) {
      FamValue g = random_element(f, rng);
      FamValue h = random_element(f, rng);
      FamValue x = random_element(f, rng);
      ++samples;
      // λ closed form vs -g + g∘x
      if (!(fam_lambda(g, x) ==
            fam_add(fam_neg(g), fam_mul(g, x)))) {
        r.pass = false;
        r.detail = std::string("λ mismatch in ") + family_name(f);
        return r;
      }
      // θ closed form vs a + (-b + b∘x) - a
      FamValue generic_theta = fam_add(
          fam_add(g, fam_add(fam_neg(h), fam_mul(h, x))), fam_neg(g));
      if (!(fam_theta(g, h, x) == generic_theta)) {
        r.pass = false;
        r.detail = std::string("θ mismatch in ") + family_name(f);
        return r;
      }
      // skew distributivity g∘(h+x) = g∘h - g + g∘x
      FamValue lhs = fam_mul(g, fam_add(h, x));
      FamValue rhs = fam_add(fam_add(fam_mul(g, h), fam_neg(g)),
                             fam_mul(g, x));
      if (!(lhs == rhs)) {
        r.pass = false;
        r.detail = std::string("distributivity fails in ") + family_name(f);
        return r;
      }
    }
  }
  r.detail = fmt_count(samples, "samples (1000 per family)");
  return r;
}

}  // namespace

const std::vector<BraceCatalogEntry>& sweep_catalog() {
  static std::vector<BraceCatalogEntry> catalog = build_catalog(8);
  return catalog;
}

std::vector<std::string> sweep_names() {
  return {"axioms",   "orbit-stabilizer", "index",       "sli",
          "dietzmann", "bounds",          "b2",          "solutions",
          "decomposition", "families",    "enumeration", "generic-forms"};
}

SweepResult run_sweep(const std::string& name) {
  if (name == "axioms") return sweep_axioms();
  if (name == "orbit-stabilizer") return sweep_orbit_stabilizer();
  if (name == "index") return sweep_index();
  if (name == "sli") return sweep_sli();
  if (name == "dietzmann") return sweep_dietzmann();
  if (name == "bounds") return sweep_bounds();
  if (name == "b2") return sweep_b2();
  if (name == "solutions") return sweep_solutions();
  if (name == "decomposition") return sweep_decomposition();
  if (name == "families") return sweep_families();
  if (name == "enumeration") return sweep_enumeration();
  if (name == "generic-forms") return sweep_generic_forms();
  throw ValidationError(Violation::UnknownClaim,
                        "no sweep named '" + name + "'");
}

std::vector<SweepResult> run_all_sweeps() {
  std::vector<SweepResult> out;
  for (const std::string& n : sweep_names()) out.push_back(run_sweep(n));
  return out;
}

}  // namespace skewlab
