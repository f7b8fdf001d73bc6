#include "skewlab/subbrace.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace skewlab {

namespace {

long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a > LLONG_MAX / b) return LLONG_MAX;
  return a * b;
}

long long sat_pow(long long k, long long t) {
  long long r = 1;
  for (long long i = 0; i < t; ++i) r = sat_mul(r, k);
  return r;
}

long long sat_factorial(long long k) {
  long long r = 1;
  for (long long i = 2; i <= k; ++i) r = sat_mul(r, i);
  return r;
}

std::vector<int> transversal(const FiniteGroup& g, const ElementSet& sub,
                             std::mt19937_64* rng) {
  if (!rng) return coset_transversal(g, sub);
  std::vector<char> covered(g.order, 0);
  std::vector<int> reps;
  for (int a = 0; a < g.order; ++a) {
    if (covered[a]) continue;
    std::vector<int> coset;
    sub.for_each([&](int h) {
      int m = g.op(a, h);
      covered[m] = 1;
      coset.push_back(m);
    });
    reps.push_back(coset[(*rng)() % coset.size()]);
  }
  return reps;
}

}  // namespace

ElementSet add_closure(const FiniteSkewBrace& b, const ElementSet& s) {
  return subgroup_closure(b.add, s);
}

ElementSet mul_closure(const FiniteSkewBrace& b, const ElementSet& s) {
  return subgroup_closure(b.mul, s);
}

SubBraceHandle subbrace_closure(const FiniteSkewBrace& b,
                                const ElementSet& s) {
  ElementSet cur = s;
  cur.set(b.zero());
  for (;;) {
    ElementSet next = subgroup_closure(b.mul, subgroup_closure(b.add, cur));
    if (next == cur) break;
    cur = next;
  }
  return SubBraceHandle{&b, cur};
}

SubBraceHandle make_subbrace(const FiniteSkewBrace& b, const ElementSet& s) {
  if (!is_subbrace(b, s))
    throw ValidationError(Violation::InvalidSubbrace,
                          "set " + s.to_string() + " is not a sub skew brace");
  return SubBraceHandle{&b, s};
}

bool is_subbrace(const FiniteSkewBrace& b, const ElementSet& s) {
  if (!is_subgroup(b.add, s)) return false;
  bool ok = true;
  s.for_each([&](int a) {
    if (!ok) return;
    if (!s.test(b.bar(a))) {
      ok = false;
      return;
    }
    s.for_each([&](int x) {
      if (ok && !s.test(b.circ(a, x))) ok = false;
    });
  });
  return ok;
}

bool is_left_ideal(const FiniteSkewBrace& b, const ElementSet& s) {
  if (!is_subgroup(b.add, s)) return false;
  for (int a = 0; a < b.order; ++a) {
    bool ok = true;
    s.for_each([&](int x) {
      if (ok && !s.test(b.lambda(a, x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_strong_left_ideal(const FiniteSkewBrace& b, const ElementSet& s) {
  return is_left_ideal(b, s) && is_normal_subgroup(b.add, s);
}

bool is_ideal(const FiniteSkewBrace& b, const ElementSet& s) {
  return is_strong_left_ideal(b, s) && is_normal_subgroup(b.mul, s);
}

ElementSet strong_left_ideal_closure(const FiniteSkewBrace& b,
                                     const ElementSet& s) {
  ElementSet gens(b.order);
  s.for_each([&](int x) {
    for (int a = 0; a < b.order; ++a)
      for (int p = 0; p < b.order; ++p) gens.set(theta_of(b, a, p, x));
  });
  if (gens.empty()) gens.set(b.zero());
  return subgroup_closure(b.add, gens);
}

ElementSet dietzmann_closure(const FiniteSkewBrace& b, const ElementSet& s) {
  // full θ-orbits of the seeds, then alternate span/orbit to a fixpoint
  ElementSet cur(b.order);
  cur.set(b.zero());
  s.for_each([&](int x) { cur = cur | theta_orbit(b, x); });
  for (;;) {
    ElementSet spanned = subgroup_closure(b.add, cur);
    ElementSet next = spanned;
    spanned.for_each([&](int x) {
      for (int a = 0; a < b.order; ++a)
        for (int p = 0; p < b.order; ++p) next.set(theta_of(b, a, p, x));
    });
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

int index_add(const FiniteSkewBrace& b, const SubBraceHandle& a) {
  return coset_count(b.add, a.members);
}

int index_mul(const FiniteSkewBrace& b, const SubBraceHandle& a) {
  return coset_count(b.mul, a.members);
}

ElementSet sli_in_subbrace(const FiniteSkewBrace& b, const SubBraceHandle& a,
                           std::mt19937_64* rng) {
  if (!is_subbrace(b, a.members))
    throw ValidationError(Violation::InvalidSubbrace,
                          "sli_in_subbrace needs a sub skew brace");
  const ElementSet& A = a.members;

  // stage 1: L1 = ∩_{t in T} λ_t(A), T a multiplicative transversal of A
  ElementSet l1 = ElementSet::full(b.order);
  for (int t : transversal(b.mul, A, rng)) {
    ElementSet img(b.order);
    A.for_each([&](int x) { img.set(b.lambda(t, x)); });
    l1 = l1 & img;
  }

  // stage 2: additive normal core of L1 over an additive transversal
  ElementSet core = ElementSet::full(b.order);
  for (int s : transversal(b.add, l1, rng)) {
    ElementSet conj(b.order);
    l1.for_each([&](int x) { conj.set(b.plus(b.plus(s, x), b.neg(s))); });
    core = core & conj;
  }
  return core;
}

ElementSet ideal_in_subbrace_two_sided(const FiniteSkewBrace& b,
                                       const SubBraceHandle& a,
                                       std::mt19937_64* rng) {
  if (!is_two_sided(b))
    throw ValidationError(Violation::NotTwoSided,
                          "construction requires a two-sided brace");
  ElementSet l = sli_in_subbrace(b, a, rng);
  ElementSet ideal = ElementSet::full(b.order);
  for (int t : transversal(b.mul, l, rng)) {
    ElementSet conj(b.order);
    int tb = b.bar(t);
    l.for_each([&](int x) { conj.set(b.circ(b.circ(tb, x), t)); });
    ideal = ideal & conj;
  }
  return ideal;
}

ElementSet gens_to_group_gens(const FiniteSkewBrace& b, const ElementSet& t) {
  if (subbrace_closure(b, t).members != ElementSet::full(b.order))
    throw ValidationError(Violation::NotGenerating,
                          "set does not generate the brace");
  ElementSet tp(b.order);
  t.for_each([&](int x) {
    for (int a = 0; a < b.order; ++a) tp.set(b.lambda(a, x));
  });
  ElementSet u = tp;
  tp.for_each([&](int x) { u.set(b.neg(x)); });
  return u;
}

BoundReport verify_lamf_bound(const FiniteSkewBrace& b,
                              const ElementSet& generators) {
  if (add_closure(b, generators) != ElementSet::full(b.order))
    throw ValidationError(Violation::NotAdditivelyGenerating,
                          "generators do not span (B,+)");
  ElementSet inter = ElementSet::full(b.order);
  long long product = 1, kmax = 1, t = 0;
  generators.for_each([&](int x) {
    inter = inter & stab_lambda(b, x);
    long long osz = lambda_orbit(b, x).count();
    product = sat_mul(product, osz);
    kmax = std::max(kmax, osz);
    ++t;
  });
  if (inter != ker_lambda(b))
    throw ValidationError(Violation::IllDefined,
                          "ker λ != intersection of λ-stabilizers");
  BoundReport r;
  r.value = coset_count(b.mul, inter);
  r.orbit_bound = product;
  r.power_bound = sat_pow(kmax, t);
  r.holds = r.value <= r.orbit_bound && r.orbit_bound <= r.power_bound;
  return r;
}

BoundReport verify_thetafg_bound(const FiniteSkewBrace& b,
                                 const ElementSet& generators) {
  if (add_closure(b, generators) != ElementSet::full(b.order))
    throw ValidationError(Violation::NotAdditivelyGenerating,
                          "generators do not span (B,+)");
  long long product = 1, kmax = 1, t = 0;
  generators.for_each([&](int x) {
    long long osz = theta_orbit(b, x).count();
    product = sat_mul(product, osz);
    kmax = std::max(kmax, osz);
    ++t;
  });
  BoundReport r;
  r.value = coset_count(b.add, soc(b));
  r.orbit_bound = product;
  r.power_bound = sat_pow(kmax, t);
  r.holds = r.value <= r.orbit_bound && r.orbit_bound <= r.power_bound;
  return r;
}

BoundReport verify_oversoc_bound(const FiniteSkewBrace& b) {
  long long nprime = coset_count(b.mul, ker_lambda(b));
  long long m = coset_count(b.add, center_add(b));
  BoundReport r;
  r.value = 0;
  for (int c = 0; c < b.order; ++c)
    r.value = std::max(r.value, (long long)theta_orbit(b, c).count());
  r.orbit_bound = sat_mul(m, nprime);
  r.power_bound = r.orbit_bound;
  r.holds = r.value <= r.orbit_bound;
  return r;
}

namespace {

long long permutation_order(const std::vector<int>& perm) {
  int n = (int)perm.size();
  std::vector<char> seen(n, 0);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

}  // namespace

BoundReport verify_lambda_order_bound(const FiniteSkewBrace& b) {
  long long k = 1;
  for (int c = 0; c < b.order; ++c)
    k = std::max(k, (long long)theta_orbit(b, c).count());
  BoundReport r;
  r.orbit_bound = k;
  r.power_bound = sat_factorial(k);
  r.value = 0;
  for (int a = 0; a < b.order; ++a) {
    std::vector<int> row(b.lam.begin() + a * b.order,
                         b.lam.begin() + (a + 1) * b.order);
    r.value = std::max(r.value, permutation_order(row));
  }
  r.holds = r.value <= r.power_bound;
  return r;
}

BoundReport verify_bfc_exponent(const FiniteGroup& g) {
  long long k = 1;
  for (int x = 0; x < g.order; ++x)
    k = std::max(k, (long long)conjugacy_class(g, x).count());
  FiniteGroup q = quotient_group(g, group_center(g));
  BoundReport r;
  r.value = group_exponent(q);
  r.orbit_bound = k;
  r.power_bound = sat_factorial(k);
  r.holds = r.power_bound % r.value == 0;
  return r;
}

ElementSet stab_lambda_set(const FiniteSkewBrace& b, const ElementSet& h) {
  if (!is_subgroup(b.add, h))
    throw ValidationError(Violation::NotAddSubgroup,
                          "H must be an additive subgroup");
  ElementSet out(b.order);
  for (int a = 0; a < b.order; ++a) {
    ElementSet img(b.order);
    h.for_each([&](int x) { img.set(b.lambda(a, x)); });
    if (img == h) out.set(a);
  }
  return out;
}

ElementSet pstab(const FiniteSkewBrace& b, const ElementSet& h) {
  if (!is_subgroup(b.add, h))
    throw ValidationError(Violation::NotAddSubgroup,
                          "H must be an additive subgroup");
  ElementSet out(b.order);
  for (int a = 0; a < b.order; ++a) {
    bool fixes = true;
    h.for_each([&](int x) {
      if (fixes && b.lambda(a, x) != x) fixes = false;
    });
    if (fixes) out.set(a);
  }
  return out;
}

QuotientEmbeddingReport quotient_embedding_check(const FiniteSkewBrace& b,
                                                 const ElementSet& h) {
  ElementSet st = stab_lambda_set(b, h);
  ElementSet ps = pstab(b, h);
  QuotientEmbeddingReport rep;
  rep.stab_size = st.count();
  rep.pstab_size = ps.count();
  rep.pstab_normal = true;
  st.for_each([&](int s) {
    if (!rep.pstab_normal) return;
    ps.for_each([&](int p) {
      if (rep.pstab_normal && !ps.test(b.circ(b.circ(s, p), b.bar(s))))
        rep.pstab_normal = false;
    });
  });
  FiniteGroup stg = subgroup_as_group(b.mul, st);
  (void)stg;
  rep.quotient_order = rep.stab_size / rep.pstab_size;
  rep.aut_order = count_automorphisms(subgroup_as_group(b.add, h));
  rep.divides = rep.quotient_order != 0 &&
                rep.aut_order % (unsigned long long)rep.quotient_order == 0;
  return rep;
}

B2GenReport b2_coset_generators(const FiniteSkewBrace& b,
                                std::mt19937_64* rng) {
  std::vector<int> xs = transversal(b.mul, ker_lambda(b), rng);
  std::vector<int> ys = transversal(b.add, fix_set(b), rng);
  ElementSet gens(b.order);
  for (int x : xs)
    for (int y : ys) gens.set(star(b, x, y));
  B2GenReport rep;
  rep.generated = subgroup_closure(b.add, gens);
  rep.expected = star_span(b);
  rep.holds = rep.generated == rep.expected;
  return rep;
}

std::vector<SubBraceHandle> enumerate_subbraces(const FiniteSkewBrace& b) {
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> queue;
  ElementSet base = subbrace_closure(b, ElementSet(b.order)).members;
  seen.insert(base);
  queue.push_back(base);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    ElementSet s = queue[qi];
    for (int x = 0; x < b.order; ++x) {
      if (s.test(x)) continue;
      ElementSet grown = s;
      grown.set(x);
      ElementSet closed = subbrace_closure(b, grown).members;
      if (seen.insert(closed).second) queue.push_back(closed);
    }
  }
  std::sort(queue.begin(), queue.end(), [](const ElementSet& a,
                                           const ElementSet& c) {
    if (a.count() != c.count()) return a.count() < c.count();
    return a < c;
  });
  std::vector<SubBraceHandle> out;
  out.reserve(queue.size());
  for (auto& s : queue) out.push_back(SubBraceHandle{&b, s});
  return out;
}

}  // namespace skewlab
