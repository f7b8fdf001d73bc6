#include "skewlab/group.hpp"

#include <algorithm>
#include <numeric>

namespace skewlab {

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::NotLatinSquare: return "NotLatinSquare";
    case Violation::NotAssociative: return "NotAssociative";
    case Violation::NoIdentity: return "NoIdentity";
    case Violation::IdentityMismatch: return "IdentityMismatch";
    case Violation::DistributivityFailure: return "DistributivityFailure";
    case Violation::Degenerate: return "Degenerate";
    case Violation::NotBijective: return "NotBijective";
    case Violation::BraidFailure: return "BraidFailure";
    case Violation::IllDefined: return "IllDefined";
    case Violation::NotTwoSided: return "NotTwoSided";
    case Violation::InvalidSubbrace: return "InvalidSubbrace";
    case Violation::NotGenerating: return "NotGenerating";
    case Violation::NotAdditivelyGenerating: return "NotAdditivelyGenerating";
    case Violation::NotAddSubgroup: return "NotAddSubgroup";
    case Violation::UnsupportedQuery: return "UnsupportedQuery";
    case Violation::UnknownClaim: return "UnknownClaim";
  }
  return "Unknown";
}

FiniteGroup validate_group(int order, std::vector<int> table) {
  if (order <= 0 || (int)table.size() != order * order)
    throw ValidationError(Violation::NotLatinSquare, "table is not n x n");
  const int n = order;
  for (int v : table)
    if (v < 0 || v >= n)
      throw ValidationError(Violation::NotLatinSquare, "entry out of range");

  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      int v = table[i * n + j];
      if (seen[v])
        throw ValidationError(Violation::NotLatinSquare,
                              "repeated entry in row " + std::to_string(i), i,
                              j);
      seen[v] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      int v = table[i * n + j];
      if (seen[v])
        throw ValidationError(Violation::NotLatinSquare,
                              "repeated entry in column " + std::to_string(j),
                              i, j);
      seen[v] = 1;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = table[e * n + j] == j && table[j * n + e] == j;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0)
    throw ValidationError(Violation::NoIdentity, "no two-sided identity");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = table[a * n + b];
      for (int c = 0; c < n; ++c)
        if (table[ab * n + c] != table[a * n + table[b * n + c]])
          throw ValidationError(Violation::NotAssociative,
                                "(a·b)·c != a·(b·c) at (" + std::to_string(a) +
                                    "," + std::to_string(b) + "," +
                                    std::to_string(c) + ")",
                                a, b, c);
    }

  FiniteGroup g;
  g.order = n;
  g.table = std::move(table);
  g.identity = identity;
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table[a * n + b] == identity) g.inv[a] = b;
  return g;
}

FiniteGroup validate_group(const std::vector<std::vector<int>>& rows) {
  int n = (int)rows.size();
  std::vector<int> flat;
  flat.reserve(n * n);
  for (auto& r : rows) {
    if ((int)r.size() != n)
      throw ValidationError(Violation::NotLatinSquare, "ragged table");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate_group(n, std::move(flat));
}

bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order; ++a)
    for (int b = a + 1; b < g.order; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

ElementSet group_center(const FiniteGroup& g) {
  ElementSet z(g.order);
  for (int a = 0; a < g.order; ++a) {
    bool central = true;
    for (int b = 0; b < g.order && central; ++b)
      central = g.op(a, b) == g.op(b, a);
    if (central) z.set(a);
  }
  return z;
}

ElementSet conjugacy_class(const FiniteGroup& g, int x) {
  ElementSet cls(g.order);
  for (int a = 0; a < g.order; ++a)
    cls.set(g.op(g.op(a, x), g.inv[a]));
  return cls;
}

int element_order(const FiniteGroup& g, int x) {
  int p = x, k = 1;
  while (p != g.identity) {
    p = g.op(p, x);
    ++k;
  }
  return k;
}

std::vector<int> element_order_multiset(const FiniteGroup& g) {
  std::vector<int> out(g.order);
  for (int x = 0; x < g.order; ++x) out[x] = element_order(g, x);
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet subgroup_closure(const FiniteGroup& g, const ElementSet& seed) {
  ElementSet s(g.order);
  s.set(g.identity);
  std::vector<int> work;
  seed.for_each([&](int x) {
    if (!s.test(x)) {
      s.set(x);
      work.push_back(x);
    }
  });
  std::vector<int> mem = s.members();
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    // products with all current members, both sides, plus the inverse
    std::vector<int> snapshot = s.members();
    for (int y : snapshot) {
      for (int z : {g.op(x, y), g.op(y, x)}) {
        if (!s.test(z)) {
          s.set(z);
          work.push_back(z);
        }
      }
    }
    int xi = g.inv[x];
    if (!s.test(xi)) {
      s.set(xi);
      work.push_back(xi);
    }
  }
  (void)mem;
  return s;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.test(g.identity)) return false;
  bool ok = true;
  s.for_each([&](int a) {
    if (!ok) return;
    if (!s.test(g.inv[a])) {
      ok = false;
      return;
    }
    s.for_each([&](int b) {
      if (ok && !s.test(g.op(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_normal_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  for (int a = 0; a < g.order; ++a) {
    bool ok = true;
    s.for_each([&](int h) {
      if (ok && !s.test(g.op(g.op(a, h), g.inv[a]))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

int coset_count(const FiniteGroup& g, const ElementSet& subgroup) {
  return (int)coset_transversal(g, subgroup).size();
}

std::vector<int> coset_transversal(const FiniteGroup& g,
                                   const ElementSet& subgroup) {
  std::vector<char> covered(g.order, 0);
  std::vector<int> reps;
  for (int a = 0; a < g.order; ++a) {
    if (covered[a]) continue;
    reps.push_back(a);
    subgroup.for_each([&](int h) { covered[g.op(a, h)] = 1; });
  }
  return reps;
}

FiniteGroup transpose(const FiniteGroup& g) {
  FiniteGroup t;
  t.order = g.order;
  t.table.resize(g.order * g.order);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      t.table[a * g.order + b] = g.op(b, a);
  t.identity = g.identity;
  t.inv = g.inv;  // inverses agree in the opposite group
  return t;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const ElementSet& members,
                              std::vector<int>* to_sub) {
  std::vector<int> mem = members.members();
  int k = (int)mem.size();
  std::vector<int> idx(g.order, -1);
  for (int i = 0; i < k; ++i) idx[mem[i]] = i;
  std::vector<int> table(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p = g.op(mem[i], mem[j]);
      if (idx[p] < 0)
        throw ValidationError(Violation::NotAddSubgroup,
                              "set not closed under the operation");
      table[i * k + j] = idx[p];
    }
  if (to_sub) *to_sub = idx;
  return validate_group(k, std::move(table));
}

FiniteGroup quotient_group(const FiniteGroup& g, const ElementSet& normal) {
  std::vector<int> rep_of(g.order, -1);  // element -> least coset member
  std::vector<int> reps;
  for (int a = 0; a < g.order; ++a) {
    if (rep_of[a] >= 0) continue;
    reps.push_back(a);
    normal.for_each([&](int h) { rep_of[g.op(a, h)] = a; });
  }
  int k = (int)reps.size();
  std::vector<int> label(g.order, -1);
  for (int i = 0; i < k; ++i) label[reps[i]] = i;
  std::vector<int> table(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i * k + j] = label[rep_of[g.op(reps[i], reps[j])]];
  return validate_group(k, std::move(table));
}

long long group_exponent(const FiniteGroup& g) {
  long long e = 1;
  for (int x = 0; x < g.order; ++x)
    e = std::lcm(e, (long long)element_order(g, x));
  return e;
}

namespace {

// Backtracking over images of a greedy generating sequence.
struct AutSearch {
  const FiniteGroup& g;
  std::vector<int> gens;
  std::vector<std::vector<int>>* collect;
  unsigned long long count = 0;

  explicit AutSearch(const FiniteGroup& g_) : g(g_), collect(nullptr) {
    ElementSet have(g.order);
    have.set(g.identity);
    for (int x = 0; x < g.order; ++x) {
      if (have.test(x)) continue;
      gens.push_back(x);
      have = subgroup_closure(g, have | ElementSet::singleton(g.order, x));
      if (have.count() == g.order) break;
    }
  }

  // Extends the partial map (images fixed on closure of chosen generators).
  void run() {
    std::vector<int> img(g.order, -1);
    img[g.identity] = g.identity;
    extend(0, img);
  }

  bool close(std::vector<int>& img) {
    // propagate products until stable; false on clash
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < g.order; ++a) {
        if (img[a] < 0) continue;
        for (int b = 0; b < g.order; ++b) {
          if (img[b] < 0) continue;
          int p = g.op(a, b), q = g.op(img[a], img[b]);
          if (img[p] < 0) {
            img[p] = q;
            changed = true;
          } else if (img[p] != q) {
            return false;
          }
        }
      }
    }
    // injectivity on defined part
    std::vector<char> used(g.order, 0);
    for (int a = 0; a < g.order; ++a) {
      if (img[a] < 0) continue;
      if (used[img[a]]) return false;
      used[img[a]] = 1;
    }
    return true;
  }

  void extend(std::size_t gi, std::vector<int> img) {
    if (gi == gens.size()) {
      for (int a = 0; a < g.order; ++a)
        if (img[a] < 0) return;  // map not total: generators missed (bug)
      ++count;
      if (collect) collect->push_back(img);
      return;
    }
    int x = gens[gi];
    if (img[x] >= 0) {  // already forced by closure
      extend(gi + 1, std::move(img));
      return;
    }
    int ox = element_order(g, x);
    for (int y = 0; y < g.order; ++y) {
      if (element_order(g, y) != ox) continue;
      std::vector<int> next = img;
      next[x] = y;
      if (close(next)) extend(gi + 1, std::move(next));
    }
  }
};

}  // namespace

unsigned long long count_automorphisms(const FiniteGroup& g) {
  AutSearch s(g);
  s.run();
  return s.count;
}

std::vector<std::vector<int>> all_automorphisms(const FiniteGroup& g) {
  AutSearch s(g);
  std::vector<std::vector<int>> out;
  s.collect = &out;
  s.run();
  return out;
}

FiniteGroup cyclic_group(int n) {
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  return validate_group(n, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.order * b.order;
  auto id = [&](int x, int y) { return x * b.order + y; };
  std::vector<int> t(n * n);
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          t[id(x1, y1) * n + id(x2, y2)] = id(a.op(x1, x2), b.op(y1, y2));
  return validate_group(n, std::move(t));
}

FiniteGroup dihedral_group(int n) {
  // elements 0..n-1 rotations r^i, n..2n-1 reflections r^i s
  int m = 2 * n;
  auto mul = [&](int x, int y) {
    int i = x % n, fi = x / n, j = y % n, fj = y / n;
    // (r^i s^fi)(r^j s^fj) = r^(i + (-1)^fi j) s^(fi^fj)
    int k = fi ? (i - j + n) % n : (i + j) % n;
    return k + n * (fi ^ fj);
  };
  std::vector<int> t(m * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) t[x * m + y] = mul(x, y);
  return validate_group(m, std::move(t));
}

FiniteGroup quaternion_group() {
  // index = 2u + s with units u: 0=1, 1=i, 2=j, 3=k and sign s: 0=+, 1=-
  static const int unit[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign[u][v]: i*i=j*j=k*k=-1; i*j=k j*i=-k; j*k=i k*j=-i; k*i=j i*k=-j
  auto mul = [&](int x, int y) {
    int u = x >> 1, sx = x & 1, v = y >> 1, sy = y & 1;
    return 2 * unit[u][v] + ((sx ^ sy ^ sign[u][v]) & 1);
  };
  std::vector<int> t(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) t[x * 8 + y] = mul(x, y);
  return validate_group(8, std::move(t));
}

FiniteGroup symmetric_group(int m) {
  // elements: permutations of {0..m-1} in lexicographic order
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int n = (int)perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return int(std::lower_bound(perms.begin(), perms.end(), q) -
               perms.begin());
  };
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> comp(m);
      for (int x = 0; x < m; ++x) comp[x] = perms[i][perms[j][x]];
      t[i * n + j] = index_of(comp);
    }
  return validate_group(n, std::move(t));
}

}  // namespace skewlab
