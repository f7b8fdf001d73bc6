#include "skewlab/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace skewlab {

namespace {

int max_enum_order() {
  if (const char* env = std::getenv("SKEWLAB_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 8;
}

void check_order_cap(int n, const char* what) {
  if (n < 1 || n > max_enum_order())
    throw CapExceeded(std::string(what) + " supports order 1.." +
                      std::to_string(max_enum_order()) + ", got " +
                      std::to_string(n));
}

// ---- group table completion -------------------------------------------------

struct TableSearch {
  int n;
  std::vector<int> t;                  // -1 unknown
  std::vector<std::uint32_t> rowmask;  // values used per row
  std::vector<std::uint32_t> colmask;

  explicit TableSearch(int n_) : n(n_), t(n_ * n_, -1), rowmask(n_, 0),
                                 colmask(n_, 0) {}

  int get(int a, int b) const { return t[a * n + b]; }

  bool place(int a, int b, int v, bool* changed) {
    int cur = t[a * n + b];
    if (cur >= 0) return cur == v;
    std::uint32_t bit = 1u << v;
    if ((rowmask[a] & bit) || (colmask[b] & bit)) return false;
    t[a * n + b] = v;
    rowmask[a] |= bit;
    colmask[b] |= bit;
    *changed = true;
    return true;
  }

  // associativity inference to fixpoint: link cells (xy,z) and (x,yz)
  bool propagate_assoc() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          int xy = get(x, y);
          if (xy < 0) continue;
          for (int z = 0; z < n; ++z) {
            int yz = get(y, z);
            if (yz < 0) continue;
            int lhs = get(xy, z), rhs = get(x, yz);
            if (lhs >= 0 && rhs >= 0) {
              if (lhs != rhs) return false;
            } else if (lhs >= 0) {
              if (!place(x, yz, lhs, &changed)) return false;
            } else if (rhs >= 0) {
              if (!place(xy, z, rhs, &changed)) return false;
            }
          }
        }
    }
    return true;
  }

  // cell with the fewest admissible values; (-1,-1) when complete
  std::pair<int, int> most_constrained() const {
    int best = n + 1, ba = -1, bb = -1;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (t[a * n + b] >= 0) continue;
        int c = 0;
        for (int v = 0; v < n; ++v)
          if (!((rowmask[a] >> v) & 1) && !((colmask[b] >> v) & 1)) ++c;
        if (c < best) {
          best = c;
          ba = a;
          bb = b;
        }
      }
    return {ba, bb};
  }
};

bool group_isomorphism_exists(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (g1.order != g2.order) return false;
  if (element_order_multiset(g1) != element_order_multiset(g2)) return false;
  const int n = g1.order;

  // greedy generating sequence of g1
  std::vector<int> gens;
  {
    ElementSet have(n);
    have.set(g1.identity);
    for (int x = 0; x < n; ++x) {
      if (have.test(x)) continue;
      gens.push_back(x);
      have = subgroup_closure(g1, have | ElementSet::singleton(n, x));
      if (have.count() == n) break;
    }
  }

  std::vector<int> img(n, -1);
  img[g1.identity] = g2.identity;

  auto close = [&](std::vector<int>& m) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (m[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (m[b] < 0) continue;
          int p = g1.op(a, b), q = g2.op(m[a], m[b]);
          if (m[p] < 0) {
            m[p] = q;
            changed = true;
          } else if (m[p] != q) {
            return false;
          }
        }
      }
    }
    std::vector<char> used(n, 0);
    for (int a = 0; a < n; ++a) {
      if (m[a] < 0) continue;
      if (used[m[a]]) return false;
      used[m[a]] = 1;
    }
    return true;
  };

  std::function<bool(std::size_t, std::vector<int>)> extend =
      [&](std::size_t gi, std::vector<int> m) -> bool {
    if (gi == gens.size()) {
      for (int a = 0; a < n; ++a)
        if (m[a] < 0) return false;
      return true;
    }
    int x = gens[gi];
    if (m[x] >= 0) return extend(gi + 1, std::move(m));
    int ox = element_order(g1, x);
    for (int y = 0; y < n; ++y) {
      if (element_order(g2, y) != ox) continue;
      std::vector<int> next = m;
      next[x] = y;
      if (close(next) && extend(gi + 1, std::move(next))) return true;
    }
    return false;
  };
  return extend(0, img);
}

}  // namespace

std::vector<FiniteGroup> enumerate_groups(int n) {
  check_order_cap(n, "enumerate_groups");
  std::vector<FiniteGroup> found;

  TableSearch root(n);
  bool ignored = false;
  for (int j = 0; j < n; ++j) {
    if (!root.place(0, j, j, &ignored) || !root.place(j, 0, j, &ignored))
      throw std::logic_error("identity row seeding failed");
  }

  std::function<void(TableSearch)> dfs = [&](TableSearch s) {
    if (!s.propagate_assoc()) return;
    auto [a, b] = s.most_constrained();
    if (a < 0) {
      FiniteGroup g = validate_group(n, s.t);
      for (const FiniteGroup& known : found)
        if (group_isomorphism_exists(known, g)) return;
      found.push_back(std::move(g));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (((s.rowmask[a] >> v) & 1) || ((s.colmask[b] >> v) & 1)) continue;
      TableSearch next = s;
      bool ch = false;
      if (!next.place(a, b, v, &ch)) continue;
      dfs(std::move(next));
    }
  };
  dfs(root);

  std::sort(found.begin(), found.end(),
            [](const FiniteGroup& a, const FiniteGroup& b) {
              return a.table < b.table;
            });
  return found;
}

// ---- braces on a fixed additive group ---------------------------------------

namespace {

std::vector<FiniteSkewBrace> braces_by_lambda_search(const FiniteGroup& add) {
  const int n = add.order;
  std::vector<std::vector<int>> auts = all_automorphisms(add);
  std::sort(auts.begin(), auts.end());
  const int na = (int)auts.size();
  auto aut_index = [&](const std::vector<int>& p) -> int {
    auto it = std::lower_bound(auts.begin(), auts.end(), p);
    if (it == auts.end() || *it != p) return -1;
    return int(it - auts.begin());
  };

  // composition table of Aut(add)
  std::vector<int> comp(na * na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = auts[i][auts[j][x]];
      comp[i * na + j] = aut_index(c);
    }
  int id_idx = -1;
  {
    std::vector<int> idp(n);
    std::iota(idp.begin(), idp.end(), 0);
    id_idx = aut_index(idp);
  }

  std::vector<FiniteSkewBrace> out;

  // assignment: lam[a] = index into auts; crossed condition
  // lam[a + lam_a(b)] = lam[a] ∘ lam[b]
  std::vector<int> lam(n, -1);
  lam[add.identity] = id_idx;

  auto propagate = [&](std::vector<int>& m) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (m[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (m[b] < 0) continue;
          int c = add.op(a, auts[m[a]][b]);
          int want = comp[m[a] * na + m[b]];
          if (m[c] < 0) {
            m[c] = want;
            changed = true;
          } else if (m[c] != want) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::function<void(std::vector<int>)> dfs = [&](std::vector<int> m) {
    if (!propagate(m)) return;
    int a = -1;
    for (int i = 0; i < n; ++i)
      if (m[i] < 0) {
        a = i;
        break;
      }
    if (a < 0) {
      std::vector<int> mul(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          mul[i * n + j] = add.op(i, auts[m[i]][j]);
      try {
        out.push_back(validate_brace(add, validate_group(n, mul)));
      } catch (const ValidationError&) {
        // crossed condition admits no invalid tables; defensive only
      }
      return;
    }
    for (int v = 0; v < na; ++v) {
      std::vector<int> next = m;
      next[a] = v;
      dfs(std::move(next));
    }
  };
  dfs(lam);
  return out;
}

std::vector<FiniteSkewBrace> braces_by_table_search(const FiniteGroup& add) {
  const int n = add.order;
  std::vector<FiniteSkewBrace> out;

  struct BraceTableSearch : TableSearch {
    const FiniteGroup* add;
    explicit BraceTableSearch(const FiniteGroup& g)
        : TableSearch(g.order), add(&g) {}

    // distributivity inference: t[a][b+c] = t[a][b] - a + t[a][c]
    bool propagate_distrib() {
      bool changed = true;
      while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a) {
          int na_ = add->inv[a];
          for (int b = 0; b < n; ++b) {
            int ab = get(a, b);
            if (ab < 0) continue;
            int head = add->op(ab, na_);
            for (int c = 0; c < n; ++c) {
              int bc = add->op(b, c);
              int ac = get(a, c), abc = get(a, bc);
              if (ac >= 0) {
                int v = add->op(head, ac);
                if (abc >= 0) {
                  if (abc != v) return false;
                } else if (!place(a, bc, v, &changed)) {
                  return false;
                }
              } else if (abc >= 0) {
                // t[a][c] = (a - t[a][b]) + t[a][b+c]
                int v = add->op(add->op(a, add->inv[ab]), abc);
                if (!place(a, c, v, &changed)) return false;
              }
            }
          }
        }
      }
      return true;
    }

    bool propagate_all() {
      for (;;) {
        if (!propagate_distrib()) return false;
        std::vector<int> before = t;
        if (!propagate_assoc()) return false;
        if (t == before) return true;
      }
    }
  };

  BraceTableSearch root(add);
  bool ignored = false;
  const int e = add.identity;
  for (int j = 0; j < n; ++j) {
    if (!root.place(e, j, j, &ignored) || !root.place(j, e, j, &ignored))
      return out;  // impossible seeding (cannot happen)
  }

  std::function<void(BraceTableSearch)> dfs = [&](BraceTableSearch s) {
    if (!s.propagate_all()) return;
    auto [a, b] = s.most_constrained();
    if (a < 0) {
      try {
        out.push_back(validate_brace(add, validate_group(n, s.t)));
      } catch (const ValidationError&) {
        // Latin + assoc + distrib propagated to completion; defensive only
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (((s.rowmask[a] >> v) & 1) || ((s.colmask[b] >> v) & 1)) continue;
      BraceTableSearch next = s;
      bool ch = false;
      if (!next.place(a, b, v, &ch)) continue;
      dfs(std::move(next));
    }
  };
  dfs(root);
  return out;
}

}  // namespace

std::vector<FiniteSkewBrace> enumerate_braces_on_group(
    const FiniteGroup& add, BraceSearchStrategy strategy) {
  check_order_cap(add.order, "enumerate_braces_on_group");
  std::vector<FiniteSkewBrace> raw =
      strategy == BraceSearchStrategy::LambdaFunctionSearch
          ? braces_by_lambda_search(add)
          : braces_by_table_search(add);

  // deduplicate up to brace isomorphism, deterministic order
  std::map<std::vector<std::uint8_t>, FiniteSkewBrace> by_key;
  for (auto& b : raw) by_key.emplace(canonical_key(b), std::move(b));
  std::vector<FiniteSkewBrace> out;
  out.reserve(by_key.size());
  for (auto& [k, b] : by_key) out.push_back(std::move(b));
  return out;
}

bool brace_isomorphic(const FiniteSkewBrace& b1, const FiniteSkewBrace& b2) {
  if (b1.order != b2.order) return false;
  const int n = b1.order;

  // per-element invariant signatures must match as multisets
  auto signature = [](const FiniteSkewBrace& b, int x) {
    return std::array<long long, 4>{element_order(b.add, x),
                                    element_order(b.mul, x),
                                    lambda_orbit(b, x).count(),
                                    theta_orbit(b, x).count()};
  };
  std::vector<std::array<long long, 4>> s1(n), s2(n);
  for (int x = 0; x < n; ++x) {
    s1[x] = signature(b1, x);
    s2[x] = signature(b2, x);
  }
  {
    auto m1 = s1, m2 = s2;
    std::sort(m1.begin(), m1.end());
    std::sort(m2.begin(), m2.end());
    if (m1 != m2) return false;
  }
  if (is_two_sided(b1) != is_two_sided(b2)) return false;

  std::vector<int> gens;
  {
    ElementSet have(n);
    have.set(b1.zero());
    for (int x = 0; x < n; ++x) {
      if (have.test(x)) continue;
      gens.push_back(x);
      ElementSet grown = have | ElementSet::singleton(n, x);
      // closure under both operations
      ElementSet cur = grown;
      for (;;) {
        ElementSet next = subgroup_closure(b1.mul, subgroup_closure(b1.add, cur));
        if (next == cur) break;
        cur = next;
      }
      have = cur;
      if (have.count() == n) break;
    }
  }

  auto close = [&](std::vector<int>& m) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (m[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (m[b] < 0) continue;
          int p1 = b1.plus(a, b), p2 = b2.plus(m[a], m[b]);
          if (m[p1] < 0) {
            m[p1] = p2;
            changed = true;
          } else if (m[p1] != p2) {
            return false;
          }
          int q1 = b1.circ(a, b), q2 = b2.circ(m[a], m[b]);
          if (m[q1] < 0) {
            m[q1] = q2;
            changed = true;
          } else if (m[q1] != q2) {
            return false;
          }
        }
      }
    }
    std::vector<char> used(n, 0);
    for (int a = 0; a < n; ++a) {
      if (m[a] < 0) continue;
      if (used[m[a]]) return false;
      used[m[a]] = 1;
    }
    return true;
  };

  std::function<bool(std::size_t, std::vector<int>)> extend =
      [&](std::size_t gi, std::vector<int> m) -> bool {
    if (gi == gens.size()) {
      for (int a = 0; a < n; ++a)
        if (m[a] < 0) return false;
      return true;
    }
    int x = gens[gi];
    if (m[x] >= 0) return extend(gi + 1, std::move(m));
    for (int y = 0; y < n; ++y) {
      if (s1[x] != s2[y]) continue;
      std::vector<int> next = m;
      next[x] = y;
      if (close(next) && extend(gi + 1, std::move(next))) return true;
    }
    return false;
  };

  std::vector<int> img(n, -1);
  img[b1.zero()] = b2.zero();
  return extend(0, img);
}

std::vector<std::uint8_t> canonical_key(const FiniteSkewBrace& b) {
  const int n = b.order;
  if (b.zero() != 0)
    throw ValidationError(Violation::IllDefined,
                          "canonical keys need the identity at index 0");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cur(2 * n * n);
  do {
    bool abort = false;
    for (int a = 0; a < n && !abort; ++a)
      for (int x = 0; x < n; ++x) {
        cur[perm[a] * n + perm[x]] = (std::uint8_t)perm[b.plus(a, x)];
        cur[n * n + perm[a] * n + perm[x]] = (std::uint8_t)perm[b.circ(a, x)];
      }
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin() + 1, perm.end()) && !false);
  return best;
}

std::vector<BraceCatalogEntry> build_catalog(int max_order) {
  check_order_cap(max_order, "build_catalog");
  std::vector<BraceCatalogEntry> entries;
  for (int n = 1; n <= max_order; ++n) {
    for (const FiniteGroup& g : enumerate_groups(n)) {
      for (FiniteSkewBrace& b : enumerate_braces_on_group(
               g, BraceSearchStrategy::LambdaFunctionSearch)) {
        BraceCatalogEntry e;
        e.order = n;
        e.canonical_key = canonical_key(b);
        e.brace = std::move(b);
        entries.push_back(std::move(e));
      }
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const BraceCatalogEntry& a, const BraceCatalogEntry& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.canonical_key < b.canonical_key;
            });
  return entries;
}

}  // namespace skewlab
