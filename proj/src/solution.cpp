#include "skewlab/solution.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>

namespace skewlab {

namespace {

bool row_is_permutation(const std::vector<int>& t, int n, int row) {
  std::vector<char> seen(n, 0);
  for (int j = 0; j < n; ++j) {
    int v = t[row * n + j];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

struct Triple {
  int a, b, c;
};

Triple braid_left(const FiniteSolution& s, int x, int y, int z) {
  auto [u, v] = s.r(x, y);          // (r × id)
  auto [w, t] = s.r(v, z);          // (id × r)
  auto [p, q] = s.r(u, w);          // (r × id)
  return Triple{p, q, t};
}

Triple braid_right(const FiniteSolution& s, int x, int y, int z) {
  auto [u, v] = s.r(y, z);          // (id × r)
  auto [w, t] = s.r(x, u);          // (r × id)
  auto [p, q] = s.r(t, v);          // (id × r)
  return Triple{w, p, q};
}

}  // namespace

FiniteSolution validate_solution(int size, std::vector<int> lam,
                                 std::vector<int> rho) {
  const int n = size;
  if (n <= 0 || (int)lam.size() != n * n || (int)rho.size() != n * n)
    throw ValidationError(Violation::Degenerate, "tables are not n x n");
  for (int x = 0; x < n; ++x) {
    if (!row_is_permutation(lam, n, x))
      throw ValidationError(Violation::Degenerate,
                            "λ row " + std::to_string(x) +
                                " is not a permutation",
                            x);
    if (!row_is_permutation(rho, n, x))
      throw ValidationError(Violation::Degenerate,
                            "ρ row " + std::to_string(x) +
                                " is not a permutation",
                            x);
  }

  FiniteSolution s;
  s.size = n;
  s.lam = std::move(lam);
  s.rho = std::move(rho);

  std::vector<char> hit(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.r(x, y);
      if (hit[u * n + v])
        throw ValidationError(Violation::NotBijective,
                              "pair map repeats value at (" +
                                  std::to_string(x) + "," +
                                  std::to_string(y) + ")",
                              x, y);
      hit[u * n + v] = 1;
    }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Triple l = braid_left(s, x, y, z);
        Triple r = braid_right(s, x, y, z);
        if (l.a != r.a || l.b != r.b || l.c != r.c)
          throw ValidationError(Violation::BraidFailure,
                                "braid relation fails at (" +
                                    std::to_string(x) + "," +
                                    std::to_string(y) + "," +
                                    std::to_string(z) + ")",
                                x, y, z);
      }
  return s;
}

FiniteSolution validate_solution(
    const std::vector<std::vector<int>>& lam_rows,
    const std::vector<std::vector<int>>& rho_rows) {
  int n = (int)lam_rows.size();
  std::vector<int> lam, rho;
  for (auto& r : lam_rows) {
    if ((int)r.size() != n)
      throw ValidationError(Violation::Degenerate, "ragged λ table");
    lam.insert(lam.end(), r.begin(), r.end());
  }
  if ((int)rho_rows.size() != n)
    throw ValidationError(Violation::Degenerate, "table size mismatch");
  for (auto& r : rho_rows) {
    if ((int)r.size() != n)
      throw ValidationError(Violation::Degenerate, "ragged ρ table");
    rho.insert(rho.end(), r.begin(), r.end());
  }
  return validate_solution(n, std::move(lam), std::move(rho));
}

bool is_involutive(const FiniteSolution& s) {
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y) {
      auto [u, v] = s.r(x, y);
      auto [a, b] = s.r(u, v);
      if (a != x || b != y) return false;
    }
  return true;
}

FiniteSolution derived_solution(const FiniteSolution& s) {
  const int n = s.size;
  // inverse of each λ row
  std::vector<int> linv(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) linv[x * n + s.l(x, y)] = y;
  std::vector<int> lam(n * n), rho(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      lam[x * n + y] = y;
      // ρ'_y(x) = λ_y(ρ_{λ_x^{-1}(y)}(x))
      int z = linv[x * n + y];
      rho[y * n + x] = s.l(y, s.p(z, x));
    }
  return validate_solution(n, std::move(lam), std::move(rho));
}

Retract retract(const FiniteSolution& s) {
  const int n = s.size;
  std::vector<int> cls(n, -1);
  int k = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = k;
    for (int y = x + 1; y < n; ++y) {
      if (cls[y] >= 0) continue;
      bool same = true;
      for (int j = 0; j < n && same; ++j)
        same = s.l(x, j) == s.l(y, j) && s.p(x, j) == s.p(y, j);
      if (same) cls[y] = k;
    }
    ++k;
  }
  std::vector<int> lam(k * k, -1), rho(k * k, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int cx = cls[x], cy = cls[y];
      int lv = cls[s.l(x, y)], pv = cls[s.p(x, y)];
      if (lam[cx * k + cy] < 0)
        lam[cx * k + cy] = lv;
      else if (lam[cx * k + cy] != lv)
        throw ValidationError(Violation::IllDefined,
                              "retract λ disagrees between representatives",
                              x, y);
      if (rho[cx * k + cy] < 0)
        rho[cx * k + cy] = pv;
      else if (rho[cx * k + cy] != pv)
        throw ValidationError(Violation::IllDefined,
                              "retract ρ disagrees between representatives",
                              x, y);
    }
  Retract out;
  out.solution = validate_solution(k, std::move(lam), std::move(rho));
  out.projection = std::move(cls);
  return out;
}

std::vector<int> retract_tower(const FiniteSolution& s, int max_steps) {
  std::vector<int> sizes{s.size};
  FiniteSolution cur = s;
  while ((int)sizes.size() < max_steps) {
    FiniteSolution next = retract(cur).solution;
    if (next.size == cur.size) break;
    sizes.push_back(next.size);
    cur = std::move(next);
  }
  return sizes;
}

FiniteSolution brace_to_solution(const FiniteSkewBrace& b) {
  const int n = b.order;
  std::vector<int> lam(n * n), rho(n * n);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      int u = b.lambda(a, x);
      lam[a * n + x] = u;
      // ρ_x(a) = \bar{λ_a(x)} ∘ a ∘ x
      rho[x * n + a] = b.circ(b.circ(b.bar(u), a), x);
    }
  return validate_solution(n, std::move(lam), std::move(rho));
}

bool is_decomposition_factor(const FiniteSolution& s, const ElementSet& y) {
  const int n = s.size;
  if (y.carrier_order() != n) return false;
  ElementSet z = y.complement();
  const ElementSet* parts[2] = {&y, &z};
  for (const ElementSet* part : parts) {
    bool closed = true;
    part->for_each([&](int a) {
      if (!closed) return;
      part->for_each([&](int b) {
        if (!closed) return;
        if (!part->test(s.l(a, b)) || !part->test(s.p(b, a))) closed = false;
      });
    });
    if (!closed) return false;
    // restricted rows must permute the part (automatic once closed, checked)
    bool nondeg = true;
    part->for_each([&](int a) {
      if (!nondeg) return;
      ElementSet li(n), pi(n);
      part->for_each([&](int b) {
        li.set(s.l(a, b));
        pi.set(s.p(a, b));
      });
      if (li != *part || pi != *part) nondeg = false;
    });
    if (!nondeg && !part->empty()) return false;
  }
  return true;
}

namespace {

// Orbit of x0 under the permutation group generated by all λ and ρ rows.
ElementSet row_group_orbit(const FiniteSolution& s, int x0) {
  ElementSet orb = ElementSet::singleton(s.size, x0);
  std::vector<int> work{x0};
  while (!work.empty()) {
    int v = work.back();
    work.pop_back();
    for (int a = 0; a < s.size; ++a) {
      for (int w : {s.l(a, v), s.p(a, v)}) {
        if (!orb.test(w)) {
          orb.set(w);
          work.push_back(w);
        }
      }
    }
  }
  return orb;
}

constexpr int kAtomSearchLimit = 16;

// Bipartition search inside the orbit U. Elements of X\U constrain only the
// Z side: a factor Y ⊆ U needs U\Y invariant under every external row.
struct SeparabilitySearch {
  const FiniteSolution& s;
  std::vector<int> mem;          // orbit members
  std::vector<int> pos;          // carrier -> orbit position, -1 outside
  std::vector<std::vector<int>> ext_img;  // per position: external images

  SeparabilitySearch(const FiniteSolution& s_, const ElementSet& orbit)
      : s(s_), mem(orbit.members()), pos(s_.size, -1) {
    for (int i = 0; i < (int)mem.size(); ++i) pos[mem[i]] = i;
    ext_img.resize(mem.size());
    for (int i = 0; i < (int)mem.size(); ++i) {
      for (int e = 0; e < s.size; ++e) {
        if (pos[e] >= 0) continue;
        ext_img[i].push_back(pos[s.l(e, mem[i])]);
        ext_img[i].push_back(pos[s.p(e, mem[i])]);
      }
    }
  }

  enum : int8_t { UNK = 0, A = 1, Z = 2 };

  // returns false on contradiction
  bool propagate(std::vector<int8_t>& side) const {
    const int m = (int)mem.size();
    bool changed = true;
    auto place = [&](int i, int8_t v) {
      if (side[i] == UNK) {
        side[i] = v;
        changed = true;
        return true;
      }
      return side[i] == v;
    };
    while (changed) {
      changed = false;
      for (int i = 0; i < m; ++i) {
        if (side[i] == Z) {
          for (int j : ext_img[i])
            if (!place(j, Z)) return false;
        }
        if (side[i] == UNK) continue;
        for (int j = 0; j < m; ++j) {
          if (side[j] != side[i]) continue;
          int lv = pos[s.l(mem[i], mem[j])];
          int pv = pos[s.p(mem[j], mem[i])];
          if (!place(lv, side[i]) || !place(pv, side[i])) return false;
        }
      }
    }
    return true;
  }

  bool complete(std::vector<int8_t> side) const {
    if (!propagate(side)) return false;
    int unk = -1;
    for (int i = 0; i < (int)mem.size(); ++i)
      if (side[i] == UNK) {
        unk = i;
        break;
      }
    if (unk < 0) return true;
    for (int8_t v : {A, Z}) {
      std::vector<int8_t> branch = side;
      branch[unk] = v;
      if (complete(std::move(branch))) return true;
    }
    return false;
  }

  bool separable(int xi, int yi) const {
    std::vector<int8_t> side(mem.size(), UNK);
    side[xi] = A;
    side[yi] = Z;
    return complete(std::move(side));
  }
};

}  // namespace

MinimalFactor minimal_factor(const FiniteSolution& s, int x0) {
  ElementSet orbit = row_group_orbit(s, x0);
  if (orbit.count() > kAtomSearchLimit) return MinimalFactor{orbit, false};
  SeparabilitySearch search(s, orbit);
  int xi = search.pos[x0];
  ElementSet atom(s.size);
  for (int i = 0; i < (int)search.mem.size(); ++i) {
    if (i == xi || !search.separable(xi, i)) atom.set(search.mem[i]);
  }
  return MinimalFactor{atom, true};
}

Partition decomposition_atoms(const FiniteSolution& s) {
  Partition part;
  part.size = s.size;
  part.block_id.assign(s.size, -1);
  for (int x = 0; x < s.size; ++x) {
    if (part.block_id[x] >= 0) continue;
    MinimalFactor mf = minimal_factor(s, x);
    if (!mf.exact)
      throw PartialResult("orbit of " + std::to_string(x) +
                          " exceeds the exact atom search limit");
    mf.set.for_each([&](int y) { part.block_id[y] = part.block_count; });
    ++part.block_count;
  }
  return part;
}

ElementSet delta_f(const FiniteSolution& s) {
  ElementSet full = ElementSet::full(s.size);
  // X itself is a finite factor, so every element qualifies
  if (!is_decomposition_factor(s, full))
    throw ValidationError(Violation::IllDefined,
                          "full carrier failed the factor predicate");
  return full;
}

std::vector<ElementSet> brute_force_factors(const FiniteSolution& s) {
  if (s.size > 12)
    throw CapExceeded("brute_force_factors supports size <= 12, got " +
                      std::to_string(s.size));
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (1u << s.size); ++mask) {
    ElementSet y(s.size);
    for (int i = 0; i < s.size; ++i)
      if ((mask >> i) & 1) y.set(i);
    if (is_decomposition_factor(s, y)) out.push_back(y);
  }
  return out;
}

FiniteSolution random_solution(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(pi[i], pi[rng() % (i + 1)]);
  int p = int(rng() % std::max(1, n)), q = int(rng() % std::max(1, n));
  auto pow_perm = [&](int e) {
    std::vector<int> out(n), cur = pi;
    std::iota(out.begin(), out.end(), 0);
    for (int i = 0; i < e; ++i) {
      std::vector<int> next(n);
      for (int j = 0; j < n; ++j) next[j] = cur[out[j]];
      out = next;
    }
    return out;
  };
  std::vector<int> sigma = pow_perm(p), tau = pow_perm(q);
  std::vector<int> lam(n * n), rho(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      lam[x * n + y] = sigma[y];
      rho[x * n + y] = tau[y];
    }
  return validate_solution(n, std::move(lam), std::move(rho));
}

namespace {

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::vector<FiniteSolution> all_solutions_of_size(int n) {
  if (n > 4)
    throw CapExceeded("all_solutions_of_size supports n <= 4, got " +
                      std::to_string(n));
  std::vector<std::vector<int>> perms = all_perms(n);
  const int np = (int)perms.size();
  auto perm_index = [&](const std::vector<int>& q) -> int {
    auto it = std::lower_bound(perms.begin(), perms.end(), q);
    if (it == perms.end() || *it != q) return -1;
    return int(it - perms.begin());
  };

  std::vector<FiniteSolution> found;
  std::vector<int> lrow(n, 0);  // λ-row index per element

  // braid check on the partial table: rho rows assigned for y < have only;
  // -1 = not yet decidable, 0 = violated, 1 = holds on decidable triples
  auto partial_braid_ok = [&](const std::vector<int>& lam,
                              const std::vector<int>& rho, int have) {
    auto pr = [&](int x, int y, int* u, int* v) {
      *u = lam[x * n + y];
      if (y >= have) return false;
      *v = rho[y * n + x];
      return true;
    };
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          int u, v, w, t, p, q, u2, v2, w2, t2, p2, q2;
          if (!pr(x, y, &u, &v) || !pr(v, z, &w, &t) || !pr(u, w, &p, &q))
            continue;
          if (!pr(y, z, &u2, &v2) || !pr(x, u2, &w2, &t2) ||
              !pr(t2, v2, &p2, &q2))
            continue;
          if (p != w2 || q != p2 || t != q2) return false;
        }
    return true;
  };

  auto pair_map_injective = [&](const std::vector<int>& lam,
                                const std::vector<int>& rho) {
    std::vector<char> hit(n * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int key = lam[x * n + y] * n + rho[y * n + x];
        if (hit[key]) return false;
        hit[key] = 1;
      }
    return true;
  };

  // phase 2 for a fixed λ-profile: YB1 forces λ_{ρ_y(x)} =
  // λ_{λ_x(y)}^{-1} λ_x λ_y, so each ρ cell has a forced row class.
  auto finish = [&](const std::vector<int>& lprof) {
    std::vector<std::vector<std::vector<int>>> cand(
        n, std::vector<std::vector<int>>(n));
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        auto& lx = perms[lprof[x]];
        auto& ly = perms[lprof[y]];
        auto& lxy = perms[lprof[lx[y]]];
        std::vector<int> need(n);  // lxy^{-1} ∘ lx ∘ ly
        std::vector<int> lxy_inv(n);
        for (int i = 0; i < n; ++i) lxy_inv[lxy[i]] = i;
        for (int i = 0; i < n; ++i) need[i] = lxy_inv[lx[ly[i]]];
        int needed_row = perm_index(need);
        for (int z = 0; z < n; ++z)
          if (lprof[z] == needed_row) cand[y][x].push_back(z);
        if (cand[y][x].empty()) return;  // no ρ can satisfy YB1 here
      }

    // per row y: permutations with value at x drawn from cand[y][x]
    std::vector<std::vector<int>> row_options(n);
    for (int y = 0; y < n; ++y) {
      for (int pi = 0; pi < np; ++pi) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
          ok = std::find(cand[y][x].begin(), cand[y][x].end(),
                         perms[pi][x]) != cand[y][x].end();
        if (ok) row_options[y].push_back(pi);
      }
      if (row_options[y].empty()) return;
    }

    std::vector<int> lam(n * n), rho(n * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) lam[x * n + y] = perms[lprof[x]][y];
    auto rec = [&](auto&& self, int y) -> void {
      if (y == n) {
        if (pair_map_injective(lam, rho))
          found.push_back(validate_solution(n, lam, rho));
        return;
      }
      for (int pi : row_options[y]) {
        for (int j = 0; j < n; ++j) rho[y * n + j] = perms[pi][j];
        if (partial_braid_ok(lam, rho, y + 1)) self(self, y + 1);
      }
    };
    rec(rec, 0);
  };

  auto sweep = [&](auto&& self, int x) -> void {
    if (x == n) {
      finish(lrow);
      return;
    }
    for (int pi = 0; pi < np; ++pi) {
      lrow[x] = pi;
      self(self, x + 1);
    }
  };
  sweep(sweep, 0);
  return found;
}

}  // namespace skewlab
