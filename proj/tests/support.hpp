#pragma once

// Fixtures and brute-force oracles shared by the test binaries. The oracles
// work on plain boolean matrices built from cover and left pairs and never
// call into the library, so they can check it independently.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "qpd/diagram.hpp"

namespace qpd::test {

// Element names used by the fixtures.
namespace d4 { inline constexpr int zero = 0, a = 1, b = 2, one = 3; }
namespace q5 { inline constexpr int zero = 0, u = 1, v = 2, w = 3, one = 4; }
namespace n5 { inline constexpr int zero = 0, a = 1, b = 2, c = 3, one = 4; }
namespace m3 { inline constexpr int zero = 0, p = 1, q = 2, r = 3, one = 4; }
namespace hex { inline constexpr int zero = 0, a = 1, b = 2, c = 3, d = 4, one = 5; }

inline RawDiagram chain_raw(int n) {
  RawDiagram r{n, {}, {}};
  for (int i = 0; i + 1 < n; ++i) r.covers.push_back({i, i + 1});
  return r;
}
inline RawDiagram d4_raw() { return {4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {{1, 2}}}; }
inline RawDiagram q5_raw() {
  return {5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}, {{1, 2}}};
}
inline RawDiagram m3_raw() {
  return {5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {{1, 2}, {2, 3}, {1, 3}}};
}
inline RawDiagram n5_raw() {
  return {5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}, {{2, 1}, {2, 3}}};
}
inline RawDiagram hex_raw() {
  return {6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
          {{1, 2}, {3, 4}}};
}
// Boolean cube 2^3 with atoms 1,2,4 and element i covering i minus one bit.
inline std::vector<Pair> b3_covers() {
  std::vector<Pair> c;
  for (int x = 0; x < 8; ++x)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (!(x & bit)) c.push_back({x, x | bit});
  return c;
}
// Vertical sum of two squares: 0 < a,b < m < c,d < 1.
inline RawDiagram b2b2_raw(bool mirror_top) {
  RawDiagram r{7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}, {{1, 2}}};
  r.left.push_back(mirror_top ? Pair{5, 4} : Pair{4, 5});
  return r;
}

// Relation matrices computed by Warshall closure of the cover pairs.
struct Rel {
  int n = 0;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<char>> left;

  bool inc(int x, int y) const { return !leq[x][y] && !leq[y][x]; }
};

inline Rel rel_of(const RawDiagram& r) {
  Rel m;
  m.n = r.n;
  m.leq.assign(r.n, std::vector<char>(r.n, 0));
  m.left.assign(r.n, std::vector<char>(r.n, 0));
  for (int i = 0; i < r.n; ++i) m.leq[i][i] = 1;
  for (auto [a, b] : r.covers) m.leq[a][b] = 1;
  for (int k = 0; k < r.n; ++k)
    for (int i = 0; i < r.n; ++i)
      for (int j = 0; j < r.n; ++j)
        if (m.leq[i][k] && m.leq[k][j]) m.leq[i][j] = 1;
  for (auto [a, b] : r.left) m.left[a][b] = 1;
  return m;
}

inline Rel rel_of(const Diagram& d) {
  Rel m;
  m.n = d.size();
  m.leq.assign(m.n, std::vector<char>(m.n, 0));
  m.left.assign(m.n, std::vector<char>(m.n, 0));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      m.leq[i][j] = d.leq(i, j);
      m.left[i][j] = d.left(i, j);
    }
  return m;
}

// Similarity by trying every bijection.
inline bool brute_similar(const Rel& a, const Rel& b) {
  if (a.n != b.n) return false;
  std::vector<int> p(a.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i)
      for (int j = 0; j < a.n && ok; ++j)
        ok = a.leq[i][j] == b.leq[p[i]][p[j]] && a.left[i][j] == b.left[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool brute_order_isomorphic(const Rel& a, const Rel& b) {
  if (a.n != b.n) return false;
  std::vector<int> p(a.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i)
      for (int j = 0; j < a.n && ok; ++j) ok = a.leq[i][j] == b.leq[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline int brute_bottom(const Rel& m) {
  for (int x = 0; x < m.n; ++x) {
    bool all = true;
    for (int y = 0; y < m.n; ++y) all = all && m.leq[x][y];
    if (all) return x;
  }
  return -1;
}
inline int brute_top(const Rel& m) {
  for (int x = 0; x < m.n; ++x) {
    bool all = true;
    for (int y = 0; y < m.n; ++y) all = all && m.leq[y][x];
    if (all) return x;
  }
  return -1;
}

inline bool brute_covers(const Rel& m, int a, int b) {
  if (a == b || !m.leq[a][b]) return false;
  for (int z = 0; z < m.n; ++z)
    if (z != a && z != b && m.leq[a][z] && m.leq[z][b]) return false;
  return true;
}

// Least upper bound by scanning all upper bounds; -1 if none.
inline int brute_join(const Rel& m, int x, int y) {
  for (int z = 0; z < m.n; ++z) {
    if (!m.leq[x][z] || !m.leq[y][z]) continue;
    bool least = true;
    for (int w = 0; w < m.n; ++w)
      if (m.leq[x][w] && m.leq[y][w] && !m.leq[z][w]) least = false;
    if (least) return z;
  }
  return -1;
}
inline int brute_meet(const Rel& m, int x, int y) {
  for (int z = 0; z < m.n; ++z) {
    if (!m.leq[z][x] || !m.leq[z][y]) continue;
    bool greatest = true;
    for (int w = 0; w < m.n; ++w)
      if (m.leq[w][x] && m.leq[w][y] && !m.leq[w][z]) greatest = false;
    if (greatest) return z;
  }
  return -1;
}

inline bool brute_is_lattice(const Rel& m) {
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y)
      if (brute_join(m, x, y) < 0 || brute_meet(m, x, y) < 0) return false;
  return true;
}

inline int count_upper_covers(const Rel& m, int x) {
  int c = 0;
  for (int y = 0; y < m.n; ++y) c += brute_covers(m, x, y);
  return c;
}
inline int count_lower_covers(const Rel& m, int x) {
  int c = 0;
  for (int y = 0; y < m.n; ++y) c += brute_covers(m, y, x);
  return c;
}
inline std::vector<int> brute_mir(const Rel& m) {
  std::vector<int> out;
  for (int x = 0; x < m.n; ++x)
    if (count_upper_covers(m, x) == 1) out.push_back(x);
  return out;
}
inline std::vector<int> brute_jir(const Rel& m) {
  std::vector<int> out;
  for (int x = 0; x < m.n; ++x)
    if (count_lower_covers(m, x) == 1) out.push_back(x);
  return out;
}

inline bool brute_semimodular(const Rel& m) {
  for (int a = 0; a < m.n; ++a)
    for (int b = 0; b < m.n; ++b)
      if (brute_covers(m, brute_meet(m, a, b), a) &&
          !brute_covers(m, b, brute_join(m, a, b)))
        return false;
  return true;
}

inline bool brute_slim(const Rel& m) {
  auto jir = brute_jir(m);
  for (int x : jir)
    for (int y : jir)
      for (int z : jir)
        if (m.inc(x, y) && m.inc(y, z) && m.inc(x, z)) return false;
  return true;
}

// All hco-filters of q: nonempty up-sets of the non-bottom elements that are
// closed under lying left-between two members. Bitmask over all subsets.
inline std::vector<std::vector<int>> brute_hco_filters(const Rel& q) {
  const int bottom = brute_bottom(q);
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << q.n); ++mask) {
    if (mask & (1u << bottom)) continue;
    auto in = [&](int x) { return (mask >> x) & 1u; };
    bool ok = true;
    for (int x = 0; x < q.n && ok; ++x)
      for (int y = 0; y < q.n && ok; ++y) {
        if (in(x) && q.leq[x][y] && !in(y)) ok = false;
        for (int z = 0; z < q.n && ok; ++z)
          if (in(x) && in(z) && q.left[x][y] && q.left[y][z] && !in(y)) ok = false;
      }
    if (!ok) continue;
    std::vector<int> f;
    for (int x = 0; x < q.n; ++x)
      if (in(x)) f.push_back(x);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random valid diagram: a random interior permutation gives the second linear
// order, the order is the intersection, and labels are then shuffled.
inline RawDiagram random_raw(int n, std::mt19937& rng) {
  std::vector<int> rho(n);
  std::iota(rho.begin(), rho.end(), 0);
  std::shuffle(rho.begin() + 1, rho.end() - 1, rng);
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  // Lambda position is the index itself.
  auto leq = [&](int x, int y) { return x <= y && rho[x] <= rho[y]; };
  RawDiagram r{n, {}, {}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (leq(x, y)) {
        bool cover = true;
        for (int z = 0; z < n; ++z)
          if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
        // Also include some non-cover comparabilities; validation closes them.
        if (cover || std::uniform_int_distribution<int>(0, 3)(rng) == 0)
          r.covers.push_back({label[x], label[y]});
      } else if (x < y && rho[x] > rho[y]) {
        r.left.push_back({label[x], label[y]});
      }
    }
  std::shuffle(r.covers.begin(), r.covers.end(), rng);
  std::shuffle(r.left.begin(), r.left.end(), rng);
  return r;
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace qpd::test
