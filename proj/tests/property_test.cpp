#include <gtest/gtest.h>

#include "qpd/enumerate.hpp"
#include "qpd/error.hpp"
#include "qpd/io.hpp"
#include "qpd/lattice.hpp"
#include "qpd/transform.hpp"
#include "support.hpp"

namespace qpd {
namespace {

using namespace qpd::test;

constexpr int kTrials = 200;

std::string to_string_for_test(const RawDiagram& r) {
  std::string s = "n=" + std::to_string(r.n) + " covers";
  for (auto [a, b] : r.covers) s += " " + std::to_string(a) + "<" + std::to_string(b);
  s += " left";
  for (auto [a, b] : r.left) s += " " + std::to_string(a) + "|" + std::to_string(b);
  return s;
}

// Diagram invariants evaluated directly on the matrices.
bool brute_valid(const RawDiagram& raw) {
  // A cover is strict.
  for (auto [a, b] : raw.covers)
    if (a == b) return false;
  const Rel m = rel_of(raw);
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y)
      if (x != y && m.leq[x][y] && m.leq[y][x]) return false;
  if (brute_bottom(m) < 0 || brute_top(m) < 0) return false;
  for (int x = 0; x < m.n; ++x)
    for (int y = 0; y < m.n; ++y) {
      if (m.left[x][y] && !m.inc(x, y)) return false;
      if (x < y && m.inc(x, y) && m.left[x][y] == m.left[y][x]) return false;
    }
  for (int flip = 0; flip < 2; ++flip) {
    auto le = [&](int x, int y) { return m.leq[x][y] || (flip ? m.left[y][x] : m.left[x][y]); };
    for (int x = 0; x < m.n; ++x)
      for (int y = 0; y < m.n; ++y)
        for (int z = 0; z < m.n; ++z)
          if (le(x, y) && le(y, z) && !le(x, z)) return false;
  }
  return true;
}

std::vector<std::vector<int>> brute_maximal_chains(const Rel& m) {
  std::vector<std::vector<int>> out;
  const int top = brute_top(m);
  std::vector<int> path{brute_bottom(m)};
  std::function<void()> walk = [&] {
    if (path.back() == top) {
      out.push_back(path);
      return;
    }
    for (int y = 0; y < m.n; ++y)
      if (brute_covers(m, path.back(), y)) {
        path.push_back(y);
        walk();
        path.pop_back();
      }
  };
  walk();
  return out;
}

TEST(Property, RandomDiagramsValidate) {
  std::mt19937 rng(11);
  for (int t = 0; t < kTrials; ++t) {
    const int n = 2 + t % 9;
    const RawDiagram raw = random_raw(n, rng);
    ASSERT_TRUE(brute_valid(raw));
    const Diagram d = validate(raw);
    const Realizer r = realizer(d);
    std::vector<int> lp(n), rp(n);
    for (int i = 0; i < n; ++i) {
      lp[r.lam_order[i]] = i;
      rp[r.rho_order[i]] = i;
    }
    EXPECT_EQ(r.lam_order.front(), d.bottom());
    EXPECT_EQ(r.rho_order.back(), d.top());
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        EXPECT_EQ(d.leq(x, y), lp[x] <= lp[y] && rp[x] <= rp[y]);
        EXPECT_EQ(d.left(x, y), lp[x] < lp[y] && rp[x] > rp[y]);
      }
  }
}

TEST(Property, CanonicalFormInvariantUnderRelabel) {
  std::mt19937 rng(12);
  for (int t = 0; t < kTrials; ++t) {
    const int n = 2 + t % 8;
    const Diagram d = validate(random_raw(n, rng));
    const Diagram e = relabel(d, random_permutation(n, rng));
    EXPECT_EQ(canonical_form(d), canonical_form(e));
    EXPECT_TRUE(similar(d, e));
    EXPECT_EQ(canonical_form(canonical_relabel(e)), canonical_form(d));
  }
}

// Similarity by canonical form agrees with exhaustive bijection search.
TEST(Property, SimilarAgreesWithBruteForce) {
  std::mt19937 rng(13);
  for (int t = 0; t < kTrials; ++t) {
    const int n = 3 + t % 4;
    const RawDiagram a = random_raw(n, rng);
    const RawDiagram b = random_raw(n, rng);
    EXPECT_EQ(similar(validate(a), validate(b)), brute_similar(rel_of(a), rel_of(b)));
  }
}

TEST(Property, SimilarIsAnEquivalence) {
  std::mt19937 rng(14);
  for (int t = 0; t < kTrials; ++t) {
    const int n = 3 + t % 3;
    const Diagram a = validate(random_raw(n, rng));
    const Diagram b = validate(random_raw(n, rng));
    const Diagram c = validate(random_raw(n, rng));
    EXPECT_TRUE(similar(a, a));
    EXPECT_EQ(similar(a, b), similar(b, a));
    if (similar(a, b) && similar(b, c)) EXPECT_TRUE(similar(a, c));
  }
}

TEST(Property, MirrorIsAnInvolutionOnTheSameOrder) {
  std::mt19937 rng(15);
  for (int t = 0; t < kTrials; ++t) {
    const Diagram d = validate(random_raw(2 + t % 9, rng));
    const Diagram m = mirror(d);
    EXPECT_EQ(mirror(m), d);
    EXPECT_EQ(m.order(), d.order());
    for (int x = 0; x < d.size(); ++x)
      for (int y = 0; y < d.size(); ++y) EXPECT_EQ(m.left(x, y), d.left(y, x));
  }
}

// Flipping, dropping or adding one left pair: validate succeeds exactly when
// the matrix invariants hold.
TEST(Property, MutatedDocumentsMatchMatrixCheck) {
  std::mt19937 rng(16);
  int rejected = 0;
  for (int t = 0; t < 4 * kTrials; ++t) {
    const int n = 3 + t % 6;
    RawDiagram raw = random_raw(n, rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    switch (t % 4) {
      case 0:
        if (!raw.left.empty()) std::swap(raw.left.front().first, raw.left.front().second);
        break;
      case 1:
        if (!raw.left.empty()) raw.left.pop_back();
        break;
      case 2:
        raw.left.push_back({pick(rng), pick(rng)});
        break;
      default:
        raw.covers.push_back({pick(rng), pick(rng)});
        break;
    }
    bool ok = true;
    try {
      validate(raw);
    } catch (const DiagramError&) {
      ok = false;
      ++rejected;
    }
    EXPECT_EQ(ok, brute_valid(raw)) << to_string_for_test(raw);
  }
  EXPECT_GT(rejected, 0);
}

TEST(Property, DocumentRoundTrip) {
  std::mt19937 rng(17);
  for (int t = 0; t < kTrials; ++t) {
    const Diagram d = validate(random_raw(2 + t % 9, rng));
    const DiagramDocument doc = to_document(d, t % 2 ? std::optional<std::string>("x") : std::nullopt);
    const std::string text = serialize(doc);
    EXPECT_EQ(parse_document(text), doc);
    EXPECT_EQ(serialize(parse_document(text)), text);
    EXPECT_EQ(to_diagram(doc), d);
  }
}

// Every element off a maximal chain lies on one side of all chain elements
// it is incomparable with, and there is at least one such element.
TEST(Property, ElementsLieOnOneSideOfEveryMaximalChain) {
  for (int n = 3; n <= 6; ++n)
    for (const Diagram& d : enumerate_quasiplanar(n)) {
      const Rel m = rel_of(d);
      for (const auto& chain : brute_maximal_chains(m)) {
        for (int x = 0; x < n; ++x) {
          if (std::find(chain.begin(), chain.end(), x) != chain.end()) continue;
          int lefts = 0, rights = 0;
          for (int c : chain) {
            if (!m.inc(x, c)) continue;
            lefts += m.left[x][c];
            rights += m.left[c][x];
          }
          EXPECT_GT(lefts + rights, 0);
          EXPECT_TRUE(lefts == 0 || rights == 0);
        }
      }
      EXPECT_EQ(maximal_chains(d.order()).size(), brute_maximal_chains(m).size());
    }
}

// In lattice diagrams, x <= y on opposite sides of a maximal chain have a
// chain element between them.
TEST(Property, ChainSeparatesOnlyThroughAChainElement) {
  for (int n = 3; n <= 6; ++n)
    for (const Diagram& d : enumerate_quasiplanar(n)) {
      const Rel m = rel_of(d);
      if (!brute_is_lattice(m)) continue;
      for (const auto& chain : brute_maximal_chains(m)) {
        auto side = [&](int x) {
          for (int c : chain)
            if (m.inc(x, c)) return m.left[x][c] ? -1 : 1;
          return 0;
        };
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            if (!m.leq[x][y] || side(x) * side(y) >= 0) continue;
            bool between = false;
            for (int z : chain) between = between || (m.leq[x][z] && m.leq[z][y]);
            EXPECT_TRUE(between);
          }
      }
    }
}

TEST(Property, LatticeLawsOnRandomImages) {
  std::mt19937 rng(18);
  for (int t = 0; t < 40; ++t) {
    const Diagram q = validate(random_raw(3 + t % 6, rng));
    const Diagram l = beta2(q).diagram;
    const LatticeTables tb = lattice_tables(l);
    const int n = tb.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        EXPECT_EQ(tb.meet[a][a], a);
        EXPECT_EQ(tb.join[a][b], tb.join[b][a]);
        EXPECT_EQ(tb.meet[a][b], tb.meet[b][a]);
        EXPECT_EQ(tb.join[a][tb.meet[a][b]], a);
        EXPECT_EQ(tb.meet[a][tb.join[a][b]], a);
        for (int c = 0; c < n; ++c) {
          EXPECT_EQ(tb.join[tb.join[a][b]][c], tb.join[a][tb.join[b][c]]);
          EXPECT_EQ(tb.meet[tb.meet[a][b]][c], tb.meet[a][tb.meet[b][c]]);
        }
      }
    EXPECT_TRUE(is_slim_semimodular(l));
    EXPECT_TRUE(is_join_distributive(l));
  }
}

// Betweenness: for a 3-antichain x0, y, x1 with y between the others,
// x0 meet x1 <= y; conversely x0 meet x1 <= y for pairwise incomparable
// elements forces y to be between.
TEST(Property, HorizontalBetweenness) {
  for (int n = 3; n <= 7; ++n)
    for (const Diagram& q : enumerate_quasiplanar(n)) {
      const Diagram l = beta2(q).diagram;
      const Rel m = rel_of(l);
      for (int a = 0; a < m.n; ++a)
        for (int y = 0; y < m.n; ++y)
          for (int b = 0; b < m.n; ++b) {
            if (!(m.inc(a, y) && m.inc(y, b) && m.inc(a, b))) continue;
            const bool between = (m.left[a][y] && m.left[y][b]) || (m.left[b][y] && m.left[y][a]);
            EXPECT_EQ(between, static_cast<bool>(m.leq[brute_meet(m, a, b)][y]));
          }
    }
}

TEST(Property, ClosureLaws) {
  std::mt19937 rng(19);
  for (int t = 0; t < 60; ++t) {
    const int n = 4 + t % 5;
    const Diagram q = validate(random_raw(n, rng));
    const FilterFamily fam = enumerate_hco_filters(q);
    auto cl = [&](std::vector<int> ys) { return hco_closure(q, fam, make_set(n, ys)); };
    const int zero = q.bottom();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (a == zero || b == zero || c == zero) continue;
          if (a == b || b == c || a == c) continue;
          EXPECT_TRUE(cl({b, c}).test(a) || cl({a, c}).test(b) || cl({a, b}).test(c));
          if (q.left_or_equal(a, b) && q.less(c, a)) EXPECT_FALSE(cl({a, b}).test(c));
          if (q.left(a, b) && q.left(b, c)) {
            EXPECT_FALSE(cl({b, c}).test(a));
            EXPECT_FALSE(cl({a, b}).test(c));
          }
        }
  }
}

}  // namespace
}  // namespace qpd
