#include "qpd/lattice.hpp"

#include <algorithm>
#include <string>

#include "qpd/error.hpp"

namespace qpd {

namespace {

int least_element(const Poset& order, const ElementSet& set) {
  auto mins = order.minimal_elements(set);
  return mins.size() == 1 ? mins.front() : -1;
}

int greatest_element(const Poset& order, const ElementSet& set) {
  auto maxs = order.maximal_elements(set);
  return maxs.size() == 1 ? maxs.front() : -1;
}

void require_slim_semimodular(const Poset& order) {
  if (!is_slim_semimodular(order)) {
    throw DiagramError(ErrorKind::NotSlimSemimodular,
                       "diagram is not a slim semimodular lattice");
  }
}

// Largest element of the chain below x; the chain starts at the bottom.
int chain_support(const Poset& order, const std::vector<int>& chain, int x) {
  int best = chain.front();
  for (int c : chain) {
    if (order.leq(c, x)) best = c;
  }
  return best;
}

}  // namespace

bool LatticeTables::is_mir(int x) const {
  return std::binary_search(mir.begin(), mir.end(), x);
}

bool LatticeTables::is_jir(int x) const {
  return std::binary_search(jir.begin(), jir.end(), x);
}

LatticeTables lattice_tables(const Poset& order) {
  if (auto w = find_non_lattice_witness(order)) {
    throw DiagramError(
        ErrorKind::NotALattice,
        "pair (" + std::to_string(w->x) + "," + std::to_string(w->y) +
            ") has " + (w->upper ? "minimal upper" : "maximal lower") +
            " bounds " + std::to_string(w->bound_a) + " and " +
            std::to_string(w->bound_b));
  }
  const int n = order.size();
  LatticeTables t;
  t.meet.assign(n, std::vector<int>(n));
  t.join.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      t.join[x][y] = t.join[y][x] = least_element(order, order.up(x) & order.up(y));
      t.meet[x][y] = t.meet[y][x] =
          greatest_element(order, order.down(x) & order.down(y));
    }
  }
  t.bottom = *order.minimum();
  t.top = *order.maximum();
  t.upstar.resize(n);
  for (int x = 0; x < n; ++x) {
    if (order.lower_covers(x).size() == 1) t.jir.push_back(x);
    if (order.upper_covers(x).size() == 1) t.mir.push_back(x);
    if (static_cast<int>((order.up(x) | order.down(x)).count()) == n) {
      t.nar.push_back(x);
    }
    int u = x;
    for (int c : order.upper_covers(x)) u = t.join[u][c];
    t.upstar[x] = u;
  }
  std::sort(t.nar.begin(), t.nar.end(), [&](int a, int b) {
    return order.less(a, b);
  });
  return t;
}

bool is_lattice(const Poset& order) {
  return !find_non_lattice_witness(order).has_value();
}

bool is_semimodular(const Poset& order) {
  const LatticeTables t = lattice_tables(order);
  const int n = order.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (order.covers(t.meet[a][b], a) && !order.covers(b, t.join[a][b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_slim(const Poset& order) {
  const LatticeTables t = lattice_tables(order);
  const auto& j = t.jir;
  for (std::size_t a = 0; a < j.size(); ++a) {
    for (std::size_t b = a + 1; b < j.size(); ++b) {
      if (!order.incomparable(j[a], j[b])) continue;
      for (std::size_t c = b + 1; c < j.size(); ++c) {
        if (order.incomparable(j[a], j[c]) && order.incomparable(j[b], j[c])) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_join_distributive(const Poset& order) {
  const LatticeTables t = lattice_tables(order);
  for (int x = 0; x < order.size(); ++x) {
    const auto block = members(order.up(x) & order.down(t.upstar[x]));
    for (int a : block) {
      for (int b : block) {
        for (int c : block) {
          if (t.meet[a][t.join[b][c]] != t.join[t.meet[a][b]][t.meet[a][c]]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool is_slim_semimodular(const Poset& order) {
  return is_lattice(order) && is_semimodular(order) && is_slim(order);
}

SupportData supports(const Diagram& d) {
  require_slim_semimodular(d.order());
  const LatticeTables t = lattice_tables(d);
  const auto [lb, rb] = boundary_chains(d);
  const int n = d.size();
  SupportData s;
  s.lsp.resize(n);
  s.rsp.resize(n);
  s.lds.resize(n);
  s.rds.resize(n);
  for (int x = 0; x < n; ++x) {
    s.lsp[x] = chain_support(d.order(), lb.elems, x);
    s.rsp[x] = chain_support(d.order(), rb.elems, x);
    if (x == d.top()) {
      s.lds[x] = s.rds[x] = x;
      continue;
    }
    ElementSet above_mir(n);
    for (int m : t.mir) {
      if (d.leq(x, m)) above_mir.set(m);
    }
    // Minimal elements form an antichain, so lambda order = left-to-right.
    const auto mins = d.order().minimal_elements(above_mir);
    auto by_lambda = [&](int a, int b) {
      return d.lambda_position(a) < d.lambda_position(b);
    };
    s.lds[x] = *std::min_element(mins.begin(), mins.end(), by_lambda);
    s.rds[x] = *std::max_element(mins.begin(), mins.end(), by_lambda);
  }
  return s;
}

std::vector<std::vector<int>> irredundant_meet_representations(
    const LatticeTables& t, int x) {
  const auto& mir = t.mir;
  const int k = static_cast<int>(mir.size());
  if (k > 24) {
    throw DiagramError(ErrorKind::SizeTooLarge,
                       "too many meet-irreducibles for exhaustive search");
  }
  auto meet_of = [&](unsigned long mask) {
    int m = t.top;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1UL) m = t.meet[m][mir[i]];
    }
    return m;
  };
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
    if (meet_of(mask) != x) continue;
    bool irredundant = true;
    for (int i = 0; i < k && irredundant; ++i) {
      if ((mask >> i & 1UL) && meet_of(mask & ~(1UL << i)) == x) {
        irredundant = false;
      }
    }
    if (!irredundant) continue;
    std::vector<int> rep;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1UL) rep.push_back(mir[i]);
    }
    out.push_back(std::move(rep));
  }
  return out;
}

bool lattice_isomorphic(const Diagram& a, const Diagram& b) {
  require_slim_semimodular(a.order());
  require_slim_semimodular(b.order());
  if (a.size() != b.size()) return false;
  const LatticeTables ta = lattice_tables(a);
  const LatticeTables tb = lattice_tables(b);
  if (ta.nar.size() != tb.nar.size()) return false;
  auto block = [](const Diagram& d, int lo, int hi) {
    const auto elems = members(d.order().up(lo) & d.order().down(hi));
    return subdiagram(d, elems);
  };
  for (std::size_t i = 1; i < ta.nar.size(); ++i) {
    const Diagram da = block(a, ta.nar[i - 1], ta.nar[i]);
    const Diagram db = block(b, tb.nar[i - 1], tb.nar[i]);
    if (!similar(da, db) && !similar(da, mirror(db))) return false;
  }
  return true;
}

Diagram diagram_from_chains(const Poset& order, const Chain& left_chain,
                            const Chain& right_chain) {
  require_slim_semimodular(order);
  const int n = order.size();
  for (const Chain* c : {&left_chain, &right_chain}) {
    const auto& e = c->elems;
    bool ok = !e.empty() && e.front() == *order.minimum() &&
              e.back() == *order.maximum();
    for (std::size_t i = 1; ok && i < e.size(); ++i) {
      ok = e[i - 1] >= 0 && e[i - 1] < n && e[i] >= 0 && e[i] < n &&
           order.covers(e[i - 1], e[i]);
    }
    if (!ok) {
      throw DiagramError(ErrorKind::NotAMaximalChain,
                         "chain does not climb from 0 to 1 by covers");
    }
  }
  const LatticeTables t = lattice_tables(order);
  for (int j : t.jir) {
    const bool in_left = std::count(left_chain.elems.begin(),
                                    left_chain.elems.end(), j) > 0;
    const bool in_right = std::count(right_chain.elems.begin(),
                                     right_chain.elems.end(), j) > 0;
    if (!in_left && !in_right) {
      throw DiagramError(ErrorKind::ChainsDoNotCoverJir,
                         "join-irreducible " + std::to_string(j) +
                             " lies on neither chain");
    }
  }
  std::vector<ElementSet> left(n, ElementSet(n));
  for (int x = 0; x < n; ++x) {
    const int lx = chain_support(order, left_chain.elems, x);
    const int rx = chain_support(order, right_chain.elems, x);
    for (int y = 0; y < n; ++y) {
      if (!order.incomparable(x, y)) continue;
      const int ly = chain_support(order, left_chain.elems, y);
      const int ry = chain_support(order, right_chain.elems, y);
      if (order.less(ly, lx) && order.less(rx, ry)) left[x].set(y);
    }
  }
  return Diagram::create(order, std::move(left));
}

}  // namespace qpd
