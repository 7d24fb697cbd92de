#include "qpd/transform.hpp"

#include <algorithm>
#include <set>

#include "qpd/error.hpp"
#include "qpd/lattice.hpp"

namespace qpd {

namespace {

ElementSet non_bottom(const Diagram& q) {
  ElementSet s(q.size());
  s.set();
  s.reset(q.bottom());
  return s;
}

bool filter_before(const ElementSet& a, const ElementSet& b) {
  if (a.count() != b.count()) return a.count() > b.count();
  return a < b;
}

}  // namespace

AlphaResult alpha(const Diagram& lattice) {
  if (!is_slim_semimodular(lattice)) {
    throw DiagramError(ErrorKind::NotSlimSemimodular,
                       "alpha needs a slim semimodular lattice diagram");
  }
  const LatticeTables t = lattice_tables(lattice);
  std::vector<int> kept = t.mir;
  kept.push_back(t.top);
  std::sort(kept.begin(), kept.end());

  std::vector<int> origin{-1};
  origin.insert(origin.end(), kept.begin(), kept.end());

  const int k = static_cast<int>(origin.size());
  std::vector<ElementSet> up(k, ElementSet(k));
  std::vector<ElementSet> left(k, ElementSet(k));
  up[0].set();
  for (int i = 1; i < k; ++i) {
    for (int j = 1; j < k; ++j) {
      if (lattice.leq(origin[i], origin[j])) up[i].set(j);
      if (lattice.left(origin[i], origin[j])) left[i].set(j);
    }
  }
  return AlphaResult{
      Diagram::create(Poset::from_up_sets(std::move(up)), std::move(left)),
      std::move(origin)};
}

bool is_hco_filter(const Diagram& q, const ElementSet& set) {
  if (static_cast<int>(set.size()) != q.size() || set.none() ||
      set.test(q.bottom())) {
    return false;
  }
  if (q.order().up_closure(set) != set) return false;
  for (int x : members(set)) {
    for (int z : members(set)) {
      if (!q.left(x, z)) continue;
      for (int y = 0; y < q.size(); ++y) {
        if (q.left(x, y) && q.left(y, z) && !set.test(y)) return false;
      }
    }
  }
  return true;
}

std::vector<EligPair> elig_pairs(const Diagram& q) {
  std::vector<EligPair> out;
  for (int x = 0; x < q.size(); ++x) {
    if (x == q.bottom()) continue;
    for (int y = 0; y < q.size(); ++y) {
      if (y != q.bottom() && q.left_or_equal(x, y)) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<int> min_between(const Diagram& q, int x, int y) {
  ElementSet between(q.size());
  for (int z = 0; z < q.size(); ++z) {
    if (q.left_or_equal(x, z) && q.left_or_equal(z, y)) between.set(z);
  }
  return q.order().minimal_elements(between);
}

int leftmost_bottom(const Diagram& q, const ElementSet& filter) {
  const auto mins = q.order().minimal_elements(filter);
  return *std::min_element(mins.begin(), mins.end(), [&](int a, int b) {
    return q.lambda_position(a) < q.lambda_position(b);
  });
}

int rightmost_bottom(const Diagram& q, const ElementSet& filter) {
  const auto mins = q.order().minimal_elements(filter);
  return *std::max_element(mins.begin(), mins.end(), [&](int a, int b) {
    return q.lambda_position(a) < q.lambda_position(b);
  });
}

int FilterFamily::index_of(const ElementSet& set) const {
  auto it = std::lower_bound(filters.begin(), filters.end(), set, filter_before);
  if (it == filters.end() || *it != set) return -1;
  return static_cast<int>(it - filters.begin());
}

FilterFamily enumerate_hco_filters(const Diagram& q) {
  const int n = q.size();
  // Non-bottom elements from the top down along a linear extension, so every
  // upper cover is decided before the element itself.
  std::vector<int> sequence;
  for (int x = 0; x < n; ++x) {
    if (x != q.bottom()) sequence.push_back(x);
  }
  std::sort(sequence.begin(), sequence.end(), [&](int a, int b) {
    return q.lambda_position(a) > q.lambda_position(b);
  });

  FilterFamily family;
  ElementSet current(n);
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == sequence.size()) {
      if (current.any() && is_hco_filter(q, current)) {
        family.filters.push_back(current);
      }
      return;
    }
    const int x = sequence[i];
    self(self, i + 1);
    const auto& ups = q.order().upper_covers(x);
    if (std::all_of(ups.begin(), ups.end(), [&](int u) { return current.test(u); })) {
      current.set(x);
      self(self, i + 1);
      current.reset(x);
    }
  };
  visit(visit, 0);
  std::sort(family.filters.begin(), family.filters.end(), filter_before);

  const ElementSet all = non_bottom(q);
  auto peel = [&](bool leftmost, std::vector<ElementSet>& chain,
                  std::vector<int>& order) {
    ElementSet f(n);
    f.set(q.top());
    chain.push_back(f);
    while (f != all) {
      const auto maxs = q.order().maximal_elements(all & ~f);
      auto by_lambda = [&](int a, int b) {
        return q.lambda_position(a) < q.lambda_position(b);
      };
      const int pick = leftmost ? *std::min_element(maxs.begin(), maxs.end(), by_lambda)
                                : *std::max_element(maxs.begin(), maxs.end(), by_lambda);
      f.set(pick);
      order.push_back(pick);
      chain.push_back(f);
    }
  };
  peel(true, family.vec_f, family.f_peel);
  peel(false, family.vec_g, family.g_peel);
  return family;
}

ElementSet hco_closure(const Diagram& q, const FilterFamily& family,
                       const ElementSet& set) {
  if (static_cast<int>(set.size()) != q.size()) {
    throw DiagramError(ErrorKind::InvalidGroundElement,
                       "set is over a universe of the wrong size");
  }
  if (set.none()) {
    throw DiagramError(ErrorKind::InvalidGroundElement, "closure of the empty set");
  }
  if (set.test(q.bottom())) {
    throw DiagramError(ErrorKind::InvalidGroundElement,
                       "the bottom element cannot lie in an hco-filter");
  }
  ElementSet out = non_bottom(q);
  for (const auto& f : family.filters) {
    if (set.is_subset_of(f)) out &= f;
  }
  return out;
}

ElementSet hco_closure(const Diagram& q, const ElementSet& set) {
  return hco_closure(q, enumerate_hco_filters(q), set);
}

Beta1Result beta1(const Diagram& q) {
  std::vector<EligPair> p = elig_pairs(q);
  const int m = static_cast<int>(p.size());
  std::vector<ElementSet> up(m, ElementSet(m));
  std::vector<ElementSet> left(m, ElementSet(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (q.leq_lambda(p[i].x, p[j].x) && q.leq_rho(p[i].y, p[j].y)) up[i].set(j);
      if (q.less_lambda(p[i].x, p[j].x) && q.less_rho(p[j].y, p[i].y)) left[i].set(j);
    }
  }
  return Beta1Result{
      Diagram::create(Poset::from_up_sets(std::move(up)), std::move(left)),
      std::move(p)};
}

Beta2Result beta2(const Diagram& q) {
  FilterFamily family = enumerate_hco_filters(q);
  const auto& f = family.filters;
  const int m = static_cast<int>(f.size());
  std::vector<int> lo(m), hi(m);
  for (int i = 0; i < m; ++i) {
    lo[i] = leftmost_bottom(q, f[i]);
    hi[i] = rightmost_bottom(q, f[i]);
  }
  std::vector<ElementSet> up(m, ElementSet(m));
  std::vector<ElementSet> left(m, ElementSet(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (f[j].is_subset_of(f[i])) up[i].set(j);
      if (q.less_lambda(lo[i], lo[j]) && q.less_rho(hi[j], hi[i])) left[i].set(j);
    }
  }
  return Beta2Result{
      Diagram::create(Poset::from_up_sets(std::move(up)), std::move(left)),
      std::move(family)};
}

PhiPsi phi_psi(const Diagram& q) {
  const FilterFamily family = enumerate_hco_filters(q);
  PhiPsi out{elig_pairs(q), family.filters, {}, {}};
  for (const auto& [x, y] : out.pairs) {
    const ElementSet c = hco_closure(q, family, make_set(q.size(), {x, y}));
    out.phi.push_back(family.index_of(c));
  }
  for (const auto& f : out.filters) {
    const EligPair p{leftmost_bottom(q, f), rightmost_bottom(q, f)};
    auto it = std::lower_bound(out.pairs.begin(), out.pairs.end(), p);
    out.psi.push_back(it != out.pairs.end() && *it == p
                          ? static_cast<int>(it - out.pairs.begin())
                          : -1);
  }
  return out;
}

Antimatroid antimatroid_of(const Diagram& q) {
  Antimatroid a;
  a.ground = non_bottom(q);
  a.ground.reset(q.top());
  for (const auto& f : enumerate_hco_filters(q).filters) {
    a.feasible.push_back(a.ground & ~f);
  }
  return a;
}

std::vector<std::string> antimatroid_violations(const Antimatroid& a) {
  std::vector<std::string> out;
  if (a.feasible.empty()) {
    out.push_back("feasible family is empty");
    return out;
  }
  const std::set<ElementSet> family(a.feasible.begin(), a.feasible.end());
  ElementSet all(a.ground.size());
  for (const auto& s : a.feasible) {
    if (!s.is_subset_of(a.ground)) {
      out.push_back("feasible set " + to_string(s) + " leaves the ground set");
    }
    all |= s;
    if (s.none()) continue;
    bool accessible = false;
    for (int x : members(s)) {
      ElementSet smaller = s;
      smaller.reset(x);
      if (family.count(smaller)) {
        accessible = true;
        break;
      }
    }
    if (!accessible) out.push_back("feasible set " + to_string(s) + " is not accessible");
  }
  for (const auto& s : a.feasible) {
    for (const auto& t : a.feasible) {
      if (!family.count(s | t)) {
        out.push_back("union of " + to_string(s) + " and " + to_string(t) +
                      " is not feasible");
      }
    }
  }
  if (all != a.ground) out.push_back("feasible sets do not cover the ground set");
  return out;
}

MirComparison meet_irreducibles_of_beta2(const Diagram& q) {
  const Beta2Result b = beta2(q);
  const auto& filters = b.family.filters;
  MirComparison out;
  for (int i = 0; i < b.diagram.size(); ++i) {
    if (b.diagram.order().upper_covers(i).size() == 1) {
      out.by_covers.push_back(filters[i]);
    }
  }
  std::vector<int> principal_index(q.size(), -1);
  std::vector<int> idx;
  for (int x = 0; x < q.size(); ++x) {
    if (x == q.bottom() || x == q.top()) continue;
    principal_index[x] = b.family.index_of(q.order().up(x));
    idx.push_back(principal_index[x]);
  }
  std::sort(idx.begin(), idx.end());
  for (int i : idx) {
    if (i >= 0) out.by_principal.push_back(filters[i]);
    else out.by_principal.push_back(ElementSet());
  }
  out.transport_holds = true;
  for (int x = 0; x < q.size(); ++x) {
    for (int y = 0; y < q.size(); ++y) {
      const int ix = principal_index[x];
      const int iy = principal_index[y];
      if (ix < 0 || iy < 0) continue;
      if (q.left(x, y) != b.diagram.left(ix, iy)) out.transport_holds = false;
    }
  }
  return out;
}

}  // namespace qpd
