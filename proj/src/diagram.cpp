#include "qpd/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qpd/error.hpp"

namespace qpd {

namespace {

std::string pair_text(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

void check_index_range(int n, const std::vector<Pair>& pairs,
                       const std::string& field) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [a, b] = pairs[i];
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw DiagramError(ErrorKind::MalformedDocument,
                         "index out of range in " + pair_text(a, b),
                         "/" + field + "/" + std::to_string(i));
    }
  }
}

}  // namespace

Diagram Diagram::create(Poset order, std::vector<ElementSet> left) {
  const int n = order.size();
  if (static_cast<int>(left.size()) != n) {
    throw DiagramError(ErrorKind::MalformedDocument,
                       "left relation has the wrong number of rows");
  }
  auto lo = order.minimum();
  auto hi = order.maximum();
  if (!lo || !hi) {
    throw DiagramError(ErrorKind::NotBounded,
                       lo ? "no greatest element" : "no least element");
  }

  for (int x = 0; x < n; ++x) {
    for (int y : members(left[x])) {
      if (order.comparable(x, y)) {
        throw DiagramError(ErrorKind::LeftOnComparable,
                           "left pair " + pair_text(x, y) +
                               " joins comparable elements");
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!order.incomparable(x, y)) continue;
      const bool xy = left[x].test(y);
      const bool yx = left[y].test(x);
      if (!xy && !yx) {
        throw DiagramError(ErrorKind::LeftIncomplete,
                           "incomparable pair " + pair_text(x, y) +
                               " has no orientation");
      }
      if (xy && yx) {
        throw DiagramError(ErrorKind::NotLinearizable,
                           "pair " + pair_text(x, y) +
                               " is oriented both ways");
      }
    }
  }

  std::vector<ElementSet> lam(n), rho(n, ElementSet(n));
  for (int x = 0; x < n; ++x) {
    for (int y : members(left[x])) rho[y].set(x);
  }
  for (int x = 0; x < n; ++x) {
    lam[x] = order.up(x) | left[x];
    rho[x] |= order.up(x);
  }
  for (int x = 0; x < n; ++x) {
    for (int y : members(lam[x])) {
      if (!lam[y].is_subset_of(lam[x])) {
        throw DiagramError(ErrorKind::NotLinearizable,
                           "left-of-or-below is not transitive through " +
                               pair_text(x, y));
      }
    }
    for (int y : members(rho[x])) {
      if (!rho[y].is_subset_of(rho[x])) {
        throw DiagramError(ErrorKind::NotLinearizable,
                           "right-of-or-below is not transitive through " +
                               pair_text(x, y));
      }
    }
  }

  Diagram d;
  d.lambda_pos_.resize(n);
  d.rho_pos_.resize(n);
  for (int x = 0; x < n; ++x) {
    d.lambda_pos_[x] = n - static_cast<int>(lam[x].count());
    d.rho_pos_[x] = n - static_cast<int>(rho[x].count());
  }
  d.order_ = std::move(order);
  d.left_ = std::move(left);
  d.bottom_ = *lo;
  d.top_ = *hi;
  return d;
}

std::vector<Pair> Diagram::left_pairs() const {
  std::vector<Pair> out;
  for (int x = 0; x < size(); ++x) {
    for (int y : members(left_[x])) out.emplace_back(x, y);
  }
  return out;
}

RawDiagram Diagram::raw() const {
  return RawDiagram{size(), order_.cover_pairs(), left_pairs()};
}

Diagram validate(const RawDiagram& raw) {
  if (raw.n < 2) {
    throw DiagramError(ErrorKind::MalformedDocument,
                       "a diagram needs at least 2 elements", "/n");
  }
  const int n = raw.n;
  check_index_range(n, raw.covers, "covers");
  check_index_range(n, raw.left, "left");

  Poset order = Poset::from_pairs(n, raw.covers);
  if (!order.minimum() || !order.maximum()) {
    throw DiagramError(ErrorKind::NotBounded,
                       order.minimum() ? "no greatest element"
                                       : "no least element");
  }

  std::vector<ElementSet> left(n, ElementSet(n));
  for (std::size_t i = 0; i < raw.left.size(); ++i) {
    const auto [x, y] = raw.left[i];
    const std::string where = "/left/" + std::to_string(i);
    if (order.comparable(x, y)) {
      throw DiagramError(ErrorKind::LeftOnComparable,
                         "left pair " + pair_text(x, y) +
                             " joins comparable elements",
                         where);
    }
    if (left[y].test(x)) {
      throw DiagramError(ErrorKind::NotLinearizable,
                         "pair " + pair_text(x, y) + " is oriented both ways",
                         where);
    }
    left[x].set(y);
  }
  return Diagram::create(std::move(order), std::move(left));
}

Realizer realizer(const Diagram& d) {
  const int n = d.size();
  Realizer r{std::vector<int>(n), std::vector<int>(n)};
  for (int x = 0; x < n; ++x) {
    r.lam_order[d.lambda_position(x)] = x;
    r.rho_order[d.rho_position(x)] = x;
  }
  return r;
}

CanonicalPermutation canonical_form(const Diagram& d) {
  const Realizer r = realizer(d);
  CanonicalPermutation p;
  for (int i = 1; i + 1 < d.size(); ++i) {
    p.perm.push_back(d.rho_position(r.lam_order[i]));
  }
  return p;
}

Diagram from_canonical(const CanonicalPermutation& p) {
  const int n = p.size();
  std::vector<int> rho(n);
  rho[0] = 0;
  rho[n - 1] = n - 1;
  std::vector<bool> seen(n, false);
  for (int i = 1; i + 1 < n; ++i) {
    const int v = p.perm[i - 1];
    if (v < 1 || v > n - 2 || seen[v]) {
      throw DiagramError(ErrorKind::MalformedDocument,
                         "not a permutation of 1.." + std::to_string(n - 2),
                         "/perm/" + std::to_string(i - 1));
    }
    seen[v] = true;
    rho[i] = v;
  }
  std::vector<ElementSet> up(n, ElementSet(n)), left(n, ElementSet(n));
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      if (rho[x] <= rho[y]) {
        up[x].set(y);
      } else {
        left[x].set(y);
      }
    }
  }
  return Diagram::create(Poset::from_up_sets(std::move(up)), std::move(left));
}

bool similar(const Diagram& a, const Diagram& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

Diagram mirror(const Diagram& d) {
  const int n = d.size();
  std::vector<ElementSet> left(n, ElementSet(n));
  for (const auto& [x, y] : d.left_pairs()) left[y].set(x);
  return Diagram::create(d.order(), std::move(left));
}

std::pair<Chain, Chain> boundary_chains(const Diagram& d) {
  if (auto w = find_non_lattice_witness(d.order())) {
    throw DiagramError(ErrorKind::NotALattice,
                       "pair " + pair_text(w->x, w->y) +
                           " has no " + (w->upper ? "join" : "meet"));
  }
  // Upper covers of one element are pairwise incomparable, so the lambda
  // order restricted to them is exactly the left-to-right order.
  auto walk = [&](bool leftmost) {
    Chain c;
    int cur = d.bottom();
    c.elems.push_back(cur);
    while (cur != d.top()) {
      const auto& ups = d.order().upper_covers(cur);
      cur = *std::min_element(ups.begin(), ups.end(), [&](int a, int b) {
        return leftmost ? d.lambda_position(a) < d.lambda_position(b)
                        : d.lambda_position(a) > d.lambda_position(b);
      });
      c.elems.push_back(cur);
    }
    return c;
  };
  return {walk(true), walk(false)};
}

namespace {

// Orientation search state: state[x][y] = +1 if x left of y, -1 if y left of
// x, 0 if undecided (only meaningful on incomparable pairs).
class OrientationSearch {
 public:
  explicit OrientationSearch(const Poset& order)
      : order_(order), n_(order.size()), state_(n_ * n_, 0) {}

  std::optional<std::vector<ElementSet>> run() { return solve(state_); }

 private:
  using State = std::vector<signed char>;

  // -1 strictly below in the lambda (rho) order, +1 above, 0 unknown.
  int lambda_cmp(const State& s, int x, int y) const {
    if (order_.less(x, y)) return -1;
    if (order_.less(y, x)) return 1;
    return -s[x * n_ + y];
  }
  int rho_cmp(const State& s, int x, int y) const {
    if (order_.less(x, y)) return -1;
    if (order_.less(y, x)) return 1;
    return s[x * n_ + y];
  }

  // Assign x left of y (sign=+1) or y left of x (sign=-1). False on conflict.
  bool assign(State& s, int x, int y, int sign, bool& changed) const {
    auto& cur = s[x * n_ + y];
    if (cur == sign) return true;
    if (cur != 0) return false;
    cur = static_cast<signed char>(sign);
    s[y * n_ + x] = static_cast<signed char>(-sign);
    changed = true;
    return true;
  }

  // Transitivity of both strict linear orders, to fixpoint.
  bool propagate(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
          if (a == b) continue;
          const bool lam_ab = lambda_cmp(s, a, b) < 0;
          const bool rho_ab = rho_cmp(s, a, b) < 0;
          if (!lam_ab && !rho_ab) continue;
          for (int c = 0; c < n_; ++c) {
            if (c == a || c == b) continue;
            if (lam_ab && lambda_cmp(s, b, c) < 0) {
              // need a <lambda c
              if (order_.less(c, a)) return false;
              if (order_.incomparable(a, c) && !assign(s, a, c, +1, changed))
                return false;
            }
            if (rho_ab && rho_cmp(s, b, c) < 0) {
              if (order_.less(c, a)) return false;
              if (order_.incomparable(a, c) && !assign(s, a, c, -1, changed))
                return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::optional<std::vector<ElementSet>> solve(State s) const {
    if (!propagate(s)) return std::nullopt;
    for (int x = 0; x < n_; ++x) {
      for (int y = x + 1; y < n_; ++y) {
        if (!order_.incomparable(x, y) || s[x * n_ + y] != 0) continue;
        for (int sign : {+1, -1}) {
          State next = s;
          bool changed = false;
          assign(next, x, y, sign, changed);
          if (auto found = solve(std::move(next))) return found;
        }
        return std::nullopt;
      }
    }
    std::vector<ElementSet> left(n_, ElementSet(n_));
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (s[x * n_ + y] > 0) left[x].set(y);
      }
    }
    return left;
  }

  const Poset& order_;
  int n_;
  State state_;
};

}  // namespace

std::optional<Diagram> order_dimension_le2(int n, std::span<const Pair> covers) {
  RawDiagram raw{n, {covers.begin(), covers.end()}, {}};
  if (n < 2) {
    throw DiagramError(ErrorKind::MalformedDocument,
                       "a diagram needs at least 2 elements", "/n");
  }
  check_index_range(n, raw.covers, "covers");
  Poset order = Poset::from_pairs(n, raw.covers);
  if (!order.minimum() || !order.maximum()) {
    throw DiagramError(ErrorKind::NotBounded, "order is not bounded");
  }
  auto left = OrientationSearch(order).run();
  if (!left) return std::nullopt;
  return Diagram::create(std::move(order), std::move(*left));
}

Diagram relabel(const Diagram& d, std::span<const int> mapping) {
  const int n = d.size();
  std::vector<ElementSet> left(n, ElementSet(n));
  for (const auto& [x, y] : d.left_pairs()) left[mapping[x]].set(mapping[y]);
  return Diagram::create(d.order().relabel(mapping), std::move(left));
}

Diagram canonical_relabel(const Diagram& d) {
  std::vector<int> mapping(d.size());
  for (int x = 0; x < d.size(); ++x) mapping[x] = d.lambda_position(x);
  return relabel(d, mapping);
}

Diagram subdiagram(const Diagram& d, std::span<const int> elems) {
  const int k = static_cast<int>(elems.size());
  std::vector<ElementSet> left(k, ElementSet(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (d.left(elems[i], elems[j])) left[i].set(j);
    }
  }
  return Diagram::create(d.order().restrict(elems), std::move(left));
}

std::vector<Chain> maximal_chains(const Poset& order) {
  std::vector<Chain> out;
  Chain cur;
  auto extend = [&](auto&& self, int x) -> void {
    cur.elems.push_back(x);
    const auto& ups = order.upper_covers(x);
    if (ups.empty()) {
      out.push_back(cur);
    } else {
      for (int y : ups) self(self, y);
    }
    cur.elems.pop_back();
  };
  for (int x = 0; x < order.size(); ++x) {
    if (order.lower_covers(x).empty()) extend(extend, x);
  }
  return out;
}

}  // namespace qpd
