#include "qpd/verify.hpp"

#include <algorithm>
#include <set>

#include "qpd/enumerate.hpp"
#include "qpd/error.hpp"
#include "qpd/lattice.hpp"
#include "qpd/transform.hpp"

namespace qpd {

void PropertyLog::record(std::string_view name, bool ok,
                         const CanonicalPermutation& subject,
                         const std::function<std::string()>& detail,
                         std::optional<RawDiagram> diagram) {
  auto it = results_.find(name);
  if (it == results_.end()) {
    it = results_.emplace(std::string(name), PropertyResult{std::string(name), 0, 0, std::nullopt}).first;
  }
  auto& r = it->second;
  ++r.checked;
  if (ok) return;
  ++r.failures;
  if (!r.witness || subject < r.witness->perm) {
    r.witness = Witness{subject, detail ? detail() : std::string{}, std::move(diagram)};
  }
}

void PropertyLog::merge(const PropertyLog& other) {
  for (const auto& [name, theirs] : other.results_) {
    auto it = results_.find(name);
    if (it == results_.end()) {
      results_.emplace(name, theirs);
      continue;
    }
    auto& mine = it->second;
    mine.checked += theirs.checked;
    mine.failures += theirs.failures;
    if (theirs.witness && (!mine.witness || theirs.witness->perm < mine.witness->perm)) {
      mine.witness = theirs.witness;
    }
  }
}

std::vector<PropertyResult> PropertyLog::results() const {
  std::vector<PropertyResult> out;
  for (const auto& [name, r] : results_) out.push_back(r);
  return out;
}

bool PropertyLog::passed() const {
  return std::all_of(results_.begin(), results_.end(),
                     [](const auto& kv) { return kv.second.passed(); });
}

bool EnumerationReport::passed() const {
  return count == expected &&
         std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed(); });
}

namespace {

std::string num(int x) { return std::to_string(x); }

std::string pair_text(int x, int y) { return "(" + num(x) + "," + num(y) + ")"; }

// +1 if x is strictly left of the chain, -1 if strictly right, 0 if on it.
// Returns nullopt when x is not on the chain but the sides disagree or no
// chain element is incomparable to x.
std::optional<int> side_of_chain(const Diagram& d, const Chain& c, int x) {
  if (std::find(c.elems.begin(), c.elems.end(), x) != c.elems.end()) return 0;
  int side = 0;
  for (int e : c.elems) {
    if (!d.incomparable(x, e)) continue;
    const int s = d.left(x, e) ? 1 : -1;
    if (side != 0 && s != side) return std::nullopt;
    side = s;
  }
  if (side == 0) return std::nullopt;
  return side;
}

void check_chain_sides(const Diagram& d, const CanonicalPermutation& tag,
                       PropertyLog& log, std::string_view name) {
  for (const Chain& c : maximal_chains(d.order())) {
    for (int x = 0; x < d.size(); ++x) {
      log.record(name, side_of_chain(d, c, x).has_value(), tag,
                 [&] { return "element " + num(x) + " straddles a maximal chain"; });
    }
  }
}

void check_chain_crossing(const Diagram& d, const CanonicalPermutation& tag,
                       PropertyLog& log) {
  for (const Chain& c : maximal_chains(d.order())) {
    std::vector<int> side(d.size(), 0);
    for (int x = 0; x < d.size(); ++x) side[x] = side_of_chain(d, c, x).value_or(0);
    for (int x = 0; x < d.size(); ++x) {
      for (int y = 0; y < d.size(); ++y) {
        if (!d.leq(x, y) || side[x] * side[y] >= 0) continue;
        const bool through = std::any_of(c.elems.begin(), c.elems.end(), [&](int z) {
          return d.leq(x, z) && d.leq(z, y);
        });
        log.record("lattice.chain_crossing", through, tag, [&] {
          return "no chain element between " + pair_text(x, y);
        });
      }
    }
  }
}

void check_table_laws(const Diagram& d, const LatticeTables& t,
                      const CanonicalPermutation& tag, PropertyLog& log) {
  const int n = d.size();
  const auto& m = t.meet;
  const auto& j = t.join;
  bool ok = true;
  std::string where;
  for (int a = 0; a < n && ok; ++a) {
    if (m[a][a] != a || j[a][a] != a) ok = false, where = "idempotence at " + num(a);
    for (int b = 0; b < n && ok; ++b) {
      if (m[a][b] != m[b][a] || j[a][b] != j[b][a]) {
        ok = false, where = "commutativity at " + pair_text(a, b);
      } else if (m[a][j[a][b]] != a || j[a][m[a][b]] != a) {
        ok = false, where = "absorption at " + pair_text(a, b);
      }
      for (int c = 0; c < n && ok; ++c) {
        if (m[m[a][b]][c] != m[a][m[b][c]] || j[j[a][b]][c] != j[a][j[b][c]]) {
          ok = false, where = "associativity at " + num(a) + "," + num(b) + "," + num(c);
        }
      }
    }
  }
  log.record("lattice.table_laws", ok, tag, [&] { return where; });
}

}  // namespace

void check_lattice_properties(const Diagram& d, const CanonicalPermutation& tag,
                              PropertyLog& log, bool chain_properties) {
  const int n = d.size();
  const LatticeTables t = lattice_tables(d);
  const SupportData s = supports(d);
  const Poset& ord = d.order();

  check_table_laws(d, t, tag, log);

  for (int x = 0; x < n; ++x) {
    log.record("supports.join_identity", t.join[s.lsp[x]][s.rsp[x]] == x, tag,
               [&] { return "lsp v rsp != x at " + num(x); });
    if (x == d.top()) continue;
    log.record("supports.meet_identity", t.meet[s.lds[x]][s.rds[x]] == x, tag,
               [&] { return "lds ^ rds != x at " + num(x); });
    std::vector<int> expected{s.lds[x], s.rds[x]};
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    const auto reps = irredundant_meet_representations(t, x);
    log.record("supports.unique_irredundant_meet",
               reps.size() == 1 && reps.front() == expected, tag, [&] {
                 return num(static_cast<int>(reps.size())) +
                        " irredundant Mir-representations of " + num(x);
               });
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const bool by_supports = ord.leq(s.lsp[x], s.lsp[y]) && ord.leq(s.rsp[x], s.rsp[y]);
      log.record("supports.order_characterization", d.leq(x, y) == by_supports, tag,
                 [&] { return "at " + pair_text(x, y); });
      if (d.incomparable(x, y)) {
        const bool left = ord.less(s.lsp[y], s.lsp[x]) && ord.less(s.rsp[x], s.rsp[y]);
        log.record("supports.left_characterization", d.left(x, y) == left, tag,
                   [&] { return "at " + pair_text(x, y); });
      }
      const bool dual_leq = d.leq_lambda(s.lds[x], s.lds[y]) && d.leq_rho(s.rds[x], s.rds[y]);
      log.record("dual_supports.order_characterization", d.leq(x, y) == dual_leq, tag,
                 [&] { return "at " + pair_text(x, y); });
      const bool dual_left =
          d.less_lambda(s.lds[x], s.lds[y]) && d.less_rho(s.rds[y], s.rds[x]);
      log.record("dual_supports.left_characterization", d.left(x, y) == dual_left, tag,
                 [&] { return "at " + pair_text(x, y); });
    }
  }

  for (int x0 = 0; x0 < n; ++x0) {
    for (int x1 = 0; x1 < n; ++x1) {
      if (x0 == x1 || !d.incomparable(x0, x1)) continue;
      for (int y = 0; y < n; ++y) {
        if (y == x0 || y == x1 || !d.incomparable(x0, y) || !d.incomparable(x1, y)) continue;
        const bool between = (d.left(x0, y) && d.left(y, x1)) ||
                             (d.left(x1, y) && d.left(y, x0));
        const bool below = d.leq(t.meet[x0][x1], y);
        if (between) {
          log.record("betweenness.forward", below, tag, [&] {
            return num(y) + " between " + pair_text(x0, x1) + " but not above the meet";
          });
        }
        if (below) {
          log.record("betweenness.converse", between, tag, [&] {
            return num(y) + " above the meet of " + pair_text(x0, x1) + " but not between";
          });
        }
      }
    }
  }

  for (int a : t.mir) {
    for (int c = 0; c < n; ++c) {
      if (!d.less(a, c)) continue;
      for (int b = 0; b < n; ++b) {
        if (!d.leq(t.meet[b][c], a)) continue;
        log.record("lattice.meet_semidistributive", d.leq(b, a), tag, [&] {
          return "a=" + num(a) + " b=" + num(b) + " c=" + num(c);
        });
      }
    }
  }

  if (chain_properties) {
    check_chain_crossing(d, tag, log);
    check_chain_sides(d, tag, log, "lattice.chain_sides");
  }

  // Round trip through the quasiplanar side.
  const Diagram q = alpha(d).diagram;
  log.record("lattice.beta2_alpha_roundtrip", similar(beta2(q).diagram, d), tag,
             [&] { return std::string("beta2(alpha(D)) is not similar to D"); });
  log.record("lattice.beta1_alpha_roundtrip", similar(beta1(q).diagram, d), tag,
             [&] { return std::string("beta1(alpha(D)) is not similar to D"); });

  const auto [lb, rb] = boundary_chains(d);
  log.record("lattice.from_boundary_chains", diagram_from_chains(ord, lb, rb) == d, tag,
             [&] { return std::string("boundary chains do not reconstruct D"); });
  log.record("lattice.mirror_isomorphic", lattice_isomorphic(d, mirror(d)), tag,
             [&] { return std::string("D and its mirror image reported non-isomorphic"); });
}

void check_quasiplanar_properties(const Diagram& q, PropertyLog& log,
                                  const VerifyOptions& options) {
  const CanonicalPermutation tag = canonical_form(q);
  const int n = q.size();
  const bool chains = options.chain_properties.value_or(n <= 6);

  if (chains) check_chain_sides(q, tag, log, "quasiplanar.chain_sides");

  std::optional<Beta1Result> b1;
  std::optional<Beta2Result> b2;
  try {
    b1 = beta1(q);
    log.record("beta1.valid", true, tag, {});
  } catch (const DiagramError& e) {
    log.record("beta1.valid", false, tag, [&] { return std::string(e.what()); });
  }
  try {
    Beta2Result computed = beta2(q);
    if (options.corrupt_beta2) {
      RawDiagram raw = computed.diagram.raw();
      options.corrupt_beta2(tag, raw);
      try {
        computed.diagram = validate(raw);
      } catch (const DiagramError& e) {
        log.record("beta2.valid", false, tag, [&] { return std::string(e.what()); }, raw);
        return;
      }
    }
    b2 = std::move(computed);
    log.record("beta2.valid", true, tag, {});
  } catch (const DiagramError& e) {
    log.record("beta2.valid", false, tag, [&] { return std::string(e.what()); });
  }
  if (!b1 || !b2) return;

  const Diagram& l1 = b1->diagram;
  const Diagram& l2 = b2->diagram;
  const FilterFamily& family = b2->family;
  const auto& filters = family.filters;

  log.record("beta1.similar_beta2", similar(l1, l2), tag,
             [&] { return std::string("beta1(Q) and beta2(Q) differ"); }, l1.raw());
  log.record("beta2.size_equals_elig",
             l2.size() == static_cast<int>(elig_pairs(q).size()) && l1.size() == l2.size(),
             tag, [&] { return "|beta2| = " + num(l2.size()); });

  const bool is_lat = is_lattice(l2.order());
  log.record("beta2.lattice", is_lat, tag,
             [&] { return std::string("beta2(Q) is not a lattice"); }, l2.raw());
  if (!is_lat) return;
  const bool semimodular = is_semimodular(l2);
  const bool slim = is_slim(l2);
  log.record("beta2.semimodular", semimodular, tag, [&] { return std::string("not semimodular"); },
             l2.raw());
  log.record("beta2.slim", slim, tag, [&] { return std::string("not slim"); }, l2.raw());
  log.record("beta2.join_distributive", is_join_distributive(l2), tag,
             [&] { return std::string("not join-distributive"); }, l2.raw());
  if (!semimodular || !slim) return;

  // Round trips.
  const Diagram a2 = alpha(l2).diagram;
  log.record("roundtrip.alpha_beta1", similar(alpha(l1).diagram, q), tag,
             [&] { return std::string("alpha(beta1(Q)) is not similar to Q"); });
  log.record("roundtrip.alpha_beta2", similar(a2, q), tag,
             [&] { return std::string("alpha(beta2(Q)) is not similar to Q"); }, a2.raw());
  log.record("roundtrip.beta2_alpha_beta2", similar(beta2(a2).diagram, l2), tag,
             [&] { return std::string("beta2(alpha(beta2(Q))) is not similar to beta2(Q)"); });

  // Antimatroid.
  const Antimatroid am = antimatroid_of(q);
  const auto violations = antimatroid_violations(am);
  log.record("antimatroid.axioms", violations.empty(), tag,
             [&] { return violations.empty() ? std::string{} : violations.front(); });
  bool inclusion_iso = am.feasible.size() == filters.size();
  for (std::size_t i = 0; inclusion_iso && i < filters.size(); ++i) {
    for (std::size_t j = 0; j < filters.size(); ++j) {
      const bool below = l2.leq(static_cast<int>(i), static_cast<int>(j));
      if (below != am.feasible[i].is_subset_of(am.feasible[j])) inclusion_iso = false;
    }
  }
  log.record("antimatroid.lattice_isomorphism", inclusion_iso, tag,
             [&] { return std::string("feasible sets under inclusion differ from beta2(Q)"); });

  // phi / psi.
  const PhiPsi pp = phi_psi(q);
  const int m = static_cast<int>(pp.pairs.size());
  bool reciprocal = static_cast<int>(pp.filters.size()) == m;
  for (int i = 0; reciprocal && i < m; ++i) {
    reciprocal = pp.phi[i] >= 0 && pp.psi[pp.phi[i]] == i && pp.psi[i] >= 0 &&
                 pp.phi[pp.psi[i]] == i;
  }
  log.record("phi_psi.reciprocal", reciprocal, tag,
             [&] { return std::string("phi and psi are not mutually inverse"); });
  if (reciprocal) {
    bool order_iso = true;
    bool transport = true;
    // beta1 elements are the pairs in the same sorted order as pp.pairs.
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (l1.leq(i, j) != l2.leq(pp.phi[i], pp.phi[j])) order_iso = false;
        if (l1.left(i, j) != l2.left(pp.phi[i], pp.phi[j])) transport = false;
      }
    }
    log.record("phi_psi.order_isomorphism", order_iso, tag,
               [&] { return std::string("phi is not an order isomorphism"); });
    log.record("phi_psi.left_transport", transport, tag,
               [&] { return std::string("phi does not transport the left relation"); });
  }

  // Closure formulas for eligible pairs.
  for (const auto& [x, y] : pp.pairs) {
    const ElementSet cl = hco_closure(q, family, make_set(n, {x, y}));
    const auto mb = min_between(q, x, y);
    const ElementSet expected = q.order().up_closure(make_set(n, mb));
    auto mins = q.order().minimal_elements(cl);
    log.record("closure.up_min_between", cl == expected, tag,
               [&] { return "closure of " + pair_text(x, y) + " = " + to_string(cl); });
    log.record("closure.extreme_bottoms",
               leftmost_bottom(q, cl) == x && rightmost_bottom(q, cl) == y, tag,
               [&] { return "extreme bottoms of the closure of " + pair_text(x, y); });
    log.record("closure.min_equals_min_between", mins == mb, tag,
               [&] { return "Min of the closure of " + pair_text(x, y); });
    if (x == y) {
      log.record("closure.principal", cl == q.order().up(x), tag,
                 [&] { return "closure of " + num(x) + " is not its up-set"; });
    }
  }

  // Closure laws on arbitrary triples of non-bottom elements.
  std::vector<ElementSet> pair_closure(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != q.bottom() && b != q.bottom()) {
        pair_closure[a * n + b] = hco_closure(q, family, make_set(n, {a, b}));
      }
    }
  }
  auto cl2 = [&](int a, int b) -> const ElementSet& { return pair_closure[a * n + b]; };
  for (int x1 = 0; x1 < n; ++x1) {
    if (x1 == q.bottom()) continue;
    for (int x2 = 0; x2 < n; ++x2) {
      if (x2 == q.bottom()) continue;
      for (int x3 = 0; x3 < n; ++x3) {
        if (x3 == q.bottom()) continue;
        const bool some = cl2(x2, x3).test(x1) || cl2(x1, x3).test(x2) || cl2(x1, x2).test(x3);
        log.record("closure.law_one_of_three", some, tag, [&] {
          return "no element of {" + num(x1) + "," + num(x2) + "," + num(x3) +
                 "} lies in the closure of the other two";
        });
        if (q.left_or_equal(x1, x2) && q.less(x3, x1)) {
          log.record("closure.law_below_left", !cl2(x1, x2).test(x3), tag, [&] {
            return num(x3) + " lies in the closure of " + pair_text(x1, x2);
          });
        }
        if (q.left(x1, x2) && q.left(x2, x3)) {
          log.record("closure.law_outer", !cl2(x2, x3).test(x1) && !cl2(x1, x2).test(x3), tag,
                     [&] { return "outer element captured in " + num(x1) + "," + num(x2) +
                                  "," + num(x3); });
        }
      }
    }
  }

  // Boundary filter sequences.
  bool closed = static_cast<int>(family.vec_f.size()) == n - 1 &&
                static_cast<int>(family.vec_g.size()) == n - 1;
  for (const auto& f : family.vec_f) {
    if (family.index_of(f) < 0) closed = false;
    for (int x : members(f)) {
      for (int y = 0; y < n; ++y) {
        if (q.left(y, x) && !f.test(y)) closed = false;
      }
    }
  }
  for (const auto& g : family.vec_g) {
    if (family.index_of(g) < 0) closed = false;
    for (int x : members(g)) {
      for (int y = 0; y < n; ++y) {
        if (q.left(x, y) && !g.test(y)) closed = false;
      }
    }
  }
  log.record("filters.boundary_sequences_closed", closed, tag,
             [&] { return std::string("peeling sequence is not left/right closed"); });
  for (const auto& b : filters) {
    bool found = false;
    for (const auto& f : family.vec_f) {
      for (const auto& g : family.vec_g) {
        if ((f & g) == b) found = true;
      }
    }
    log.record("filters.meet_of_boundaries", found, tag,
               [&] { return to_string(b) + " is no F_i intersect G_j"; });
  }
  {
    const auto [lb, rb] = boundary_chains(l2);
    Chain expect_left, expect_right;
    for (auto it = family.vec_f.rbegin(); it != family.vec_f.rend(); ++it) {
      expect_left.elems.push_back(family.index_of(*it));
    }
    for (auto it = family.vec_g.rbegin(); it != family.vec_g.rend(); ++it) {
      expect_right.elems.push_back(family.index_of(*it));
    }
    log.record("beta2.boundary_chains", lb == expect_left && rb == expect_right, tag,
               [&] { return std::string("boundary chains differ from the peeling sequences"); });
  }

  const MirComparison mir = meet_irreducibles_of_beta2(q);
  log.record("beta2.mir_principal", mir.by_covers == mir.by_principal, tag,
             [&] { return std::string("Mir(beta2(Q)) differs from the principal filters"); });
  log.record("beta2.left_transport", mir.transport_holds, tag,
             [&] { return std::string("left relation not transported to principal filters"); });

  check_lattice_properties(l2, tag, log, chains);
}

EnumerationReport verify_suite(int n, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  EnumerationReport report;
  report.size = n;
  report.expected = factorial(n - 2);
  PropertyLog log;
  std::set<CanonicalPermutation> images;
  bool injective = true;
  for_each_canonical_permutation(n, [&](const CanonicalPermutation& p) {
    ++report.count;
    const Diagram q = from_canonical(p);
    check_quasiplanar_properties(q, log, options);
    try {
      if (!images.insert(canonical_form(beta2(q).diagram)).second) injective = false;
    } catch (const DiagramError&) {
      injective = false;
    }
    log.record("beta2.injective", injective, p,
               [] { return std::string("two diagrams share a beta2 image"); });
  });
  log.record("count", report.count == report.expected, CanonicalPermutation{},
             [&] { return "found " + std::to_string(report.count) + " classes"; });
  report.results = log.results();
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace qpd
