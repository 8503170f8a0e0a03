#include "bettikit/dualitylab.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "bettikit/complexcore.hpp"
#include "bettikit/homology.hpp"
#include "bettikit/resolutions.hpp"

namespace bettikit {

namespace {

VerificationReport make_report(const char* name, const SimplicialComplex& x, std::uint32_t p) {
  VerificationReport r;
  r.theorem = name;
  r.instance = instance_string(x);
  r.characteristic = p;
  return r;
}

std::string set_string(VertexSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : s.elements()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

void require_nondegenerate(const SimplicialComplex& x) {
  if (x.is_void()) throw std::invalid_argument("void complex: I_X is the unit ideal");
  if (x == SimplicialComplex::simplex(x.vertex_count())) throw std::invalid_argument("full simplex: I_X is zero");
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// First (face, degree) breaking Reisner's vanishing, if any.
std::optional<std::pair<VertexSet, int>> reisner_violation(const SimplicialComplex& x, const PrimeField& k) {
  for (VertexSet f : x.faces()) {
    const SimplicialComplex lk = link(f, x);
    const HomologyRanks h = reduced_homology_ranks(lk, k);
    for (int i = -1; i < lk.dimension(); ++i)
      if (h.at(i) != 0) return std::make_pair(f, i);
  }
  return std::nullopt;
}

// One extremal-flip direction: `dual` plays the table read for extremality.
void check_flip_direction(const BettiTable& dual, const BettiTable& primal, int n, const char* label,
                          VerificationReport& report) {
  for_each_subset(VertexSet::full(n), [&](VertexSet s) {
    if (!report.pass) return;
    const Multidegree b = Multidegree::indicator(s, n);
    for (int i = 0; i <= n; ++i) {
      const std::int64_t lhs = dual.at(i, b);
      const std::int64_t rhs = primal.at(s.size() - i - 1, b);
      std::ostringstream w;
      w << label << " i=" << i << " b=" << set_string(s) << " dual=" << lhs << " primal=" << rhs;
      if (is_i_extremal(dual, i, b) && lhs < rhs) report.fail("i-extremal inequality " + w.str());
      if (is_extremal_position(dual, i, b) && lhs != rhs) report.fail("extremal equality " + w.str());
    }
  });
}

}  // namespace

std::string instance_string(const SimplicialComplex& x) {
  return "n=" + std::to_string(x.vertex_count()) + " " + to_string(x);
}

DualTables dual_tables(const SimplicialComplex& x, const PrimeField& k) {
  return {hochster_betti(x, k).to_ideal(), dual_betti_via_links(x, k)};
}

VerificationReport check_restriction_link_sequence(const SimplicialComplex& x, VertexSet b, int v,
                                                   const PrimeField& k) {
  const int n = x.vertex_count();
  if (v < 0 || v >= n || b.contains(v)) throw std::invalid_argument("vertex must lie outside b");
  if (!b.subset_of(VertexSet::full(n))) throw std::invalid_argument("b uses a vertex >= n");
  auto report = make_report("restriction-link-sequence", x, k.characteristic());

  const SimplicialComplex small = restriction(x, b);
  const SimplicialComplex big = restriction(x, b.with(v));
  const VertexSet apex = VertexSet{}.with(v);
  const SimplicialComplex lk = big.contains(apex) ? link(apex, big) : SimplicialComplex::void_complex(n);

  const HomologyRanks h_small = reduced_homology_ranks(small, k);
  const HomologyRanks h_big = reduced_homology_ranks(big, k);
  const HomologyRanks h_lk = reduced_homology_ranks(lk, k);
  const HomologyRanks h_rel = relative_homology_ranks(big, small, k);

  std::int64_t alternating = 0;
  for (int i = -1; i <= n; ++i) {
    std::ostringstream w;
    w << "b=" << set_string(b) << " v=" << v << " i=" << i;
    if (h_small.at(i) > h_lk.at(i) + h_big.at(i))
      report.fail("exactness bound " + w.str() + " h(X_b)=" + std::to_string(h_small.at(i)) +
                  " h(lk)=" + std::to_string(h_lk.at(i)) + " h(X_b+v)=" + std::to_string(h_big.at(i)));
    if (h_rel.at(i) != h_lk.at(i - 1))
      report.fail("excision " + w.str() + " rel=" + std::to_string(h_rel.at(i)) +
                  " link=" + std::to_string(h_lk.at(i - 1)));
    const std::int64_t term = h_small.at(i) - h_big.at(i) + h_lk.at(i - 1);
    alternating += (i % 2 == 0) ? term : -term;
  }
  if (alternating != 0)
    report.fail("alternating sum b=" + set_string(b) + " v=" + std::to_string(v) + " value=" +
                std::to_string(alternating));
  return report;
}

VerificationReport check_restriction_link_sequence_all(const SimplicialComplex& x, const PrimeField& k) {
  const int n = x.vertex_count();
  auto report = make_report("restriction-link-sequence", x, k.characteristic());
  for_each_subset(VertexSet::full(n), [&](VertexSet b) {
    for (int v = 0; v < n && report.pass; ++v) {
      if (b.contains(v)) continue;
      auto single = check_restriction_link_sequence(x, b, v, k);
      if (!single.pass) report.fail(single.witness);
    }
  });
  return report;
}

VerificationReport check_betti_duality_bound(const SimplicialComplex& x, const PrimeField& k) {
  return check_betti_duality_bound(x, dual_tables(x, k), k.characteristic());
}

VerificationReport check_betti_duality_bound(const SimplicialComplex& x, const DualTables& t, std::uint32_t p) {
  const int n = x.vertex_count();
  auto report = make_report("duality-bound", x, p);
  for (const auto& [key, lhs] : t.primal.entries()) {
    const auto& [i, b] = key;
    if (i > n - 1) continue;
    const VertexSet s = b.support();
    std::int64_t rhs = 0;
    for_each_subset(s.complement(n), [&](VertexSet extra) {
      rhs += t.dual.at(s.size() - i - 1, Multidegree::indicator(s | extra, n));
    });
    if (lhs > rhs) {
      std::ostringstream w;
      w << "i=" << i << " b=" << set_string(s) << " beta=" << lhs << " dual_sum=" << rhs;
      report.fail(w.str());
    }
  }
  return report;
}

VerificationReport check_graded_duality_bound(const SimplicialComplex& x, const PrimeField& k) {
  return check_graded_duality_bound(x, dual_tables(x, k), k.characteristic());
}

VerificationReport check_graded_duality_bound(const SimplicialComplex& x, const DualTables& t, std::uint32_t p) {
  const int n = x.vertex_count();
  auto report = make_report("graded-duality-bound", x, p);
  const BettiDiagram primal = coarse_diagram(t.primal);
  const BettiDiagram dual = coarse_diagram(t.dual);
  for (int i = 0; i <= n - 1; ++i)
    for (int m = i + 1; m <= n; ++m) {
      const std::int64_t lhs = primal.at(i, m);
      std::int64_t rhs = 0;
      for (int extra = 0; extra <= n - m; ++extra) rhs += binomial(m + extra, extra) * dual.at(m - i - 1, m + extra);
      if (lhs > rhs) {
        std::ostringstream w;
        w << "i=" << i << " m=" << m << " beta=" << lhs << " weighted_dual_sum=" << rhs;
        report.fail(w.str());
      }
    }
  return report;
}

VerificationReport check_extremal_flip(const SimplicialComplex& x, const PrimeField& k) {
  require_nondegenerate(x);
  return check_extremal_flip(x, dual_tables(x, k), k.characteristic());
}

VerificationReport check_extremal_flip(const SimplicialComplex& x, const DualTables& t, std::uint32_t p) {
  require_nondegenerate(x);
  auto report = make_report("extremal-flip", x, p);
  check_flip_direction(t.dual, t.primal, x.vertex_count(), "dual->primal", report);
  check_flip_direction(t.primal, t.dual, x.vertex_count(), "primal->dual", report);
  return report;
}

VerificationReport check_regularity_pd_duality(const SimplicialComplex& x, const PrimeField& k) {
  require_nondegenerate(x);
  auto report = make_report("reg-pd-duality", x, k.characteristic());
  const int reg_ideal = regularity(coarse_diagram(hochster_betti(x, k))) + 1;
  const int pd_dual = projective_dimension(coarse_diagram(dual_betti_via_links(x, k).to_quotient()));
  if (reg_ideal != pd_dual)
    report.fail("reg(I_X)=" + std::to_string(reg_ideal) + " pd(S/I_dual)=" + std::to_string(pd_dual));
  else
    report.witness = "reg(I_X)=pd(S/I_dual)=" + std::to_string(reg_ideal);
  return report;
}

bool is_cohen_macaulay(const SimplicialComplex& x, const PrimeField& k) {
  if (x.is_void()) throw std::invalid_argument("Cohen-Macaulay test on the void complex");
  return !reisner_violation(x, k).has_value();
}

bool is_cohen_macaulay_by_depth(const SimplicialComplex& x, const PrimeField& k) {
  if (x.is_void()) throw std::invalid_argument("Cohen-Macaulay test on the void complex");
  const int pd = projective_dimension(coarse_diagram(hochster_betti(x, k)));
  return pd == x.vertex_count() - x.dimension() - 1;
}

VerificationReport check_cohen_macaulay(const SimplicialComplex& x, const PrimeField& k) {
  auto report = make_report("cohen-macaulay", x, k.characteristic());
  const auto violation = reisner_violation(x, k);
  const bool by_links = !violation.has_value();
  const bool by_depth = is_cohen_macaulay_by_depth(x, k);
  if (by_links != by_depth) {
    report.fail("routes disagree: links=" + std::to_string(by_links) + " depth=" + std::to_string(by_depth));
  } else if (!by_links) {
    const int pd = projective_dimension(coarse_diagram(hochster_betti(x, k)));
    report.fail("false: H~_" + std::to_string(violation->second) + "(lk(" + set_string(violation->first) +
                ")) != 0; pd=" + std::to_string(pd) +
                " codim=" + std::to_string(x.vertex_count() - x.dimension() - 1));
  }
  return report;
}

bool is_gorenstein(const SimplicialComplex& x, const PrimeField& k) {
  if (x.is_void()) throw std::invalid_argument("Gorenstein test on the void complex");
  const SimplicialComplex c = core(x);
  for (VertexSet f : c.faces()) {
    const SimplicialComplex lk = link(f, c);
    const HomologyRanks h = reduced_homology_ranks(lk, k);
    const int d = lk.dimension();
    for (int i = -1; i <= d; ++i)
      if (h.at(i) != (i == d ? 1 : 0)) return false;
  }
  return true;
}

VerificationReport check_gorenstein(const SimplicialComplex& x, const PrimeField& k) {
  auto report = make_report("gorenstein", x, k.characteristic());
  const bool by_links = is_gorenstein(x, k);
  const BettiDiagram d = coarse_diagram(hochster_betti(x, k));
  const auto totals = d.totals();
  const bool by_type = is_cohen_macaulay_by_depth(x, k) && totals.back() == 1;
  const auto cs = corners(d);
  std::string corner_list;
  for (const auto& c : cs) corner_list += (corner_list.empty() ? "" : " ") + to_string(c);

  if (by_links != by_type) {
    report.fail("routes disagree: links=" + std::to_string(by_links) + " cm_type_one=" + std::to_string(by_type));
  } else if (!by_links) {
    report.fail("false: corners=" + corner_list);
  } else {
    if (cs.size() != 1 || cs.front().value != 1) report.fail("Gorenstein but corners=" + corner_list);
    if (!has_linear_resolution(dual_betti_via_links(x, k))) report.fail("Gorenstein but dual resolution not linear");
  }
  return report;
}

bool is_doubly_cohen_macaulay(const SimplicialComplex& x, const PrimeField& k) {
  if (!is_cohen_macaulay(x, k)) return false;
  const int n = x.vertex_count();
  for (int v : x.vertices().elements()) {
    const SimplicialComplex deleted = restriction(x, VertexSet{}.with(v).complement(n));
    if (deleted.dimension() != x.dimension() || !is_cohen_macaulay(deleted, k)) return false;
  }
  return true;
}

VerificationReport check_doubly_cohen_macaulay(const SimplicialComplex& x, const PrimeField& k) {
  auto report = make_report("doubly-cohen-macaulay", x, k.characteristic());
  if (!is_doubly_cohen_macaulay(x, k)) {
    report.fail("false");
    return report;
  }
  const int n = x.vertex_count();
  const BettiTable dual = dual_betti_via_links(x, k);
  if (!has_linear_resolution(dual)) report.fail("doubly CM but dual resolution not linear");
  const auto ext = multigraded_extremal(dual);
  const Multidegree all = Multidegree::indicator(VertexSet::full(n), n);
  if (ext.size() != 1 || ext.front().first != x.dimension() + 1 || ext.front().second != all)
    report.fail("doubly CM but dual has " + std::to_string(ext.size()) + " extremal positions");
  return report;
}

}  // namespace bettikit
