#include "bettikit/resolutions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bettikit/complexcore.hpp"
#include "bettikit/homology.hpp"

namespace bettikit {

SimplicialComplex koszul_subcomplex(const MonomialIdeal& ideal, const Multidegree& b) {
  const int n = ideal.variable_count();
  if (b.size() != n) throw std::invalid_argument("koszul_subcomplex: multidegree has wrong length");
  std::vector<VertexSet> faces;
  for_each_subset(b.support(), [&](VertexSet f) {
    if (ideal.contains(b - Multidegree::indicator(f, n))) faces.push_back(f);
  });
  return SimplicialComplex::from_facets(n, std::move(faces));
}

std::vector<Multidegree> lcm_lattice(const MonomialIdeal& ideal) {
  std::set<Multidegree> lattice(ideal.generators().begin(), ideal.generators().end());
  std::vector<Multidegree> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Multidegree> next;
    for (const auto& m : frontier)
      for (const auto& g : ideal.generators()) {
        Multidegree j = m.join(g);
        if (lattice.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {lattice.begin(), lattice.end()};
}

BettiTable betti_via_koszul(const MonomialIdeal& ideal, const PrimeField& k) {
  BettiTable table(ideal.variable_count(), Convention::ideal);
  for (const auto& b : lcm_lattice(ideal)) {
    const HomologyRanks h = reduced_homology_ranks(koszul_subcomplex(ideal, b), k);
    for (int d = -1; d <= h.top_degree(); ++d) table.add(d + 1, b, h.at(d));
  }
  return table;
}

BettiTable hochster_betti(const SimplicialComplex& x, const PrimeField& k) {
  const int n = x.vertex_count();
  BettiTable table(n, Convention::quotient);
  if (x.is_void()) return table;
  for_each_subset(VertexSet::full(n), [&](VertexSet w) {
    const HomologyRanks h = reduced_homology_ranks(restriction(x, w), k);
    const Multidegree b = Multidegree::indicator(w, n);
    for (int d = -1; d <= h.top_degree(); ++d) table.add(w.size() - d - 1, b, h.at(d));
  });
  return table;
}

BettiTable dual_betti_via_links(const SimplicialComplex& x, const PrimeField& k) {
  const int n = x.vertex_count();
  BettiTable table(n, Convention::ideal);
  for (VertexSet f : x.faces()) {
    const HomologyRanks h = reduced_homology_ranks(link(f, x), k);
    const Multidegree b = Multidegree::indicator(f.complement(n), n);
    for (int d = -1; d <= h.top_degree(); ++d) table.add(d + 1, b, h.at(d));
  }
  return table;
}

namespace {

// Calls f on every exponent vector of total degree d in n variables.
template <class F>
void for_each_monomial(int n, int d, F&& f) {
  Multidegree m(n);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      m[var] = left;
      f(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[var] = e;
      self(self, var + 1, left - e);
    }
  };
  if (n == 0) {
    if (d == 0) f(m);
    return;
  }
  rec(rec, 0, d);
}

}  // namespace

std::vector<std::int64_t> hilbert_function(const MonomialIdeal& ideal, int d_max) {
  if (d_max < 0) throw std::invalid_argument("hilbert_function: negative degree bound");
  std::vector<std::int64_t> h(static_cast<std::size_t>(d_max) + 1, 0);
  for (int d = 0; d <= d_max; ++d)
    for_each_monomial(ideal.variable_count(), d, [&](const Multidegree& m) {
      if (!ideal.contains(m)) ++h[static_cast<std::size_t>(d)];
    });
  return h;
}

std::pair<int, std::int64_t> hilbert_top(const MonomialIdeal& ideal) {
  if (!ideal.is_artinian()) throw std::invalid_argument("hilbert_top: S/I does not have finite length");
  if (ideal.is_unit()) throw std::invalid_argument("hilbert_top: S/I is zero");
  // A standard monomial has every exponent below the pure power of its variable.
  int bound = 0;
  for (int v = 0; v < ideal.variable_count(); ++v)
    for (const auto& g : ideal.generators())
      if (g.support() == VertexSet{}.with(v)) bound += g[v] - 1;
  const auto h = hilbert_function(ideal, bound);
  int top = bound;
  while (top > 0 && h[static_cast<std::size_t>(top)] == 0) --top;
  return {top, h[static_cast<std::size_t>(top)]};
}

bool artinian_extremal_check(const MonomialIdeal& ideal, const PrimeField& k) {
  const auto [top_degree, top_value] = hilbert_top(ideal);
  const auto cs = corners(coarse_diagram(betti_via_koszul(ideal, k).to_quotient()));
  return cs.size() == 1 && cs[0].l == ideal.variable_count() && cs[0].m == top_degree && cs[0].value == top_value;
}

}  // namespace bettikit
