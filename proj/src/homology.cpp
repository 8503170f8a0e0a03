#include "bettikit/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace bettikit {

bool HomologyRanks::is_zero() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](int r) { return r == 0; });
}

ModMatrix boundary_matrix(std::span<const VertexSet> faces, std::span<const VertexSet> lower, const PrimeField& k) {
  ModMatrix m(faces.size(), lower.size());
  const PrimeField::Element minus_one = k.neg(1);
  for (std::size_t r = 0; r < faces.size(); ++r) {
    int j = 0;
    for (int v : faces[r].elements()) {
      const VertexSet boundary = faces[r].without(v);
      auto it = std::lower_bound(lower.begin(), lower.end(), boundary);
      if (it != lower.end() && *it == boundary)
        m.set(r, static_cast<std::size_t>(it - lower.begin()), j % 2 == 0 ? 1 : minus_one);
      ++j;
    }
  }
  return m;
}

namespace {

// Homology of a chain complex whose degree-d basis is chains[d + 1].
HomologyRanks ranks_of_chains(const std::vector<std::vector<VertexSet>>& chains, const PrimeField& k) {
  const std::size_t levels = chains.size();
  // boundary_rank[d] = rank of the map out of chains[d].
  std::vector<int> boundary_rank(levels + 1, 0);
  for (std::size_t d = 1; d < levels; ++d) {
    if (chains[d].empty() || chains[d - 1].empty()) continue;
    boundary_rank[d] = static_cast<int>(matrix_rank(boundary_matrix(chains[d], chains[d - 1], k), k));
  }
  std::vector<int> ranks(levels, 0);
  for (std::size_t d = 0; d < levels; ++d)
    ranks[d] = static_cast<int>(chains[d].size()) - boundary_rank[d] - boundary_rank[d + 1];
  return HomologyRanks(std::move(ranks));
}

}  // namespace

HomologyRanks reduced_homology_ranks(const SimplicialComplex& x, const PrimeField& k) {
  if (x.is_void()) return HomologyRanks{};
  return ranks_of_chains(x.faces_by_size(), k);
}

HomologyRanks relative_homology_ranks(const SimplicialComplex& x, const SimplicialComplex& a, const PrimeField& k) {
  if (a.vertex_count() != x.vertex_count()) throw std::invalid_argument("relative homology: vertex counts differ");
  for (VertexSet f : a.facets())
    if (!x.contains(f)) throw std::invalid_argument("relative homology: A is not a subcomplex of X");
  if (x.is_void()) return HomologyRanks{};
  auto chains = x.faces_by_size();
  for (auto& level : chains) std::erase_if(level, [&](VertexSet f) { return a.contains(f); });
  return ranks_of_chains(chains, k);
}

}  // namespace bettikit
