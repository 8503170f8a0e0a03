#include "bettikit/complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace bettikit {

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> faces) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count must be in [0, 64]");
  const VertexSet ground = VertexSet::full(n);
  for (VertexSet f : faces)
    if (!f.subset_of(ground)) throw std::invalid_argument("face uses a vertex >= n");

  // Larger faces first, so a face only has to be checked against kept ones.
  std::sort(faces.begin(), faces.end(), [](VertexSet a, VertexSet b) { return a > b; });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<VertexSet> kept;
  for (VertexSet f : faces) {
    bool covered = std::any_of(kept.begin(), kept.end(), [f](VertexSet g) { return f.subset_of(g); });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return SimplicialComplex(n, std::move(kept));
}

ComplexKind SimplicialComplex::kind() const {
  if (facets_.empty()) return ComplexKind::void_complex;
  if (facets_.size() == 1 && facets_.front().empty()) return ComplexKind::irrelevant;
  return ComplexKind::proper;
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VertexSet f) { return face.subset_of(f); });
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) return -2;
  return facets_.back().size() - 1;
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet v;
  for (VertexSet f : facets_) v = v | f;
  return v;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<std::uint64_t> seen;
  for (VertexSet f : facets_) for_each_subset(f, [&](VertexSet s) { seen.insert(s.bits()); });
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (std::uint64_t b : seen) out.emplace_back(b);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
  std::vector<std::vector<VertexSet>> out(static_cast<std::size_t>(dimension() + 2));
  for (VertexSet f : faces()) out[static_cast<std::size_t>(f.size())].push_back(f);
  return out;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return f.size() == facets_.back().size(); });
}

std::string to_string(const SimplicialComplex& x) {
  std::ostringstream os;
  os << "facets:";
  bool first = true;
  for (VertexSet f : x.facets()) {
    os << (first ? " " : ", ");
    first = false;
    if (f.empty()) {
      os << "{}";
      continue;
    }
    bool first_v = true;
    for (int v : f.elements()) {
      if (!first_v) os << ' ';
      os << v;
      first_v = false;
    }
  }
  return os.str();
}

}  // namespace bettikit
