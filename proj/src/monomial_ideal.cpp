#include "bettikit/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bettikit {

std::string monomial_string(const Multidegree& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << i;
    if (m[i] > 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Multidegree> gens) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  for (const auto& g : gens)
    if (g.size() != n) throw std::invalid_argument("generator has wrong number of variables");

  // Sort by degree so a divisor always precedes its multiples.
  std::sort(gens.begin(), gens.end(), [](const Multidegree& a, const Multidegree& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a > b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Multidegree& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  square_free_ = std::all_of(gens_.begin(), gens_.end(), [](const Multidegree& g) { return g.is_square_free(); });
}

bool MonomialIdeal::contains(const Multidegree& b) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Multidegree& g) { return g.divides(b); });
}

Multidegree MonomialIdeal::lcm() const {
  Multidegree m(n_);
  for (const auto& g : gens_) m = m.join(g);
  return m;
}

bool MonomialIdeal::is_artinian() const {
  for (int v = 0; v < n_; ++v) {
    bool found = std::any_of(gens_.begin(), gens_.end(), [v](const Multidegree& g) {
      return g.support() == VertexSet{}.with(v);
    });
    if (!found) return false;
  }
  return true;
}

std::string generators_string(const MonomialIdeal& ideal) {
  std::ostringstream os;
  bool first = true;
  for (const auto& g : ideal.generators()) {
    if (!first) os << ", ";
    first = false;
    os << monomial_string(g);
  }
  return os.str();
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string body = generators_string(ideal);
  return body.empty() ? "gens:" : "gens: " + body;
}

}  // namespace bettikit
