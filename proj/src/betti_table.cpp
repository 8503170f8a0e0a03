#include "bettikit/betti_table.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bettikit {

const char* convention_name(Convention c) { return c == Convention::quotient ? "quotient" : "ideal"; }

void BettiTable::add(int i, const Multidegree& b, std::int64_t value) {
  if (value == 0) return;
  if (b.size() != n_) throw std::invalid_argument("BettiTable: multidegree has wrong length");
  auto& slot = entries_[{i, b}];
  slot += value;
  if (slot == 0) entries_.erase({i, b});
}

std::int64_t BettiTable::at(int i, const Multidegree& b) const {
  auto it = entries_.find({i, b});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

BettiTable BettiTable::to_quotient() const {
  if (convention_ == Convention::quotient) return *this;
  BettiTable out(n_, Convention::quotient);
  if (at(0, Multidegree(n_)) != 0) return out;  // unit ideal: S/I = 0
  out.add(0, Multidegree(n_), 1);
  for (const auto& [key, v] : entries_) out.add(key.first + 1, key.second, v);
  return out;
}

BettiTable BettiTable::to_ideal() const {
  if (convention_ == Convention::ideal) return *this;
  BettiTable out(n_, Convention::ideal);
  if (entries_.empty()) {
    out.add(0, Multidegree(n_), 1);  // zero module: I is the unit ideal
    return out;
  }
  for (const auto& [key, v] : entries_)
    if (key.first > 0) out.add(key.first - 1, key.second, v);
  return out;
}

void BettiDiagram::add(int i, int j, std::int64_t value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

std::int64_t BettiDiagram::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiDiagram::max_index() const {
  int m = -1;
  for (const auto& [key, v] : entries_) m = std::max(m, key.first);
  return m;
}

std::vector<std::int64_t> BettiDiagram::totals() const {
  std::vector<std::int64_t> t(static_cast<std::size_t>(max_index() + 1), 0);
  for (const auto& [key, v] : entries_) t[static_cast<std::size_t>(key.first)] += v;
  return t;
}

int BettiDiagram::min_row() const {
  int r = std::numeric_limits<int>::max();
  for (const auto& [key, v] : entries_) r = std::min(r, key.second - key.first);
  return r;
}

int BettiDiagram::max_row() const {
  int r = std::numeric_limits<int>::min();
  for (const auto& [key, v] : entries_) r = std::max(r, key.second - key.first);
  return r;
}

int BettiDiagram::max_degree() const {
  int d = -1;
  for (const auto& [key, v] : entries_) d = std::max(d, key.second);
  return d;
}

std::string BettiDiagram::render() const {
  if (entries_.empty()) return "total: 0\n";
  const auto tot = totals();
  const int cols = static_cast<int>(tot.size());
  const int r0 = min_row();
  const int r1 = max_row();

  std::vector<std::size_t> width(static_cast<std::size_t>(cols), 1);
  for (int i = 0; i < cols; ++i) {
    width[static_cast<std::size_t>(i)] = std::to_string(tot[static_cast<std::size_t>(i)]).size();
    for (int r = r0; r <= r1; ++r)
      width[static_cast<std::size_t>(i)] =
          std::max(width[static_cast<std::size_t>(i)], std::to_string(at(i, i + r)).size());
  }
  std::size_t label = 6;  // "total:"
  for (int r = r0; r <= r1; ++r) label = std::max(label, std::to_string(r).size() + 1);

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream os;
  os << pad("total:", label);
  for (int i = 0; i < cols; ++i) os << ' ' << pad(std::to_string(tot[static_cast<std::size_t>(i)]), width[static_cast<std::size_t>(i)]);
  os << '\n';
  for (int r = r0; r <= r1; ++r) {
    os << pad(std::to_string(r) + ":", label);
    for (int i = 0; i < cols; ++i) {
      const std::int64_t v = at(i, i + r);
      os << ' ' << pad(v == 0 ? "." : std::to_string(v), width[static_cast<std::size_t>(i)]);
    }
    os << '\n';
  }
  return os.str();
}

BettiDiagram coarse_diagram(const BettiTable& table) {
  BettiDiagram d;
  for (const auto& [key, v] : table.entries()) d.add(key.first, key.second.total(), v);
  return d;
}

std::string to_string(const Corner& c) {
  return "(" + std::to_string(c.l) + "," + std::to_string(c.m) + "):" + std::to_string(c.value);
}

int l_regularity(const BettiDiagram& d, int l) {
  int reg = kNegInfinity;
  for (const auto& [key, v] : d.entries())
    if (key.first >= l) reg = std::max(reg, key.second - key.first);
  return reg;
}

std::vector<Corner> corners(const BettiDiagram& d) {
  std::vector<Corner> out;
  const int top = d.max_index();
  for (int l = 0; l <= top; ++l) {
    const int m = l_regularity(d, l);
    if (m == kNegInfinity) continue;
    if (m > l_regularity(d, l + 1)) out.push_back({l, m, d.at(l, l + m)});
  }
  return out;
}

bool is_single_graded_extremal(const BettiDiagram& d, int l, int j) {
  if (d.at(l, j) == 0) return false;
  for (const auto& [key, v] : d.entries()) {
    const auto [i2, j2] = key;
    if (i2 >= l && j2 > j && j2 - i2 >= j - l) return false;
  }
  return true;
}

int projective_dimension(const BettiDiagram& d) { return d.max_index(); }

int regularity(const BettiDiagram& d) { return l_regularity(d, 0); }

int depth_via_auslander_buchsbaum(const BettiDiagram& d, int n) {
  if (d.empty()) throw std::invalid_argument("depth of the zero module is undefined");
  return n - projective_dimension(d);
}

bool is_i_extremal(const BettiTable& t, int i, const Multidegree& b) {
  for (const auto& [key, v] : t.entries())
    if (key.first == i && b.strictly_below(key.second)) return false;
  return true;
}

bool is_extremal_position(const BettiTable& t, int i, const Multidegree& b) {
  const int bt = b.total();
  for (const auto& [key, v] : t.entries()) {
    const int j = key.first;
    if (j >= i && b.strictly_below(key.second) && key.second.total() - bt >= j - i) return false;
  }
  return true;
}

std::vector<std::pair<int, Multidegree>> multigraded_extremal(const BettiTable& t) {
  std::vector<std::pair<int, Multidegree>> out;
  for (const auto& [key, v] : t.entries())
    if (is_extremal_position(t, key.first, key.second)) out.push_back(key);
  return out;
}

bool has_linear_resolution(const BettiTable& t) {
  const BettiTable ideal = t.to_ideal();
  int d0 = -1;
  for (const auto& [key, v] : ideal.entries()) {
    if (key.first != 0) continue;
    if (d0 == -1) d0 = key.second.total();
    if (key.second.total() != d0) return false;
  }
  for (const auto& [key, v] : ideal.entries())
    if (key.second.total() != key.first + d0) return false;
  return true;
}

}  // namespace bettikit
