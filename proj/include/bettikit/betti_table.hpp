#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bettikit/multidegree.hpp"

namespace bettikit {

/// Which module a table describes.
///
/// quotient: Betti numbers of S/I, with beta_{0,0} = 1.
/// ideal:    Betti numbers of I, column 0 holds the minimal generators.
/// beta^quotient_{i+1,b} = beta^ideal_{i,b}.
enum class Convention { quotient, ideal };

const char* convention_name(Convention c);

/// Multigraded Betti numbers: (homological index, multidegree) -> count > 0.
class BettiTable {
 public:
  using Key = std::pair<int, Multidegree>;

  BettiTable(int n, Convention convention) : n_(n), convention_(convention) {}

  int variable_count() const { return n_; }
  Convention convention() const { return convention_; }

  /// Adds to an entry; zero values are ignored.
  void add(int i, const Multidegree& b, std::int64_t value);
  std::int64_t at(int i, const Multidegree& b) const;
  const std::map<Key, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Largest homological index with a nonzero entry; -1 when empty.
  int max_index() const;

  /// Convention conversions. An ideal table containing beta_{0,0} is the unit
  /// ideal, whose quotient is the zero module (empty table).
  BettiTable to_quotient() const;
  BettiTable to_ideal() const;
  BettiTable in(Convention c) const { return c == Convention::quotient ? to_quotient() : to_ideal(); }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_;
  Convention convention_;
  std::map<Key, std::int64_t> entries_;
};

/// Total-degree Betti numbers: (i, j) -> beta_{i,j}, laid out Macaulay style
/// with column i and row r = j - i.
class BettiDiagram {
 public:
  BettiDiagram() = default;

  void add(int i, int j, std::int64_t value);
  std::int64_t at(int i, int j) const;
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Column sums, indexed by i = 0 .. max index.
  std::vector<std::int64_t> totals() const;
  int max_index() const;
  int min_row() const;
  int max_row() const;
  int max_degree() const;

  /// "total: 1 5 5 1" followed by one "r: ..." line per row; "." marks zero.
  std::string render() const;

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

BettiDiagram coarse_diagram(const BettiTable& table);

/// Value of l-regularity when no column at or beyond l is nonzero.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

/// Position (l, m) of an extremal Betti number beta_{l, l+m}.
struct Corner {
  int l;
  int m;
  std::int64_t value;
  friend bool operator==(const Corner&, const Corner&) = default;
};

std::string to_string(const Corner& c);

/// max{ j - i : beta_{i,j} != 0, i >= l }, or kNegInfinity.
int l_regularity(const BettiDiagram& d, int l);

/// All corners, ordered by increasing l. (l, m) is a corner when m is the
/// l-regularity and the (l+1)-regularity is strictly smaller; the entry
/// beta_{l,l+m} is then nonzero and is the extremal Betti number.
std::vector<Corner> corners(const BettiDiagram& d);

/// Nonzero beta_{l,l+m} with beta_{j,k} = 0 for all j >= l, k > l + m,
/// k - j >= m: the definition by a block of zeroes. Agrees with corners().
bool is_single_graded_extremal(const BettiDiagram& d, int l, int j);

int projective_dimension(const BettiDiagram& d);
int regularity(const BettiDiagram& d);
/// n - pd. The diagram must be for a quotient S/I.
int depth_via_auslander_buchsbaum(const BettiDiagram& d, int n);

/// beta_{i,c} = 0 for every c strictly above b. Does not look at beta_{i,b}.
bool is_i_extremal(const BettiTable& t, int i, const Multidegree& b);

/// beta_{j,c} = 0 for all j >= i and c strictly above b with |c|-|b| >= j-i.
/// Does not look at beta_{i,b}.
bool is_extremal_position(const BettiTable& t, int i, const Multidegree& b);

/// Nonzero entries that are extremal in the multigraded sense.
std::vector<std::pair<int, Multidegree>> multigraded_extremal(const BettiTable& t);

/// Every ideal-convention entry has |b| = i + d0 for the single generator degree d0.
bool has_linear_resolution(const BettiTable& t);

}  // namespace bettikit
