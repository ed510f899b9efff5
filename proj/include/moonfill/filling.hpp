#pragma once

// 01-fillings of moon polyominoes, their chain statistics, the coloring
// that localizes ascents and descents, and constrained enumeration.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moonfill/polyomino.hpp"
#include "moonfill/pqpoly.hpp"

namespace moonfill {

using ShapePtr = std::shared_ptr<const MoonPolyomino>;

inline ShapePtr share(MoonPolyomino t) { return std::make_shared<const MoonPolyomino>(std::move(t)); }

class FillingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the coloring-based constructions when a column holds two 1s.
class NotColumnClass : public FillingError {
 public:
  NotColumnClass() : FillingError("NotColumnClass: some column holds more than one 1") {}
};

class Filling {
 public:
  Filling(ShapePtr shape, std::vector<Cell> ones) : shape_(std::move(shape)), ones_(std::move(ones)) {
    if (!shape_) throw FillingError("filling without a shape");
    std::sort(ones_.begin(), ones_.end());
    if (std::adjacent_find(ones_.begin(), ones_.end()) != ones_.end())
      throw FillingError("duplicate 1-cell");
    for (const Cell& c : ones_)
      if (!shape_->contains(c))
        throw FillingError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                           ") is outside the shape");
  }
  Filling(const MoonPolyomino& shape, std::vector<Cell> ones) : Filling(share(shape), std::move(ones)) {}

  const MoonPolyomino& shape() const { return *shape_; }
  const ShapePtr& shape_ptr() const { return shape_; }
  // 1-cells sorted in row-major order.
  const std::vector<Cell>& ones() const { return ones_; }
  int size() const { return static_cast<int>(ones_.size()); }

  bool has_one(Cell c) const { return std::binary_search(ones_.begin(), ones_.end(), c); }

  std::vector<int> row_counts() const {
    std::vector<int> m(shape_->n_rows(), 0);
    for (auto& c : ones_) ++m[c.row - 1];
    return m;
  }
  std::vector<int> col_counts() const {
    std::vector<int> n(shape_->n_cols(), 0);
    for (auto& c : ones_) ++n[c.col - 1];
    return n;
  }
  // Columns of the 1s in row r, left to right.
  std::vector<int> ones_in_row(int r) const {
    std::vector<int> out;
    for (auto& c : ones_)
      if (c.row == r) out.push_back(c.col);
    return out;
  }

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.ones_ == b.ones_ && (a.shape_ == b.shape_ || *a.shape_ == *b.shape_);
  }

 private:
  ShapePtr shape_;
  std::vector<Cell> ones_;
};

struct ClassFlags {
  bool in_col_class = true;
  bool in_row_class = true;
  bool in_both = true;
};

inline ClassFlags class_of(const Filling& f) {
  ClassFlags flags;
  auto m = f.row_counts();
  auto n = f.col_counts();
  flags.in_row_class = std::all_of(m.begin(), m.end(), [](int x) { return x <= 1; });
  flags.in_col_class = std::all_of(n.begin(), n.end(), [](int x) { return x <= 1; });
  flags.in_both = flags.in_row_class && flags.in_col_class;
  return flags;
}

inline std::set<int> empty_cols(const Filling& f) {
  std::set<int> out;
  auto n = f.col_counts();
  for (int j = 1; j <= static_cast<int>(n.size()); ++j)
    if (n[j - 1] == 0) out.insert(j);
  return out;
}

inline std::set<int> empty_rows(const Filling& f) {
  std::set<int> out;
  auto m = f.row_counts();
  for (int i = 1; i <= static_cast<int>(m.size()); ++i)
    if (m[i - 1] == 0) out.insert(i);
  return out;
}

struct ChainPairCounts {
  int ne2 = 0;
  int se2 = 0;
};

// Ascents (NE pairs) and descents (SE pairs) whose bounding rectangle lies
// in the shape.
inline ChainPairCounts chain_pairs(const Filling& f) {
  ChainPairCounts out;
  const auto& ones = f.ones();
  for (std::size_t i = 0; i < ones.size(); ++i) {
    for (std::size_t j = i + 1; j < ones.size(); ++j) {
      const Cell a = ones[i];  // a.row <= b.row
      const Cell b = ones[j];
      if (a.row == b.row || a.col == b.col) continue;
      if (!contains_rect(f.shape(), bounding_rect(a, b))) continue;
      if (b.col < a.col) {
        ++out.ne2;  // b lower-left, a upper-right
      } else {
        ++out.se2;
      }
    }
  }
  return out;
}

inline int ne2(const Filling& f) { return chain_pairs(f).ne2; }
inline int se2(const Filling& f) { return chain_pairs(f).se2; }

enum class ChainDirection { NorthEast, SouthEast };

// Longest chain in the given direction whose bounding rectangle is contained
// in the shape. For a fixed first element, intermediate elements of a chain
// lie inside the rectangle spanned by the first and last, so a longest chain
// ending at x is found from the ones strictly between.
inline int longest_chain(const Filling& f, ChainDirection dir) {
  const auto& ones = f.ones();
  const int k = static_cast<int>(ones.size());
  if (k == 0) return 0;
  // follows(a, b): b may come right after a in a chain.
  auto follows = [dir](Cell a, Cell b) {
    if (b.col <= a.col) return false;
    return dir == ChainDirection::NorthEast ? b.row < a.row : b.row > a.row;
  };
  // Order by column so predecessors are processed first.
  std::vector<Cell> sorted = ones;
  std::sort(sorted.begin(), sorted.end(), [](Cell a, Cell b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  int best = 1;
  std::vector<int> len(k);
  for (int s = 0; s < k; ++s) {
    std::fill(len.begin(), len.end(), 0);
    len[s] = 1;
    for (int x = s + 1; x < k; ++x) {
      if (!follows(sorted[s], sorted[x])) continue;
      if (!contains_rect(f.shape(), bounding_rect(sorted[s], sorted[x]))) continue;
      int l = 0;
      for (int y = s; y < x; ++y)
        if (len[y] > 0 && (y == s || follows(sorted[s], sorted[y])) && follows(sorted[y], sorted[x]))
          l = std::max(l, len[y]);
      len[x] = l + 1;
      best = std::max(best, len[x]);
    }
  }
  return best;
}

inline int ne_max(const Filling& f) { return longest_chain(f, ChainDirection::NorthEast); }
inline int se_max(const Filling& f) { return longest_chain(f, ChainDirection::SouthEast); }

// Colored cells of a filling, stored as an s x t grid.
class Coloring {
 public:
  explicit Coloring(const MoonPolyomino& shape)
      : n_rows_(shape.n_rows()), n_cols_(shape.n_cols()), grid_(n_rows_ * n_cols_, 0) {}

  bool is_colored(Cell c) const { return grid_[index(c)] != 0; }
  void color(Cell c) { grid_[index(c)] = 1; }

  std::vector<Cell> colored_cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= n_rows_; ++r)
      for (int c = 1; c <= n_cols_; ++c)
        if (grid_[index({r, c})]) out.push_back({r, c});
    return out;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::size_t index(Cell c) const { return static_cast<std::size_t>((c.row - 1) * n_cols_ + c.col - 1); }
  int n_rows_;
  int n_cols_;
  std::vector<char> grid_;
};

// Colors every cell of column `col` lying in the i-th rectangle strictly
// below (row i in Up) or above (row i in Low) row i, restricted to rows that
// come after row i in the row order. The restriction only matters for a Low
// row whose rectangle reaches an Up row with the same interval: that row
// precedes it, and coloring it would hide the pair between the two rows
// from both luc and ruc.
inline void color_under_one(const MoonPolyomino& t, Coloring& colors, int i, int col) {
  const CellRect rect = rectangle(t, i);
  if (t.in_up(i)) {
    for (int r = i + 1; r <= rect.bottom; ++r) colors.color({r, col});
  } else {
    for (int r = rect.top; r < i; ++r)
      if (!(t.in_up(r) && t.row(r).length() == t.row(i).length())) colors.color({r, col});
  }
}

inline void color_columns(const MoonPolyomino& t, Coloring& colors, const std::set<int>& cols) {
  for (int c : cols)
    for (int r = t.col(c).lo; r <= t.col(c).hi; ++r) colors.color({r, c});
}

// Coloring induced by the 1s of the listed rows only (plus empty columns when
// include_empty_columns is set).
inline Coloring partial_coloring(const Filling& f, const std::vector<int>& rows,
                                 bool include_empty_columns) {
  const MoonPolyomino& t = f.shape();
  if (!class_of(f).in_col_class) throw NotColumnClass();
  Coloring colors(t);
  if (include_empty_columns) color_columns(t, colors, empty_cols(f));
  for (int i : rows)
    for (int col : f.ones_in_row(i)) color_under_one(t, colors, i, col);
  return colors;
}

inline Coloring coloring(const Filling& f) {
  std::vector<int> all(f.shape().n_rows());
  for (int i = 0; i < f.shape().n_rows(); ++i) all[i] = i + 1;
  return partial_coloring(f, all, true);
}

struct SideCounts {
  int luc = 0;
  int ruc = 0;
};

// Uncolored empty cells left and right of `cell` in its row; zero for an
// empty cell.
inline SideCounts side_counts(const Filling& f, const Coloring& colors, Cell cell) {
  SideCounts out;
  if (!f.has_one(cell)) return out;
  const Interval span = f.shape().row(cell.row);
  for (int c = span.lo; c <= span.hi; ++c) {
    Cell x{cell.row, c};
    if (c == cell.col || colors.is_colored(x) || f.has_one(x)) continue;
    (c < cell.col ? out.luc : out.ruc)++;
  }
  return out;
}

inline int luc(const Filling& f, Cell cell) { return side_counts(f, coloring(f), cell).luc; }
inline int ruc(const Filling& f, Cell cell) { return side_counts(f, coloring(f), cell).ruc; }

// ne2 and se2 recovered from luc/ruc: Up rows contribute (luc, ruc) and Low
// rows (ruc, luc).
inline ChainPairCounts chain_pairs_by_coloring(const Filling& f) {
  const Coloring colors = coloring(f);
  ChainPairCounts out;
  for (const Cell& c : f.ones()) {
    SideCounts sc = side_counts(f, colors, c);
    if (f.shape().in_up(c.row)) {
      out.ne2 += sc.luc;
      out.se2 += sc.ruc;
    } else {
      out.ne2 += sc.ruc;
      out.se2 += sc.luc;
    }
  }
  return out;
}

inline int ne2_by_coloring(const Filling& f) { return chain_pairs_by_coloring(f).ne2; }
inline int se2_by_coloring(const Filling& f) { return chain_pairs_by_coloring(f).se2; }

inline Filling rotate90(const Filling& f) {
  auto shape = share(rotate90(f.shape()));
  std::vector<Cell> ones;
  for (auto& c : f.ones()) ones.push_back(rotate90(c, f.shape().n_rows()));
  return Filling(std::move(shape), std::move(ones));
}

// ---------------------------------------------------------------------------
// Constrained enumeration

enum class FillingClass { All, Col, Row, Both };

struct ConstraintSpec {
  FillingClass cls = FillingClass::All;
  std::optional<std::vector<int>> row_counts;  // m, one entry per row
  std::optional<std::vector<int>> col_counts;  // n, one entry per column
  std::optional<std::set<int>> empty_cols;     // A
  std::optional<std::set<int>> empty_rows;     // B
  std::optional<int> total_ones;               // k

  static ConstraintSpec of(FillingClass c) {
    ConstraintSpec spec;
    spec.cls = c;
    return spec;
  }
};

class InconsistentSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void check_spec(const MoonPolyomino& t, const ConstraintSpec& spec) {
  auto fail = [](const std::string& why) { throw InconsistentSpec("inconsistent constraints: " + why); };
  const int row_cap = (spec.cls == FillingClass::Row || spec.cls == FillingClass::Both) ? 1 : -1;
  const int col_cap = (spec.cls == FillingClass::Col || spec.cls == FillingClass::Both) ? 1 : -1;
  std::optional<int> sum_m, sum_n;
  if (spec.row_counts) {
    if (static_cast<int>(spec.row_counts->size()) != t.n_rows()) fail("row count vector has wrong length");
    int s = 0;
    for (int i = 1; i <= t.n_rows(); ++i) {
      int v = (*spec.row_counts)[i - 1];
      if (v < 0 || v > t.row(i).length()) fail("row count out of range");
      if (row_cap >= 0 && v > row_cap) fail("row count exceeds class limit");
      if (spec.empty_rows && spec.empty_rows->count(i) && v != 0) fail("row in B has a nonzero count");
      s += v;
    }
    sum_m = s;
  }
  if (spec.col_counts) {
    if (static_cast<int>(spec.col_counts->size()) != t.n_cols()) fail("column count vector has wrong length");
    int s = 0;
    for (int j = 1; j <= t.n_cols(); ++j) {
      int v = (*spec.col_counts)[j - 1];
      if (v < 0 || v > t.col(j).length()) fail("column count out of range");
      if (col_cap >= 0 && v > col_cap) fail("column count exceeds class limit");
      if (spec.empty_cols && spec.empty_cols->count(j) && v != 0) fail("column in A has a nonzero count");
      s += v;
    }
    sum_n = s;
  }
  if (spec.empty_cols)
    for (int j : *spec.empty_cols)
      if (j < 1 || j > t.n_cols()) fail("A contains a column outside the shape");
  if (spec.empty_rows)
    for (int i : *spec.empty_rows)
      if (i < 1 || i > t.n_rows()) fail("B contains a row outside the shape");
  if (spec.total_ones && *spec.total_ones < 0) fail("negative total");
  if (sum_m && sum_n && *sum_m != *sum_n) fail("row and column counts have different sums");
  if (spec.total_ones && sum_m && *sum_m != *spec.total_ones) fail("row counts do not sum to k");
  if (spec.total_ones && sum_n && *sum_n != *spec.total_ones) fail("column counts do not sum to k");
}

namespace detail {

// Pre-order search over subsets of cells in row-major order, which visits
// sorted 1-cell lists in lexicographic order.
class FillingSearch {
 public:
  FillingSearch(ShapePtr shape, const ConstraintSpec& spec) : shape_(std::move(shape)), spec_(spec) {
    const MoonPolyomino& t = *shape_;
    cells_ = t.cells();
    s_ = t.n_rows();
    n_ = t.n_cols();
    const bool row_class = spec.cls == FillingClass::Row || spec.cls == FillingClass::Both;
    const bool col_class = spec.cls == FillingClass::Col || spec.cls == FillingClass::Both;
    row_max_.assign(s_, 0);
    row_min_.assign(s_, 0);
    for (int i = 1; i <= s_; ++i) {
      int hi = row_class ? 1 : t.row(i).length();
      int lo = 0;
      if (spec.row_counts) lo = hi = std::min(hi, (*spec.row_counts)[i - 1]);
      if (spec.empty_rows) {
        if (spec.empty_rows->count(i)) {
          hi = 0;
        } else {
          lo = std::max(lo, 1);
        }
      }
      row_min_[i - 1] = lo;
      row_max_[i - 1] = hi;
    }
    col_max_.assign(n_, 0);
    col_min_.assign(n_, 0);
    for (int j = 1; j <= n_; ++j) {
      int hi = col_class ? 1 : t.col(j).length();
      int lo = 0;
      if (spec.col_counts) lo = hi = std::min(hi, (*spec.col_counts)[j - 1]);
      if (spec.empty_cols) {
        if (spec.empty_cols->count(j)) {
          hi = 0;
        } else {
          lo = std::max(lo, 1);
        }
      }
      col_min_[j - 1] = lo;
      col_max_[j - 1] = hi;
    }
    // Remaining cells per row/column from each position onward.
    const int total = static_cast<int>(cells_.size());
    row_avail_.assign((total + 1) * s_, 0);
    col_avail_.assign((total + 1) * n_, 0);
    for (int pos = total - 1; pos >= 0; --pos) {
      for (int i = 0; i < s_; ++i) row_avail_[pos * s_ + i] = row_avail_[(pos + 1) * s_ + i];
      for (int j = 0; j < n_; ++j) col_avail_[pos * n_ + j] = col_avail_[(pos + 1) * n_ + j];
      ++row_avail_[pos * s_ + cells_[pos].row - 1];
      ++col_avail_[pos * n_ + cells_[pos].col - 1];
    }
    row_cnt_.assign(s_, 0);
    col_cnt_.assign(n_, 0);
  }

  template <class Fn>
  void run(Fn&& fn) {
    if (feasible(0)) visit(0, fn);
  }

 private:
  bool feasible(int pos) const {
    const int total = static_cast<int>(cells_.size());
    int avail_all = total - pos;
    if (spec_.total_ones && (chosen_ > *spec_.total_ones || chosen_ + avail_all < *spec_.total_ones))
      return false;
    for (int i = 0; i < s_; ++i)
      if (row_cnt_[i] + row_avail_[pos * s_ + i] < row_min_[i]) return false;
    for (int j = 0; j < n_; ++j)
      if (col_cnt_[j] + col_avail_[pos * n_ + j] < col_min_[j]) return false;
    return true;
  }

  bool complete() const {
    if (spec_.total_ones && chosen_ != *spec_.total_ones) return false;
    for (int i = 0; i < s_; ++i)
      if (row_cnt_[i] < row_min_[i]) return false;
    for (int j = 0; j < n_; ++j)
      if (col_cnt_[j] < col_min_[j]) return false;
    return true;
  }

  template <class Fn>
  void visit(int pos, Fn& fn) {
    if (complete()) fn(Filling(shape_, current_));
    const int total = static_cast<int>(cells_.size());
    for (int x = pos; x < total; ++x) {
      const Cell c = cells_[x];
      int& rc = row_cnt_[c.row - 1];
      int& cc = col_cnt_[c.col - 1];
      if (rc >= row_max_[c.row - 1] || cc >= col_max_[c.col - 1]) continue;
      ++rc;
      ++cc;
      ++chosen_;
      current_.push_back(c);
      if (feasible(x + 1)) visit(x + 1, fn);
      current_.pop_back();
      --chosen_;
      --cc;
      --rc;
    }
  }

  ShapePtr shape_;
  const ConstraintSpec& spec_;
  std::vector<Cell> cells_;
  int s_ = 0;
  int n_ = 0;
  std::vector<int> row_min_, row_max_, col_min_, col_max_;
  std::vector<int> row_avail_, col_avail_;
  std::vector<int> row_cnt_, col_cnt_;
  std::vector<Cell> current_;
  int chosen_ = 0;
};

}  // namespace detail

// Visits every filling of the specified class exactly once, ordered
// lexicographically by the row-major sorted list of 1-cells.
template <class Fn>
void for_each_filling(const ShapePtr& shape, const ConstraintSpec& spec, Fn&& fn) {
  check_spec(*shape, spec);
  detail::FillingSearch search(shape, spec);
  search.run(fn);
}

inline std::vector<Filling> enumerate(const ShapePtr& shape, const ConstraintSpec& spec) {
  std::vector<Filling> out;
  for_each_filling(shape, spec, [&](Filling f) { out.push_back(std::move(f)); });
  return out;
}

inline std::vector<Filling> enumerate(const MoonPolyomino& shape, const ConstraintSpec& spec) {
  return enumerate(share(shape), spec);
}

// Accumulates sum p^{ne2} q^{se2} with machine-integer counters.
class DistributionBuilder {
 public:
  void add(const Filling& f) {
    auto pc = chain_pairs(f);
    ++counts_[{pc.ne2, pc.se2}];
  }
  void add(int ne2_value, int se2_value) { ++counts_[{ne2_value, se2_value}]; }
  PQPolynomial polynomial() const {
    PQPolynomial out;
    for (const auto& [m, c] : counts_) out.add_term(m, BigInt(c));
    return out;
  }

 private:
  std::map<Monomial, std::int64_t> counts_;
};

template <class Range>
PQPolynomial distribution(const Range& fillings) {
  DistributionBuilder b;
  for (const Filling& f : fillings) b.add(f);
  return b.polynomial();
}

inline PQPolynomial distribution_of(const ShapePtr& shape, const ConstraintSpec& spec) {
  DistributionBuilder b;
  for_each_filling(shape, spec, [&](const Filling& f) { b.add(f); });
  return b.polynomial();
}

inline PQPolynomial distribution_of(const MoonPolyomino& shape, const ConstraintSpec& spec) {
  return distribution_of(share(shape), spec);
}

// Shape text followed by
//   ones <k>
//   <r_1> <c_1>
//   ...
inline Filling parse_filling(std::istream& in, bool allow_non_moon = false) {
  detail::TokenReader rd(detail::tokenize(in));
  int n_cols = 0;
  auto rows = detail::read_shape_body(rd, n_cols);
  auto shape = share(MoonPolyomino::validate(std::move(rows), n_cols, allow_non_moon));
  std::vector<Cell> ones;
  if (!rd.done()) {
    rd.expect("ones");
    int k = rd.integer();
    if (k < 0) throw std::invalid_argument("negative 1-cell count");
    for (int i = 0; i < k; ++i) {
      int r = rd.integer();
      int c = rd.integer();
      ones.push_back({r, c});
    }
  }
  if (!rd.done()) throw std::invalid_argument("trailing input after filling: '" + rd.peek() + "'");
  return Filling(std::move(shape), std::move(ones));
}

inline void write_filling(std::ostream& os, const Filling& f) {
  write_polyomino(os, f.shape());
  os << "ones " << f.size() << '\n';
  for (auto& c : f.ones()) os << c.row << ' ' << c.col << '\n';
}

}  // namespace moonfill
