#pragma once

// Moon polyominoes: convex, intersection-free arrangements of cells.
//
// Coordinates are 1-based (row, col) with rows numbered top to bottom and
// columns left to right. A shape is stored as one column interval per row.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace moonfill {

struct Interval {
  int lo = 1;
  int hi = 0;
  int length() const { return hi - lo + 1; }
  bool contains(int x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellRect {
  int top = 1;
  int bottom = 1;
  int left = 1;
  int right = 1;
  bool contains(Cell c) const {
    return top <= c.row && c.row <= bottom && left <= c.col && c.col <= right;
  }
  friend bool operator==(const CellRect&, const CellRect&) = default;
};

// Smallest rectangle containing both cells.
inline CellRect bounding_rect(Cell a, Cell b) {
  return {std::min(a.row, b.row), std::max(a.row, b.row), std::min(a.col, b.col),
          std::max(a.col, b.col)};
}

enum class ShapeError {
  EmptyOrOutOfRange,
  NotIntersectionFree,
  NotColumnConvex,
  NotUnimodal,
  IndexOutOfRange,
  NotMoon,
};

inline const char* to_string(ShapeError e) {
  switch (e) {
    case ShapeError::EmptyOrOutOfRange: return "EmptyOrOutOfRange";
    case ShapeError::NotIntersectionFree: return "NotIntersectionFree";
    case ShapeError::NotColumnConvex: return "NotColumnConvex";
    case ShapeError::NotUnimodal: return "NotUnimodal";
    case ShapeError::IndexOutOfRange: return "IndexOutOfRange";
    case ShapeError::NotMoon: return "NotMoon";
  }
  return "?";
}

class ShapeException : public std::invalid_argument {
 public:
  ShapeException(ShapeError kind, const std::string& detail)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  ShapeError kind() const { return kind_; }

 private:
  ShapeError kind_;
};

class MoonPolyomino {
 public:
  // Checks every shape invariant and throws ShapeException naming the first
  // violation. With allow_non_moon the intersection-free and unimodality
  // checks are skipped; such shapes support statistics and enumeration but
  // not the row/column orders, rectangles or coloring.
  static MoonPolyomino validate(std::vector<Interval> rows, int n_cols,
                                bool allow_non_moon = false) {
    if (rows.empty() || n_cols < 1)
      throw ShapeException(ShapeError::EmptyOrOutOfRange, "shape has no rows or no columns");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      if (r.lo < 1 || r.hi > n_cols || r.lo > r.hi)
        throw ShapeException(ShapeError::EmptyOrOutOfRange,
                             "row " + std::to_string(i + 1) + " span [" + std::to_string(r.lo) +
                                 "," + std::to_string(r.hi) + "] is empty or outside [1," +
                                 std::to_string(n_cols) + "]");
    }
    for (int c = 1; c <= n_cols; ++c) {
      bool covered = std::any_of(rows.begin(), rows.end(), [c](auto& r) { return r.contains(c); });
      if (!covered)
        throw ShapeException(ShapeError::EmptyOrOutOfRange,
                             "column " + std::to_string(c) + " has no cell");
    }
    bool moon = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (!rows[i].contains(rows[j]) && !rows[j].contains(rows[i])) {
          if (!allow_non_moon)
            throw ShapeException(ShapeError::NotIntersectionFree,
                                 "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                     " are not comparable");
          moon = false;
        }
      }
    }
    MoonPolyomino t;
    t.rows_ = std::move(rows);
    t.n_cols_ = n_cols;
    for (int c = 1; c <= n_cols; ++c) {
      int top = 0;
      int bottom = 0;
      for (int r = 1; r <= t.n_rows(); ++r) {
        if (!t.row(r).contains(c)) continue;
        if (top == 0) {
          top = r;
        } else if (bottom != r - 1) {
          throw ShapeException(ShapeError::NotColumnConvex,
                               "column " + std::to_string(c) + " is not contiguous");
        }
        bottom = r;
      }
      t.cols_.push_back({top, bottom});
    }
    t.moon_ = moon;
    if (moon) {
      t.i0_ = last_peak(t.row_lengths());
      t.j0_ = last_peak(t.col_lengths());
      if (!is_unimodal(t.row_lengths()) || !is_unimodal(t.col_lengths()))
        throw ShapeException(ShapeError::NotUnimodal, "row or column lengths are not unimodal");
    }
    return t;
  }

  int n_rows() const { return static_cast<int>(rows_.size()); }
  int n_cols() const { return n_cols_; }
  bool is_moon() const { return moon_; }

  const std::vector<Interval>& rows() const { return rows_; }
  // Column span of row i (1-based).
  const Interval& row(int i) const { return rows_.at(i - 1); }
  // Row span of column j (1-based), as an interval of row indices.
  const Interval& col(int j) const { return cols_.at(j - 1); }

  std::vector<int> row_lengths() const {
    std::vector<int> r;
    for (auto& x : rows_) r.push_back(x.length());
    return r;
  }
  std::vector<int> col_lengths() const {
    std::vector<int> c;
    for (auto& x : cols_) c.push_back(x.length());
    return c;
  }

  int cell_count() const {
    int n = 0;
    for (auto& x : rows_) n += x.length();
    return n;
  }

  bool contains(Cell c) const {
    return 1 <= c.row && c.row <= n_rows() && row(c.row).contains(c.col);
  }

  // Cells in row-major order.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= n_rows(); ++r)
      for (int c = row(r).lo; c <= row(r).hi; ++c) out.push_back({r, c});
    return out;
  }

  // Last row of the upper part: rows 1..i0 form Up(T), the rest Low(T).
  int i0() const {
    require_moon();
    return i0_;
  }
  // Last column of the left part.
  int j0() const {
    require_moon();
    return j0_;
  }
  bool in_up(int row_index) const { return row_index <= i0(); }
  bool in_left(int col_index) const { return col_index <= j0(); }

  void require_moon() const {
    if (!moon_) throw ShapeException(ShapeError::NotMoon, "operation requires a moon polyomino");
  }

  friend bool operator==(const MoonPolyomino& a, const MoonPolyomino& b) {
    return a.n_cols_ == b.n_cols_ && a.rows_ == b.rows_;
  }

 private:
  MoonPolyomino() = default;

  static int last_peak(const std::vector<int>& v) {
    int best = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] >= v[best]) best = static_cast<int>(i);
    return best + 1;
  }
  static bool is_unimodal(const std::vector<int>& v) {
    std::size_t i = 1;
    while (i < v.size() && v[i - 1] <= v[i]) ++i;
    while (i < v.size() && v[i - 1] >= v[i]) ++i;
    return i >= v.size();
  }

  std::vector<Interval> rows_;
  std::vector<Interval> cols_;
  int n_cols_ = 0;
  bool moon_ = true;
  int i0_ = 0;
  int j0_ = 0;
};

// Rows listed in increasing order under the total order on rows: shorter
// first; on equal length Up before Low, higher first within Up and lower
// first within Low.
inline std::vector<int> row_order(const MoonPolyomino& t) {
  t.require_moon();
  std::vector<int> idx(t.n_rows());
  std::iota(idx.begin(), idx.end(), 1);
  auto key = [&](int i) {
    bool up = t.in_up(i);
    return std::tuple(t.row(i).length(), up ? 0 : 1, up ? i : -i);
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) < key(b); });
  return idx;
}

// Column analogue: Left before Right on ties, leftmost first within Left and
// rightmost first within Right.
inline std::vector<int> col_order(const MoonPolyomino& t) {
  t.require_moon();
  std::vector<int> idx(t.n_cols());
  std::iota(idx.begin(), idx.end(), 1);
  auto key = [&](int j) {
    bool left = t.in_left(j);
    return std::tuple(t.col(j).length(), left ? 0 : 1, left ? j : -j);
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) < key(b); });
  return idx;
}

inline bool contains_rect(const MoonPolyomino& t, const CellRect& r) {
  if (r.top < 1 || r.bottom > t.n_rows() || r.top > r.bottom || r.left > r.right) return false;
  for (int i = r.top; i <= r.bottom; ++i)
    if (!t.row(i).contains(Interval{r.left, r.right})) return false;
  return true;
}

// The i-th rectangle: largest rectangle inside T having row i as its top row
// (row i in Up) or bottom row (row i in Low).
inline CellRect rectangle(const MoonPolyomino& t, int i) {
  if (i < 1 || i > t.n_rows())
    throw ShapeException(ShapeError::IndexOutOfRange, "row " + std::to_string(i));
  t.require_moon();
  const Interval span = t.row(i);
  CellRect r{i, i, span.lo, span.hi};
  if (t.in_up(i)) {
    while (r.bottom < t.n_rows() && t.row(r.bottom + 1).contains(span)) ++r.bottom;
  } else {
    while (r.top > 1 && t.row(r.top - 1).contains(span)) --r.top;
  }
  return r;
}

// Quarter turn clockwise: cell (r, c) goes to (c, s + 1 - r). Column j of T
// becomes row j of the result and row i becomes column s + 1 - i.
inline MoonPolyomino rotate90(const MoonPolyomino& t) {
  const int s = t.n_rows();
  std::vector<Interval> rows;
  for (int c = 1; c <= t.n_cols(); ++c) rows.push_back({s + 1 - t.col(c).hi, s + 1 - t.col(c).lo});
  return MoonPolyomino::validate(std::move(rows), s, !t.is_moon());
}

inline Cell rotate90(Cell c, int n_rows) { return {c.col, n_rows + 1 - c.row}; }

// Staircase shape for graphs on [n]: row i spans columns 1..i, i = 1..n-1.
inline MoonPolyomino delta(int n) {
  if (n < 2) throw std::invalid_argument("delta(n) requires n >= 2");
  std::vector<Interval> rows;
  for (int i = 1; i <= n - 1; ++i) rows.push_back({1, i});
  return MoonPolyomino::validate(std::move(rows), n - 1);
}

// Builds a shape from column spans (row intervals of each column). Returns
// nullopt when some row would not be contiguous or the result is not a moon
// polyomino.
inline std::optional<MoonPolyomino> from_columns(const std::vector<Interval>& cols, int n_rows) {
  std::vector<Interval> rows;
  for (int r = 1; r <= n_rows; ++r) {
    int lo = 0;
    int hi = 0;
    for (int c = 1; c <= static_cast<int>(cols.size()); ++c) {
      if (!cols[c - 1].contains(r)) continue;
      if (lo == 0) {
        lo = c;
      } else if (hi != c - 1) {
        return std::nullopt;
      }
      hi = c;
    }
    if (lo == 0) return std::nullopt;
    rows.push_back({lo, hi});
  }
  try {
    return MoonPolyomino::validate(std::move(rows), static_cast<int>(cols.size()));
  } catch (const ShapeException&) {
    return std::nullopt;
  }
}

// All distinct moon polyominoes obtained by reordering the rows of T
// (each row keeps its column span), T itself included.
inline std::vector<MoonPolyomino> row_permutations(const MoonPolyomino& t) {
  std::vector<Interval> rows = t.rows();
  std::sort(rows.begin(), rows.end());
  std::vector<MoonPolyomino> out;
  do {
    try {
      out.push_back(MoonPolyomino::validate(rows, t.n_cols()));
    } catch (const ShapeException&) {
    }
  } while (std::next_permutation(rows.begin(), rows.end()));
  return out;
}

// All distinct moon polyominoes obtained by reordering the columns of T.
inline std::vector<MoonPolyomino> col_permutations(const MoonPolyomino& t) {
  std::vector<Interval> cols;
  for (int c = 1; c <= t.n_cols(); ++c) cols.push_back(t.col(c));
  std::sort(cols.begin(), cols.end());
  std::vector<MoonPolyomino> out;
  do {
    if (auto shape = from_columns(cols, t.n_rows())) out.push_back(*shape);
  } while (std::next_permutation(cols.begin(), cols.end()));
  return out;
}

// Every moon polyomino with between 1 and max_cells cells, each exactly once,
// in lexicographic order of the row-interval list.
template <class Fn>
void for_each_moon_polyomino(int max_cells, Fn&& fn) {
  std::vector<Interval> rows;
  auto rec = [&](auto&& self, int used) -> void {
    if (!rows.empty()) {
      int min_lo = rows[0].lo;
      int max_hi = rows[0].hi;
      for (auto& r : rows) {
        min_lo = std::min(min_lo, r.lo);
        max_hi = std::max(max_hi, r.hi);
      }
      if (min_lo == 1) {
        try {
          fn(MoonPolyomino::validate(rows, max_hi));
        } catch (const ShapeException&) {
        }
      }
    }
    int budget = max_cells - used;
    for (int lo = 1; lo <= max_cells; ++lo) {
      for (int hi = lo; hi - lo + 1 <= budget && hi <= max_cells; ++hi) {
        Interval cand{lo, hi};
        bool ok = true;
        for (auto& r : rows) {
          if (!r.contains(cand) && !cand.contains(r)) {
            ok = false;
            break;
          }
        }
        if (ok && !rows.empty()) {
          // A column may not reappear after being left out.
          const Interval& prev = rows.back();
          for (int c = lo; c <= hi && ok; ++c) {
            if (prev.contains(c)) continue;
            for (auto& r : rows)
              if (r.contains(c)) ok = false;
          }
        }
        if (!ok) continue;
        rows.push_back(cand);
        self(self, used + cand.length());
        rows.pop_back();
      }
    }
  };
  rec(rec, 0);
}

inline std::vector<MoonPolyomino> moon_polyominoes(int max_cells) {
  std::vector<MoonPolyomino> out;
  for_each_moon_polyomino(max_cells, [&](MoonPolyomino t) { out.push_back(std::move(t)); });
  return out;
}

// Text format:
//   moon <s> <t>
//   <lo_1> <hi_1>
//   ...
// Lines starting with '#' are comments.
namespace detail {

inline std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

class TokenReader {
 public:
  explicit TokenReader(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {}
  bool done() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const { return tokens_.at(pos_); }
  std::string word() {
    if (done()) throw std::invalid_argument("unexpected end of input");
    return tokens_[pos_++];
  }
  int integer() {
    std::string w = word();
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(w, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != w.size() || w.empty()) throw std::invalid_argument("expected integer, got '" + w + "'");
    return v;
  }
  void expect(const std::string& keyword) {
    std::string w = word();
    if (w != keyword) throw std::invalid_argument("expected '" + keyword + "', got '" + w + "'");
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

inline std::vector<Interval> read_shape_body(TokenReader& rd, int& n_cols) {
  rd.expect("moon");
  int s = rd.integer();
  n_cols = rd.integer();
  if (s < 1) throw std::invalid_argument("row count must be positive");
  std::vector<Interval> rows;
  for (int i = 0; i < s; ++i) {
    int lo = rd.integer();
    int hi = rd.integer();
    rows.push_back({lo, hi});
  }
  return rows;
}

}  // namespace detail

inline MoonPolyomino parse_polyomino(std::istream& in, bool allow_non_moon = false) {
  detail::TokenReader rd(detail::tokenize(in));
  int n_cols = 0;
  auto rows = detail::read_shape_body(rd, n_cols);
  if (!rd.done()) throw std::invalid_argument("trailing input after shape: '" + rd.peek() + "'");
  return MoonPolyomino::validate(std::move(rows), n_cols, allow_non_moon);
}

inline void write_polyomino(std::ostream& os, const MoonPolyomino& t) {
  os << "moon " << t.n_rows() << ' ' << t.n_cols() << '\n';
  for (auto& r : t.rows()) os << r.lo << ' ' << r.hi << '\n';
}

}  // namespace moonfill
