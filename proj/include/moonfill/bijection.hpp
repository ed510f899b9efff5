#pragma once

// Row capacities, the bijection psi from column-class fillings to sequences
// of weak compositions, its inverse upsilon, and the involution phi that
// exchanges ascents and descents.

#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "moonfill/compositions.hpp"
#include "moonfill/filling.hpp"
#include "moonfill/polyomino.hpp"
#include "moonfill/pqpoly.hpp"

namespace moonfill {

// Per-row (or per-column) capacities; index d - 1 holds the value for row d.
struct HValues {
  std::vector<int> h;
  std::vector<int> a;

  bool feasible(const std::vector<int>& counts) const {
    for (std::size_t d = 0; d < h.size(); ++d)
      if (h[d] < counts[d]) return false;
    return true;
  }
};

class InfeasibleClass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CodomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// h_{i_u} = r_{i_u} - (m_{i_1} + ... + m_{i_{u-1}}) - a_{i_u} with rows in
// increasing order and a_i the number of columns of A meeting row i.
inline HValues h_values(const MoonPolyomino& t, const std::vector<int>& m, const std::set<int>& empty_col_set) {
  if (static_cast<int>(m.size()) != t.n_rows()) throw std::invalid_argument("m must have one entry per row");
  HValues out;
  out.h.assign(t.n_rows(), 0);
  out.a.assign(t.n_rows(), 0);
  int placed = 0;
  for (int i : row_order(t)) {
    int a = 0;
    for (int k : empty_col_set)
      if (t.row(i).contains(k)) ++a;
    out.a[i - 1] = a;
    out.h[i - 1] = t.row(i).length() - placed - a;
    placed += m[i - 1];
  }
  return out;
}

// Column version: h'_{j_v} = c_{j_v} - (n_{j_1} + ... + n_{j_{v-1}}) - b_{j_v}.
inline HValues h_prime_values(const MoonPolyomino& t, const std::vector<int>& n,
                              const std::set<int>& empty_row_set) {
  if (static_cast<int>(n.size()) != t.n_cols()) throw std::invalid_argument("n must have one entry per column");
  HValues out;
  out.h.assign(t.n_cols(), 0);
  out.a.assign(t.n_cols(), 0);
  int placed = 0;
  for (int j : col_order(t)) {
    int b = 0;
    for (int k : empty_row_set)
      if (t.col(j).contains(k)) ++b;
    out.a[j - 1] = b;
    out.h[j - 1] = t.col(j).length() - placed - b;
    placed += n[j - 1];
  }
  return out;
}

// With at most one 1 per column and EC(F) = A, every column outside A holds
// exactly one 1, so a class is empty unless sum(m) + |A| = t.
inline bool consistent_col_class(const MoonPolyomino& t, const std::vector<int>& m,
                                 const std::set<int>& empty_col_set) {
  if (!empty_col_set.empty() && (*empty_col_set.begin() < 1 || *empty_col_set.rbegin() > t.n_cols())) return false;
  return std::accumulate(m.begin(), m.end(), 0) + static_cast<int>(empty_col_set.size()) == t.n_cols();
}

inline bool consistent_row_class(const MoonPolyomino& t, const std::vector<int>& n,
                                 const std::set<int>& empty_row_set) {
  if (!empty_row_set.empty() && (*empty_row_set.begin() < 1 || *empty_row_set.rbegin() > t.n_rows())) return false;
  return std::accumulate(n.begin(), n.end(), 0) + static_cast<int>(empty_row_set.size()) == t.n_rows();
}

inline HValues checked_h_values(const MoonPolyomino& t, const std::vector<int>& m,
                                const std::set<int>& empty_col_set) {
  if (!consistent_col_class(t, m, empty_col_set))
    throw InfeasibleClass("sum of m plus |A| must equal the number of columns");
  HValues hv = h_values(t, m, empty_col_set);
  for (int d = 1; d <= t.n_rows(); ++d)
    if (hv.h[d - 1] < m[d - 1])
      throw InfeasibleClass("row " + std::to_string(d) + " has capacity " + std::to_string(hv.h[d - 1]) +
                            " < " + std::to_string(m[d - 1]));
  return hv;
}

// One weak composition per row. A row without 1s carries the single part (0).
struct CompositionSeq {
  std::vector<std::vector<int>> comps;

  std::vector<int> row_counts() const {
    std::vector<int> m;
    for (auto& c : comps) m.push_back(c.empty() ? 0 : static_cast<int>(c.size()) - 1);
    return m;
  }
  friend bool operator==(const CompositionSeq&, const CompositionSeq&) = default;
  friend auto operator<=>(const CompositionSeq&, const CompositionSeq&) = default;
};

inline CompositionSeq rev(CompositionSeq cs) {
  for (auto& c : cs.comps) std::reverse(c.begin(), c.end());
  return cs;
}

namespace detail {

inline void require_col_class(const Filling& f) {
  if (!class_of(f).in_col_class) throw NotColumnClass();
}

// Sizes of the runs of uncolored cells separated by the 1s of row i.
inline std::vector<int> uncolored_gaps(const Filling& f, const Coloring& colors, int i) {
  std::vector<int> gaps{0};
  const Interval span = f.shape().row(i);
  for (int c = span.lo; c <= span.hi; ++c) {
    const Cell x{i, c};
    if (f.has_one(x)) {
      gaps.push_back(0);
    } else if (!colors.is_colored(x)) {
      ++gaps.back();
    }
  }
  return gaps;
}

}  // namespace detail

inline CompositionSeq psi(const Filling& f) {
  detail::require_col_class(f);
  const Coloring colors = coloring(f);
  const auto m = f.row_counts();
  CompositionSeq out;
  for (int i = 1; i <= f.shape().n_rows(); ++i) {
    if (m[i - 1] == 0) {
      out.comps.push_back({0});
    } else {
      out.comps.push_back(detail::uncolored_gaps(f, colors, i));
    }
  }
  return out;
}

namespace detail {

// Puts 1s into the uncolored cells of row i so that the uncolored runs
// between them have the given sizes, then colors under the new 1s. Returns
// the chosen columns.
inline std::vector<int> insert_row(const MoonPolyomino& t, Coloring& colors, int i, const std::vector<int>& gaps,
                                   int expected_uncolored) {
  std::vector<int> free_cols;
  for (int c = t.row(i).lo; c <= t.row(i).hi; ++c)
    if (!colors.is_colored({i, c})) free_cols.push_back(c);
  if (static_cast<int>(free_cols.size()) != expected_uncolored)
    throw std::logic_error("row " + std::to_string(i) + " has " + std::to_string(free_cols.size()) +
                           " uncolored cells at insertion, expected " + std::to_string(expected_uncolored));
  std::vector<int> chosen;
  std::size_t cursor = 0;
  for (std::size_t u = 0; u + 1 < gaps.size(); ++u) {
    cursor += gaps[u];
    chosen.push_back(free_cols.at(cursor));
    ++cursor;
  }
  for (int col : chosen) color_under_one(t, colors, i, col);
  return chosen;
}

}  // namespace detail

// Inverse of psi on the composition product space for (T, m, A).
inline Filling upsilon(const ShapePtr& shape, const std::vector<int>& m, const std::set<int>& empty_col_set,
                       const CompositionSeq& cs) {
  const MoonPolyomino& t = *shape;
  if (static_cast<int>(cs.comps.size()) != t.n_rows())
    throw CodomainMismatch("composition sequence must have one entry per row");
  const HValues hv = checked_h_values(t, m, empty_col_set);
  for (int i = 1; i <= t.n_rows(); ++i) {
    const auto& c = cs.comps[i - 1];
    const int mi = m[i - 1];
    if (mi == 0) {
      if (c != std::vector<int>{0})
        throw CodomainMismatch("row " + std::to_string(i) + " has no 1s and needs the composition (0)");
      continue;
    }
    if (static_cast<int>(c.size()) != mi + 1)
      throw CodomainMismatch("row " + std::to_string(i) + " needs " + std::to_string(mi + 1) + " parts");
    if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; }))
      throw CodomainMismatch("negative part in row " + std::to_string(i));
    if (std::accumulate(c.begin(), c.end(), 0) != hv.h[i - 1] - mi)
      throw CodomainMismatch("row " + std::to_string(i) + " parts must sum to " +
                             std::to_string(hv.h[i - 1] - mi));
  }
  Coloring colors(t);
  color_columns(t, colors, empty_col_set);
  std::vector<Cell> ones;
  for (int i : row_order(t)) {
    if (m[i - 1] == 0) continue;
    for (int col : detail::insert_row(t, colors, i, cs.comps[i - 1], hv.h[i - 1])) ones.push_back({i, col});
  }
  return Filling(shape, std::move(ones));
}

inline Filling upsilon(const MoonPolyomino& t, const std::vector<int>& m, const std::set<int>& empty_col_set,
                       const CompositionSeq& cs) {
  return upsilon(share(t), m, empty_col_set, cs);
}

inline Filling phi(const Filling& f) {
  return upsilon(f.shape_ptr(), f.row_counts(), empty_cols(f), rev(psi(f)));
}

// The same involution built by reading the gaps of each row of F and
// inserting them reversed, row by row in increasing order.
inline Filling phi_direct(const Filling& f) {
  detail::require_col_class(f);
  const MoonPolyomino& t = f.shape();
  const Coloring source_colors = coloring(f);
  const std::set<int> empty = empty_cols(f);
  Coloring colors(t);
  color_columns(t, colors, empty);
  std::vector<Cell> ones;
  for (int i : row_order(t)) {
    std::vector<int> gaps = detail::uncolored_gaps(f, source_colors, i);
    if (gaps.size() == 1) continue;
    const int uncolored = std::accumulate(gaps.begin(), gaps.end(), 0) + static_cast<int>(gaps.size()) - 1;
    std::reverse(gaps.begin(), gaps.end());
    for (int col : detail::insert_row(t, colors, i, gaps, uncolored)) ones.push_back({i, col});
  }
  return Filling(f.shape_ptr(), std::move(ones));
}

// Every sequence in C_{m_1+1}(h_1 - m_1) x ... x C_{m_s+1}(h_s - m_s), in
// lexicographic order of rows. Nothing is visited when (m, A) is infeasible.
template <class Fn>
void for_each_composition_seq(const MoonPolyomino& t, const std::vector<int>& m, const std::set<int>& empty_col_set,
                              Fn&& fn) {
  if (!consistent_col_class(t, m, empty_col_set)) return;
  const HValues hv = h_values(t, m, empty_col_set);
  if (!hv.feasible(m)) return;
  CompositionSeq cs;
  cs.comps.resize(t.n_rows());
  auto rec = [&](auto&& self, int i) -> void {
    if (i > t.n_rows()) {
      fn(static_cast<const CompositionSeq&>(cs));
      return;
    }
    if (m[i - 1] == 0) {
      cs.comps[i - 1] = {0};
      self(self, i + 1);
      return;
    }
    for_each_weak_composition(hv.h[i - 1] - m[i - 1], m[i - 1] + 1, [&](const std::vector<int>& parts) {
      cs.comps[i - 1] = parts;
      self(self, i + 1);
    });
  };
  rec(rec, 1);
}

// Memoized p,q-Gaussian coefficients. Not thread-safe; use one per worker.
class GaussianTable {
 public:
  const PQPolynomial& get(int n, int k) {
    static const PQPolynomial zero;
    if (n < 0 || k < 0 || k > n) return zero;
    auto [it, inserted] = cache_.try_emplace({n, k});
    if (inserted) it->second = gaussian(n, k);
    return it->second;
  }

 private:
  std::map<std::pair<int, int>, PQPolynomial> cache_;
};

inline PQPolynomial gaussian_product(const std::vector<int>& h, const std::vector<int>& counts,
                                     GaussianTable* table = nullptr) {
  PQPolynomial out = 1;
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d] < counts[d]) return {};
    out *= table ? table->get(h[d], counts[d]) : gaussian(h[d], counts[d]);
  }
  return out;
}

// Closed form for the (ne2, se2) distribution over N^c(T, m; A); zero for
// an inconsistent (m, A).
inline PQPolynomial theorem_rhs_col(const MoonPolyomino& t, const std::vector<int>& m,
                                    const std::set<int>& empty_col_set, GaussianTable* table = nullptr) {
  if (!consistent_col_class(t, m, empty_col_set)) return {};
  return gaussian_product(h_values(t, m, empty_col_set).h, m, table);
}

// Closed form for the (ne2, se2) distribution over N^r(T, n; B); zero for
// an inconsistent (n, B).
inline PQPolynomial theorem_rhs_row(const MoonPolyomino& t, const std::vector<int>& n,
                                    const std::set<int>& empty_row_set, GaussianTable* table = nullptr) {
  if (!consistent_row_class(t, n, empty_row_set)) return {};
  return gaussian_product(h_prime_values(t, n, empty_row_set).h, n, table);
}

// Both product forms for N(T; A, B): prod over rows outside B of [h_d] and
// prod over columns outside A of [h'_d].
struct CorollaryProducts {
  PQPolynomial by_rows;
  PQPolynomial by_cols;
};

inline CorollaryProducts corollary_products(const MoonPolyomino& t, const std::set<int>& empty_col_set,
                                            const std::set<int>& empty_row_set) {
  std::vector<int> m(t.n_rows(), 1);
  for (int i : empty_row_set) m[i - 1] = 0;
  std::vector<int> n(t.n_cols(), 1);
  for (int j : empty_col_set) n[j - 1] = 0;
  CorollaryProducts out;
  out.by_rows = 1;
  out.by_cols = 1;
  auto h = h_values(t, m, empty_col_set).h;
  for (int d = 1; d <= t.n_rows(); ++d)
    if (!empty_row_set.count(d)) out.by_rows *= pq_integer(h[d - 1]);
  auto hp = h_prime_values(t, n, empty_row_set).h;
  for (int d = 1; d <= t.n_cols(); ++d)
    if (!empty_col_set.count(d)) out.by_cols *= pq_integer(hp[d - 1]);
  return out;
}

// Index maps for the quarter turn: column j of T is row j of the rotated
// shape and row i of T is its column s + 1 - i.
inline std::set<int> rows_to_rotated_cols(const std::set<int>& rows, int n_rows) {
  std::set<int> out;
  for (int i : rows) out.insert(n_rows + 1 - i);
  return out;
}

inline std::vector<int> row_counts_to_rotated_cols(const std::vector<int>& m) {
  return {m.rbegin(), m.rend()};
}

// Text format: one line per row, parts separated by spaces, '-' for a row
// without 1s.
inline void write_composition_seq(std::ostream& os, const CompositionSeq& cs) {
  for (const auto& c : cs.comps) {
    if (c.size() <= 1) {
      os << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << '\n';
  }
}

inline CompositionSeq parse_composition_seq(std::istream& in) {
  CompositionSeq cs;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    std::vector<int> parts;
    while (ls >> tok) {
      if (tok == "-") {
        parts.push_back(0);
        continue;
      }
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw std::invalid_argument("bad composition part '" + tok + "'");
      parts.push_back(v);
    }
    cs.comps.push_back(std::move(parts));
  }
  return cs;
}

}  // namespace moonfill
