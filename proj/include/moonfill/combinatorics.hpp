#pragma once

// Arc diagrams on [n]: simple graphs, set partitions, matchings and linked
// partitions, their crossing and nesting statistics, and the encoding of a
// graph on [n] as a 01-filling of the staircase shape.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moonfill/filling.hpp"
#include "moonfill/polyomino.hpp"
#include "moonfill/pqpoly.hpp"

namespace moonfill {

using Edge = std::pair<int, int>;

// Sorted list of values with repetition.
using Multiset = std::vector<int>;

class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto [i, j] : edges) {
      if (i >= j) throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") must satisfy i < j");
      if (i < 1 || j > n) throw std::invalid_argument("edge outside [1, n]");
      if (!edges_.insert({i, j}).second) throw std::invalid_argument("duplicate edge");
    }
  }

  int n() const { return n_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool has_edge(int i, int j) const { return edges_.count({i, j}) > 0; }

  Multiset left() const {
    Multiset out;
    for (auto [i, j] : edges_) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
  }
  Multiset right() const {
    Multiset out;
    for (auto [i, j] : edges_) out.push_back(j);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_ = 0;
  std::set<Edge> edges_;
};

using Block = std::vector<int>;

namespace detail {

inline std::vector<Block> normalize_blocks(std::vector<Block> blocks) {
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw std::invalid_argument("repeated element in block");
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline void require_cover(int n, const std::vector<Block>& blocks) {
  std::vector<bool> seen(n + 1, false);
  for (auto& b : blocks)
    for (int x : b) {
      if (x < 1 || x > n) throw std::invalid_argument("block element " + std::to_string(x) + " outside [1, n]");
      seen[x] = true;
    }
  for (int x = 1; x <= n; ++x)
    if (!seen[x]) throw std::invalid_argument("element " + std::to_string(x) + " is in no block");
}

}  // namespace detail

class SetPartition {
 public:
  SetPartition() = default;
  SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(detail::normalize_blocks(std::move(blocks))) {
    detail::require_cover(n, blocks_);
    std::size_t total = 0;
    for (auto& b : blocks_) total += b.size();
    if (total != static_cast<std::size_t>(n)) throw std::invalid_argument("blocks are not disjoint");
  }

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

// True when every common element is the minimum of exactly one of the two
// blocks and that block has at least two elements.
inline bool nearly_disjoint(const Block& e, const Block& f) {
  for (int i : e) {
    if (!std::binary_search(f.begin(), f.end(), i)) continue;
    const bool a = i == e.front() && e.size() > 1 && i != f.front();
    const bool b = i == f.front() && f.size() > 1 && i != e.front();
    if (!a && !b) return false;
  }
  return true;
}

class LinkedPartition {
 public:
  LinkedPartition() = default;
  LinkedPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(detail::normalize_blocks(std::move(blocks))) {
    detail::require_cover(n, blocks_);
    for (std::size_t a = 0; a < blocks_.size(); ++a)
      for (std::size_t b = a + 1; b < blocks_.size(); ++b)
        if (!nearly_disjoint(blocks_[a], blocks_[b])) throw std::invalid_argument("blocks are not nearly disjoint");
  }

  int n() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  friend bool operator==(const LinkedPartition&, const LinkedPartition&) = default;

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

inline bool edges_cross(Edge a, Edge b) {
  if (a > b) std::swap(a, b);
  return a.first < b.first && b.first < a.second && a.second < b.second;
}

inline bool edges_nest(Edge a, Edge b) {
  if (a > b) std::swap(a, b);
  return a.first < b.first && b.second < a.second;
}

struct ArcPairCounts {
  int cros2 = 0;
  int nest2 = 0;
};

inline ArcPairCounts arc_pairs(const SimpleGraph& g) {
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  ArcPairCounts out;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      if (edges_cross(e[a], e[b])) ++out.cros2;
      if (edges_nest(e[a], e[b])) ++out.nest2;
    }
  return out;
}

inline int cros2(const SimpleGraph& g) { return arc_pairs(g).cros2; }
inline int nest2(const SimpleGraph& g) { return arc_pairs(g).nest2; }

namespace detail {

// Largest set of edges that pairwise satisfy `related`. A set of k edges is
// a k-crossing (k-nesting) exactly when its edges pairwise cross (nest).
template <class Rel>
int max_pairwise(const SimpleGraph& g, Rel related) {
  std::vector<Edge> e(g.edges().begin(), g.edges().end());
  const int k = static_cast<int>(e.size());
  if (k > 64) throw std::invalid_argument("too many edges for clique search");
  std::vector<std::uint64_t> adj(k, 0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && related(e[a], e[b])) adj[a] |= std::uint64_t{1} << b;
  int best = 0;
  auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    if (size + std::popcount(cand) <= best) return;
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, cand & adj[v], size + 1);
    }
  };
  std::uint64_t all = k == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  rec(rec, all, 0);
  return best;
}

}  // namespace detail

inline int cros_max(const SimpleGraph& g) { return detail::max_pairwise(g, edges_cross); }
inline int nest_max(const SimpleGraph& g) { return detail::max_pairwise(g, edges_nest); }

inline SimpleGraph standard_repr(const SetPartition& pi) {
  std::vector<Edge> e;
  for (auto& b : pi.blocks())
    for (std::size_t i = 0; i + 1 < b.size(); ++i) e.push_back({b[i], b[i + 1]});
  return SimpleGraph(pi.n(), e);
}

inline SimpleGraph linear_repr(const LinkedPartition& pi) {
  std::vector<Edge> e;
  for (auto& b : pi.blocks())
    for (std::size_t i = 1; i < b.size(); ++i) e.push_back({b.front(), b[i]});
  return SimpleGraph(pi.n(), e);
}

// Inverse of linear_repr on graphs whose right endpoints are all distinct.
inline LinkedPartition linked_partition_of(const SimpleGraph& g) {
  std::vector<Block> blocks;
  std::vector<bool> covered(g.n() + 1, false);
  std::map<int, Block> star;
  for (auto [i, j] : g.edges()) {
    if (covered[j]) throw std::invalid_argument("right endpoint " + std::to_string(j) + " has multiplicity > 1");
    covered[j] = true;
    star[i].push_back(j);
  }
  for (auto& [i, rest] : star) {
    covered[i] = true;
    Block b{i};
    b.insert(b.end(), rest.begin(), rest.end());
    blocks.push_back(std::move(b));
  }
  for (int x = 1; x <= g.n(); ++x)
    if (!covered[x]) blocks.push_back({x});
  return LinkedPartition(g.n(), std::move(blocks));
}

// Inverse of standard_repr on graphs with distinct left and distinct right
// endpoints.
inline SetPartition set_partition_of(const SimpleGraph& g) {
  std::map<int, int> next;
  std::set<int> has_prev;
  for (auto [i, j] : g.edges()) {
    if (!next.emplace(i, j).second) throw std::invalid_argument("left endpoint with multiplicity > 1");
    if (!has_prev.insert(j).second) throw std::invalid_argument("right endpoint with multiplicity > 1");
  }
  std::vector<Block> blocks;
  for (int x = 1; x <= g.n(); ++x) {
    if (has_prev.count(x)) continue;
    Block b{x};
    for (auto it = next.find(x); it != next.end(); it = next.find(it->second)) b.push_back(it->second);
    blocks.push_back(std::move(b));
  }
  return SetPartition(g.n(), std::move(blocks));
}

inline int cros2(const SetPartition& pi) { return cros2(standard_repr(pi)); }
inline int nest2(const SetPartition& pi) { return nest2(standard_repr(pi)); }

// Opener and closer sets of a partition: left and right endpoints of its
// standard representation.
struct OpenerCloser {
  std::set<int> openers;
  std::set<int> closers;
  friend auto operator<=>(const OpenerCloser&, const OpenerCloser&) = default;
};

inline OpenerCloser opener_closer(const SetPartition& pi) {
  OpenerCloser out;
  const SimpleGraph g = standard_repr(pi);
  for (auto [i, j] : g.edges()) {
    out.openers.insert(i);
    out.closers.insert(j);
  }
  return out;
}

// Edge (i, j) of a graph on [n] is the cell in row j - 1, column i of
// delta(n). Row j - 1 of delta(n) has columns 1..j-1.
inline Cell edge_cell(Edge e) { return {e.second - 1, e.first}; }
inline Edge cell_edge(Cell c) { return {c.col, c.row + 1}; }

inline Filling graph_to_filling(const SimpleGraph& g) {
  if (g.n() < 2) throw std::invalid_argument("graph_to_filling requires n >= 2");
  std::vector<Cell> ones;
  for (auto e : g.edges()) ones.push_back(edge_cell(e));
  return Filling(share(delta(g.n())), std::move(ones));
}

inline SimpleGraph filling_to_graph(const Filling& f) {
  const int n = f.shape().n_rows() + 1;
  if (!(f.shape() == delta(n))) throw std::invalid_argument("filling is not on a staircase shape");
  std::vector<Edge> e;
  for (auto c : f.ones()) e.push_back(cell_edge(c));
  return SimpleGraph(n, e);
}

// Crossings correspond to SE chains and nestings to NE chains.
inline bool stat_transport_check(const SimpleGraph& g) {
  if (g.n() < 2) return g.size() == 0;
  const Filling f = graph_to_filling(g);
  const auto arcs = arc_pairs(g);
  const auto chains = chain_pairs(f);
  return arcs.cros2 == chains.se2 && arcs.nest2 == chains.ne2 && cros_max(g) == se_max(f) &&
         nest_max(g) == ne_max(f);
}

// Set partitions of [n] in restricted-growth-string order.
template <class Fn>
void for_each_set_partition(int n, Fn&& fn) {
  if (n < 0) return;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int pos, int max_label) -> void {
    if (pos == n) {
      std::vector<Block> blocks(max_label + 1);
      for (int x = 0; x < n; ++x) blocks[rgs[x]].push_back(x + 1);
      fn(SetPartition(n, std::move(blocks)));
      return;
    }
    for (int v = 0; v <= max_label + 1; ++v) {
      rgs[pos] = v;
      self(self, pos + 1, std::max(max_label, v));
    }
  };
  if (n == 0) {
    fn(SetPartition(0, {}));
    return;
  }
  rgs[0] = 0;
  rec(rec, 1, 0);
}

// Perfect matchings of [n_points]; nothing is visited for odd n_points.
template <class Fn>
void for_each_matching(int n_points, Fn&& fn) {
  if (n_points < 0 || n_points % 2) return;
  std::vector<int> partner(n_points + 1, 0);
  auto rec = [&](auto&& self) -> void {
    int first = 0;
    for (int x = 1; x <= n_points && !first; ++x)
      if (!partner[x]) first = x;
    if (!first) {
      std::vector<Block> blocks;
      for (int x = 1; x <= n_points; ++x)
        if (partner[x] > x) blocks.push_back({x, partner[x]});
      fn(SetPartition(n_points, std::move(blocks)));
      return;
    }
    for (int y = first + 1; y <= n_points; ++y) {
      if (partner[y]) continue;
      partner[first] = y;
      partner[y] = first;
      self(self);
      partner[first] = partner[y] = 0;
    }
  };
  rec(rec);
}

// All simple graphs on [n], by edge bitmask over the lexicographic edge list.
template <class Fn>
void for_each_graph(int n, Fn&& fn) {
  std::vector<Edge> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.push_back({i, j});
  if (all.size() > 62) throw std::invalid_argument("too many vertices for exhaustive graph enumeration");
  const std::uint64_t limit = std::uint64_t{1} << all.size();
  std::vector<Edge> e;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    e.clear();
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1) e.push_back(all[b]);
    fn(SimpleGraph(n, e));
  }
}

// Linked partitions of [n], built from graphs in which every vertex j has at
// most one neighbour to its left.
template <class Fn>
void for_each_linked_partition(int n, Fn&& fn) {
  std::vector<int> left_of(n + 1, 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      std::vector<Edge> e;
      for (int x = 2; x <= n; ++x)
        if (left_of[x]) e.push_back({left_of[x], x});
      fn(linked_partition_of(SimpleGraph(n, e)));
      return;
    }
    for (int i = 0; i < j; ++i) {
      left_of[j] = i;
      self(self, j + 1);
    }
  };
  rec(rec, 1);
}

inline PQPolynomial cros_nest_distribution(const std::vector<SimpleGraph>& graphs) {
  DistributionBuilder b;
  for (auto& g : graphs) {
    auto c = arc_pairs(g);
    b.add(c.cros2, c.nest2);
  }
  return b.polynomial();
}

// Product formulas for graphs with prescribed endpoint multisets (S, T).
// h_i = #{j in S : j < i} - #{j in T : j < i} and
// h'_i = #{j in T : j > i} - #{j in S : j > i}, counted with multiplicity.
inline int h_low(const Multiset& s, const Multiset& t, int i) {
  return static_cast<int>(std::lower_bound(s.begin(), s.end(), i) - s.begin()) -
         static_cast<int>(std::lower_bound(t.begin(), t.end(), i) - t.begin());
}

inline int h_high(const Multiset& s, const Multiset& t, int i) {
  return static_cast<int>(t.end() - std::upper_bound(t.begin(), t.end(), i)) -
         static_cast<int>(s.end() - std::upper_bound(s.begin(), s.end(), i));
}

inline int multiplicity(const Multiset& m, int i) {
  auto [lo, hi] = std::equal_range(m.begin(), m.end(), i);
  return static_cast<int>(hi - lo);
}

// prod over distinct i in T of [h_i choose m_i], m_i the multiplicity in T.
inline PQPolynomial graph_product_by_closers(const Multiset& s, const Multiset& t) {
  PQPolynomial out = 1;
  for (int i : std::set<int>(t.begin(), t.end())) out *= gaussian(h_low(s, t, i), multiplicity(t, i));
  return out;
}

// prod over distinct i in S of [h'_i choose m'_i], m'_i the multiplicity in S.
inline PQPolynomial graph_product_by_openers(const Multiset& s, const Multiset& t) {
  PQPolynomial out = 1;
  for (int i : std::set<int>(s.begin(), s.end())) out *= gaussian(h_high(s, t, i), multiplicity(s, i));
  return out;
}

inline bool all_distinct(const Multiset& m) { return std::adjacent_find(m.begin(), m.end()) == m.end(); }

// Text formats.

inline std::string to_string(const std::vector<Block>& blocks) {
  std::ostringstream os;
  for (auto& b : blocks) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
  }
  return os.str();
}

inline std::string to_string(const SetPartition& pi) { return to_string(pi.blocks()); }
inline std::string to_string(const LinkedPartition& pi) { return to_string(pi.blocks()); }

inline std::vector<Block> parse_blocks(const std::string& text) {
  std::vector<Block> blocks;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) { throw std::invalid_argument("bad block list '" + text + "': " + why); };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') fail("expected '{'");
    ++i;
    Block b;
    for (;;) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail("expected a number");
      b.push_back(std::stoi(text.substr(start, i - start)));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      fail("expected ',' or '}'");
    }
    blocks.push_back(std::move(b));
    skip_ws();
  }
  return blocks;
}

// n is the largest element present.
inline SetPartition parse_set_partition(const std::string& text) {
  auto blocks = parse_blocks(text);
  int n = 0;
  for (auto& b : blocks)
    for (int x : b) n = std::max(n, x);
  return SetPartition(n, std::move(blocks));
}

inline LinkedPartition parse_linked_partition(const std::string& text) {
  auto blocks = parse_blocks(text);
  int n = 0;
  for (auto& b : blocks)
    for (int x : b) n = std::max(n, x);
  return LinkedPartition(n, std::move(blocks));
}

inline void write_graph(std::ostream& os, const SimpleGraph& g) {
  os << g.n() << '\n';
  for (auto [i, j] : g.edges()) os << i << ' ' << j << '\n';
}

inline SimpleGraph parse_graph(std::istream& in) {
  detail::TokenReader rd(detail::tokenize(in));
  const int n = rd.integer();
  std::vector<Edge> e;
  while (!rd.done()) {
    int i = rd.integer();
    int j = rd.integer();
    e.push_back({i, j});
  }
  return SimpleGraph(n, e);
}

}  // namespace moonfill
