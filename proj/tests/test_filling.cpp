#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "moonfill/filling.hpp"

using namespace moonfill;

namespace {

Filling load(const std::string& name, bool allow_non_moon = false) {
  std::ifstream in(std::string(MOONFILL_TEST_DATA) + "/" + name);
  return parse_filling(in, allow_non_moon);
}

MoonPolyomino five_row_shape() {
  std::ifstream in(std::string(MOONFILL_TEST_DATA) + "/five_row_shape.txt");
  return parse_polyomino(in);
}

// Longest chain by trying every subset of 1s: the subset must be totally
// ordered in the given direction and its bounding rectangle must lie in T.
int brute_longest_chain(const Filling& f, bool north_east) {
  const auto& ones = f.ones();
  const int k = static_cast<int>(ones.size());
  int best = 0;
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<Cell> s;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) s.push_back(ones[i]);
    std::sort(s.begin(), s.end(), [](Cell a, Cell b) { return a.col < b.col; });
    bool ok = true;
    CellRect box{s[0].row, s[0].row, s[0].col, s[0].col};
    for (std::size_t i = 1; i < s.size() && ok; ++i) {
      if (s[i].col == s[i - 1].col) ok = false;
      if (north_east ? s[i].row >= s[i - 1].row : s[i].row <= s[i - 1].row) ok = false;
      box.top = std::min(box.top, s[i].row);
      box.bottom = std::max(box.bottom, s[i].row);
      box.right = s[i].col;
    }
    if (ok && contains_rect(f.shape(), box)) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

// All 2^|T| fillings, filtered afterwards.
std::vector<Filling> all_subsets(const ShapePtr& shape) {
  auto cells = shape->cells();
  std::vector<Filling> out;
  for (long mask = 0; mask < (1L << cells.size()); ++mask) {
    std::vector<Cell> ones;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (mask >> i & 1) ones.push_back(cells[i]);
    out.emplace_back(shape, std::move(ones));
  }
  return out;
}

}  // namespace

TEST(Filling, RejectsBadCells) {
  auto t = share(delta(3));
  EXPECT_THROW(Filling(t, {{1, 2}}), FillingError);
  EXPECT_THROW(Filling(t, {{1, 1}, {1, 1}}), FillingError);
  EXPECT_THROW(Filling(nullptr, {}), FillingError);
}

TEST(Filling, ClassFlags) {
  auto empty = Filling(delta(3), {});
  auto flags = class_of(empty);
  EXPECT_TRUE(flags.in_col_class && flags.in_row_class && flags.in_both);
  auto same_col = Filling(delta(3), {{1, 1}, {2, 1}});
  EXPECT_FALSE(class_of(same_col).in_col_class);
  EXPECT_TRUE(class_of(same_col).in_row_class);
  auto eight = load("eight_row_filling.txt");
  // Eight 1s in six nonempty rows: one per column but not one per row.
  EXPECT_TRUE(class_of(eight).in_col_class);
  EXPECT_FALSE(class_of(eight).in_row_class);
  EXPECT_FALSE(class_of(eight).in_both);
}

TEST(Filling, EmptyRowsAndColumns) {
  auto f = load("eight_row_filling.txt");
  EXPECT_EQ(empty_rows(f), (std::set<int>{3, 7}));
  EXPECT_EQ(empty_cols(f), (std::set<int>{3, 10}));
  auto d = Filling(delta(5), {});
  EXPECT_EQ(empty_rows(d), (std::set<int>{1, 2, 3, 4}));
  EXPECT_EQ(empty_cols(d), (std::set<int>{1, 2, 3, 4}));
  auto shape = share(delta(5));
  auto full = Filling(shape, shape->cells());
  EXPECT_TRUE(empty_rows(full).empty());
  EXPECT_TRUE(empty_cols(full).empty());
}

TEST(ChainPairs, FrozenValues) {
  auto f = load("eight_row_filling.txt");
  EXPECT_EQ(ne2(f), 4);
  EXPECT_EQ(se2(f), 4);
  EXPECT_EQ(ne2_by_coloring(f), 4);
  EXPECT_EQ(se2_by_coloring(f), 4);
  auto g = load("staircase_graph_filling.txt");
  EXPECT_EQ(ne2(g), 6);
  EXPECT_EQ(se2(g), 4);
  auto e = Filling(delta(4), {});
  EXPECT_EQ(ne2(e), 0);
  EXPECT_EQ(se2(e), 0);
  EXPECT_EQ(ne2_by_coloring(e), 0);
}

TEST(ChainPairs, RectangleMustLieInShape) {
  // In the 2x2 square the 1s at (1,1) and (2,2) form a descent. With rows
  // [1,1] and [1,2] the same pair is no descent since (1,2) is missing, and
  // with rows [2,2] and [1,2] the pair (1,2),(2,1) is no ascent.
  auto square = MoonPolyomino::validate({{1, 2}, {1, 2}}, 2);
  EXPECT_EQ(se2(Filling(square, {{1, 1}, {2, 2}})), 1);
  EXPECT_EQ(ne2(Filling(square, {{1, 2}, {2, 1}})), 1);
  auto t = MoonPolyomino::validate({{1, 1}, {1, 2}}, 2);
  EXPECT_EQ(se2(Filling(t, {{1, 1}, {2, 2}})), 0);
  auto u = MoonPolyomino::validate({{2, 2}, {1, 2}}, 2);
  EXPECT_EQ(ne2(Filling(u, {{1, 2}, {2, 1}})), 0);
  auto v = MoonPolyomino::validate({{2, 3}, {1, 3}, {1, 1}}, 3, true);
  EXPECT_EQ(ne2(Filling(v, {{1, 3}, {3, 1}})), 0);
}

TEST(LongestChain, MatchesSubsetSearch) {
  for (const auto& t : moon_polyominoes(6)) {
    auto shape = share(t);
    for (const auto& f : all_subsets(shape)) {
      if (f.size() > 5) continue;
      ASSERT_EQ(ne_max(f), brute_longest_chain(f, true));
      ASSERT_EQ(se_max(f), brute_longest_chain(f, false));
    }
  }
  auto single = Filling(delta(2), {{1, 1}});
  EXPECT_EQ(ne_max(single), 1);
  EXPECT_EQ(se_max(single), 1);
  EXPECT_EQ(ne_max(Filling(delta(2), {})), 0);
}

TEST(Coloring, EmptyFillingColorsEverything) {
  auto shape = share(five_row_shape());
  auto c = coloring(Filling(shape, {}));
  EXPECT_EQ(c.colored_cells(), shape->cells());
}

TEST(Coloring, PartialColoringOfOneRow) {
  // Row 2 of the eight-row shape is in Up; its 1s at columns 5 and 9 color
  // their columns inside rectangle 2 below row 2 only.
  auto f = load("eight_row_filling.txt");
  const auto& t = f.shape();
  auto rect = rectangle(t, 2);
  auto c = partial_coloring(f, {2}, false);
  std::vector<Cell> expected;
  for (int r = 3; r <= rect.bottom; ++r)
    for (int col : {5, 9}) expected.push_back({r, col});
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(c.colored_cells(), expected);
}

TEST(Coloring, RequiresColumnClass) {
  auto f = Filling(delta(3), {{1, 1}, {2, 1}});
  EXPECT_THROW(coloring(f), NotColumnClass);
}

TEST(Coloring, LucRucOnEmptyAndSingleCell) {
  auto f = load("eight_row_filling.txt");
  EXPECT_EQ(luc(f, {3, 5}), 0);
  EXPECT_EQ(ruc(f, {3, 5}), 0);
  auto one = Filling(delta(2), {{1, 1}});
  EXPECT_EQ(luc(one, {1, 1}), 0);
  EXPECT_EQ(ruc(one, {1, 1}), 0);
}

TEST(Coloring, StatisticsAgreeWithChainsExhaustively) {
  long checked = 0;
  for_each_moon_polyomino(8, [&](const MoonPolyomino& t) {
    for_each_filling(share(t), ConstraintSpec::of(FillingClass::Col), [&](const Filling& f) {
      auto direct = chain_pairs(f);
      auto colored = chain_pairs_by_coloring(f);
      ASSERT_EQ(direct.ne2, colored.ne2);
      ASSERT_EQ(direct.se2, colored.se2);
      ++checked;
    });
  });
  EXPECT_GT(checked, 10000);
}

TEST(Coloring, AllOfDeltaFive) {
  for_each_filling(share(delta(5)), ConstraintSpec::of(FillingClass::Col), [&](const Filling& f) {
    ASSERT_EQ(ne2(f), ne2_by_coloring(f));
    ASSERT_EQ(se2(f), se2_by_coloring(f));
  });
}

TEST(Rotate, SwapsStatisticsAndClasses) {
  for (const auto& t : moon_polyominoes(6)) {
    for (const auto& f : all_subsets(share(t))) {
      auto g = rotate90(f);
      ASSERT_EQ(ne2(g), se2(f));
      ASSERT_EQ(se2(g), ne2(f));
      ASSERT_EQ(class_of(g).in_row_class, class_of(f).in_col_class);
      ASSERT_EQ(g.size(), f.size());
    }
  }
}

TEST(Enumerate, CountsMatchFilteredSubsets) {
  for (const auto& t : moon_polyominoes(7)) {
    auto shape = share(t);
    auto all = all_subsets(shape);
    long col = 0, row = 0, both = 0;
    for (auto& f : all) {
      auto flags = class_of(f);
      col += flags.in_col_class;
      row += flags.in_row_class;
      both += flags.in_both;
    }
    ASSERT_EQ(enumerate(shape, ConstraintSpec::of(FillingClass::All)).size(), all.size());
    ASSERT_EQ(static_cast<long>(enumerate(shape, ConstraintSpec::of(FillingClass::Col)).size()), col);
    ASSERT_EQ(static_cast<long>(enumerate(shape, ConstraintSpec::of(FillingClass::Row)).size()), row);
    ASSERT_EQ(static_cast<long>(enumerate(shape, ConstraintSpec::of(FillingClass::Both)).size()), both);
  }
}

TEST(Enumerate, ConstrainedClassMatchesFilter) {
  auto shape = share(five_row_shape());
  ConstraintSpec spec = ConstraintSpec::of(FillingClass::Col);
  spec.row_counts = std::vector<int>{1, 2, 1, 0, 1};
  spec.empty_cols = std::set<int>{2};
  auto fs = enumerate(shape, spec);
  long filtered = 0;
  for (const auto& f : enumerate(shape, ConstraintSpec::of(FillingClass::Col)))
    if (f.row_counts() == *spec.row_counts && empty_cols(f) == *spec.empty_cols) ++filtered;
  EXPECT_EQ(static_cast<long>(fs.size()), filtered);
  EXPECT_EQ(fs.size(), 6u);
  for (const auto& f : fs) {
    EXPECT_EQ(f.row_counts(), *spec.row_counts);
    EXPECT_EQ(empty_cols(f), *spec.empty_cols);
  }
}

TEST(Enumerate, BothClassWithEmptySets) {
  // N(T; A, B) equals the column class with m the indicator of rows outside
  // B, filtered on EC = A.
  auto shape = share(five_row_shape());
  const std::set<int> a{1, 6}, b{1};
  ConstraintSpec both = ConstraintSpec::of(FillingClass::Both);
  both.empty_cols = a;
  both.empty_rows = b;
  ConstraintSpec col = ConstraintSpec::of(FillingClass::Col);
  col.row_counts = std::vector<int>{0, 1, 1, 1, 1};
  std::vector<Filling> expected;
  for (auto& f : enumerate(shape, col))
    if (empty_cols(f) == a) expected.push_back(f);
  auto got = enumerate(shape, both);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i].ones(), expected[i].ones());
}

TEST(Enumerate, DeterministicLexicographicOrder) {
  auto shape = share(delta(4));
  auto fs = enumerate(shape, ConstraintSpec::of(FillingClass::All));
  ASSERT_EQ(fs.size(), 64u);
  for (std::size_t i = 1; i < fs.size(); ++i) EXPECT_LT(fs[i - 1].ones(), fs[i].ones());
  EXPECT_EQ(enumerate(delta(2), ConstraintSpec::of(FillingClass::All)).size(), 2u);
  for (int n = 2; n <= 5; ++n)
    EXPECT_EQ(enumerate(delta(n), ConstraintSpec::of(FillingClass::All)).size(), 1u << (n * (n - 1) / 2));
}

TEST(Enumerate, InconsistentSpecsThrow) {
  auto t = five_row_shape();
  ConstraintSpec s = ConstraintSpec::of(FillingClass::Col);
  s.row_counts = std::vector<int>{1, 1};
  EXPECT_THROW(enumerate(t, s), InconsistentSpec);
  ConstraintSpec r = ConstraintSpec::of(FillingClass::Row);
  r.row_counts = std::vector<int>{2, 0, 0, 0, 0};
  EXPECT_THROW(enumerate(t, r), InconsistentSpec);
  ConstraintSpec k = ConstraintSpec::of(FillingClass::All);
  k.row_counts = std::vector<int>{1, 0, 0, 0, 0};
  k.total_ones = 2;
  EXPECT_THROW(enumerate(t, k), InconsistentSpec);
  ConstraintSpec a = ConstraintSpec::of(FillingClass::Col);
  a.empty_cols = std::set<int>{9};
  EXPECT_THROW(enumerate(t, a), InconsistentSpec);
}

TEST(Distribution, FrozenValues) {
  EXPECT_TRUE(distribution(std::vector<Filling>{}).is_zero());
  ConstraintSpec spec = ConstraintSpec::of(FillingClass::Col);
  spec.row_counts = std::vector<int>{1, 2, 1, 0, 1};
  spec.empty_cols = std::set<int>{2};
  EXPECT_EQ(to_string(distribution_of(five_row_shape(), spec)), "p^3 + 2*p^2*q + 2*p*q^2 + q^3");
  auto bad = MoonPolyomino::validate({{2, 3}, {1, 3}, {1, 2}}, 3, true);
  ConstraintSpec ones = ConstraintSpec::of(FillingClass::Col);
  ones.row_counts = std::vector<int>{1, 1, 1};
  EXPECT_EQ(to_string(distribution_of(bad, ones)), "p^2 + 2*q");
}

TEST(TextFormat, RoundTrip) {
  auto f = load("eight_row_nine_ones.txt");
  std::stringstream ss;
  write_filling(ss, f);
  auto g = parse_filling(ss);
  EXPECT_EQ(g.ones(), f.ones());
  EXPECT_EQ(g.shape(), f.shape());
  std::istringstream no_ones("moon 1 1\n1 1\n");
  EXPECT_EQ(parse_filling(no_ones).size(), 0);
  std::istringstream outside("moon 1 1\n1 1\nones 1\n1 2\n");
  EXPECT_THROW(parse_filling(outside), FillingError);
  std::istringstream trailing("moon 1 1\n1 1\nones 0\nextra\n");
  EXPECT_THROW(parse_filling(trailing), std::invalid_argument);
}
