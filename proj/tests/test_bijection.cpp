#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "moonfill/bijection.hpp"

using namespace moonfill;

namespace {

std::string data_path(const std::string& name) { return std::string(MOONFILL_TEST_DATA) + "/" + name; }

Filling load_filling(const std::string& name) {
  std::ifstream in(data_path(name));
  return parse_filling(in);
}

MoonPolyomino load_shape(const std::string& name) {
  std::ifstream in(data_path(name));
  return parse_polyomino(in);
}

CompositionSeq load_comps(const std::string& name) {
  std::ifstream in(data_path(name));
  return parse_composition_seq(in);
}

const PQPolynomial P = PQPolynomial::p();
const PQPolynomial Q = PQPolynomial::q();

// luc and ruc of the j-th 1 of each row, left to right.
std::vector<std::vector<SideCounts>> row_side_counts(const Filling& f) {
  const Coloring c = coloring(f);
  std::vector<std::vector<SideCounts>> out;
  for (int i = 1; i <= f.shape().n_rows(); ++i) {
    std::vector<SideCounts> row;
    for (int col : f.ones_in_row(i)) row.push_back(side_counts(f, c, {i, col}));
    out.push_back(row);
  }
  return out;
}

}  // namespace

TEST(HValues, WorkedExample) {
  auto t = load_shape("five_row_shape.txt");
  const std::vector<int> m{1, 2, 1, 0, 1};
  auto hv = h_values(t, m, {2});
  EXPECT_EQ(hv.h, (std::vector<int>{2, 3, 1, 1, 1}));
  EXPECT_EQ(hv.a, (std::vector<int>{0, 1, 1, 1, 1}));
  auto expected = gaussian(2, 1) * gaussian(3, 2) * gaussian(1, 1) * gaussian(1, 0) * gaussian(1, 1);
  EXPECT_EQ(theorem_rhs_col(t, m, {2}), expected);
  EXPECT_EQ(to_string(expected), "p^3 + 2*p^2*q + 2*p*q^2 + q^3");
}

TEST(HValues, InconsistentClassesAreEmpty) {
  auto t = load_shape("one_cell.txt");
  EXPECT_FALSE(consistent_col_class(t, {0}, {}));
  EXPECT_TRUE(theorem_rhs_col(t, {0}, {}).is_zero());
  EXPECT_EQ(theorem_rhs_col(t, {0}, {1}), 1);
  EXPECT_EQ(theorem_rhs_col(t, {1}, {}), 1);
  EXPECT_THROW(upsilon(t, {0}, {}, CompositionSeq{{{0}}}), InfeasibleClass);
  auto five = load_shape("five_row_shape.txt");
  EXPECT_THROW(checked_h_values(five, {2, 0, 0, 0, 0}, {2, 3, 4, 5}), InfeasibleClass);
  EXPECT_THROW(h_values(five, {1}, {}), std::invalid_argument);
}

TEST(Psi, GoldenFixture) {
  auto f = load_filling("eight_row_nine_ones.txt");
  auto expected = load_comps("eight_row_nine_ones_psi.txt");
  EXPECT_EQ(psi(f), expected);
  EXPECT_EQ(psi(f).row_counts(), f.row_counts());
}

TEST(Psi, RequiresColumnClass) {
  auto f = Filling(delta(3), {{1, 1}, {2, 1}});
  EXPECT_THROW(psi(f), NotColumnClass);
  EXPECT_THROW(phi(f), NotColumnClass);
}

TEST(Upsilon, GoldenFixture) {
  auto t = load_shape("insertion_shape.txt");
  auto cs = load_comps("insertion_comps.txt");
  const std::vector<int> m{1, 2, 2, 0, 1};
  auto f = upsilon(t, m, {2}, cs);
  EXPECT_EQ(f.ones(), load_filling("insertion_result.txt").ones());
  EXPECT_EQ(psi(f), cs);
}

TEST(Upsilon, RejectsSequencesOutsideTheCodomain) {
  auto t = load_shape("insertion_shape.txt");
  const std::vector<int> m{1, 2, 2, 0, 1};
  auto cs = load_comps("insertion_comps.txt");
  auto wrong_parts = cs;
  wrong_parts.comps[0] = {1, 0, 0};
  EXPECT_THROW(upsilon(t, m, {2}, wrong_parts), CodomainMismatch);
  auto wrong_sum = cs;
  wrong_sum.comps[0] = {2, 0};
  EXPECT_THROW(upsilon(t, m, {2}, wrong_sum), CodomainMismatch);
  auto empty_row = cs;
  empty_row.comps[3] = {1};
  EXPECT_THROW(upsilon(t, m, {2}, empty_row), CodomainMismatch);
  auto short_seq = cs;
  short_seq.comps.pop_back();
  EXPECT_THROW(upsilon(t, m, {2}, short_seq), CodomainMismatch);
}

TEST(Phi, GoldenFixture) {
  auto f = load_filling("eight_row_nine_ones.txt");
  auto g = phi(f);
  EXPECT_EQ(g.ones(), load_filling("eight_row_nine_ones_phi.txt").ones());
  EXPECT_EQ(ne2(f), 4);
  EXPECT_EQ(se2(f), 6);
  EXPECT_EQ(ne2(g), 6);
  EXPECT_EQ(se2(g), 4);
  EXPECT_EQ(phi_direct(f).ones(), g.ones());
  EXPECT_EQ(phi(g).ones(), f.ones());
}

TEST(Bijection, ExhaustiveSmallShapes) {
  long fillings = 0;
  for_each_moon_polyomino(7, [&](const MoonPolyomino& t) {
    auto shape = share(t);
    std::map<std::pair<std::vector<int>, std::set<int>>, long> bucket_sizes;
    for_each_filling(shape, ConstraintSpec::of(FillingClass::Col), [&](const Filling& f) {
      ++fillings;
      const auto m = f.row_counts();
      const auto a = empty_cols(f);
      ++bucket_sizes[{m, a}];
      auto cs = psi(f);
      ASSERT_EQ(cs.row_counts(), m);
      ASSERT_EQ(upsilon(shape, m, a, cs).ones(), f.ones());

      auto g = phi(f);
      ASSERT_EQ(phi_direct(f).ones(), g.ones());
      ASSERT_EQ(phi(g).ones(), f.ones());
      ASSERT_EQ(g.row_counts(), m);
      ASSERT_EQ(empty_cols(g), a);
      ASSERT_EQ(ne2(g), se2(f));
      ASSERT_EQ(se2(g), ne2(f));
      auto sf = row_side_counts(f), sg = row_side_counts(g);
      for (std::size_t i = 0; i < sf.size(); ++i) {
        const std::size_t k = sf[i].size();
        for (std::size_t j = 0; j < k; ++j) {
          ASSERT_EQ(sg[i][j].luc, sf[i][k - 1 - j].ruc);
          ASSERT_EQ(sg[i][j].ruc, sf[i][k - 1 - j].luc);
        }
      }
    });
    for (const auto& [key, size] : bucket_sizes) {
      long seqs = 0;
      for_each_composition_seq(t, key.first, key.second, [&](const CompositionSeq& cs) {
        ++seqs;
        ASSERT_EQ(psi(upsilon(shape, key.first, key.second, cs)), cs);
      });
      ASSERT_EQ(seqs, size);
      ASSERT_EQ(theorem_rhs_col(t, key.first, key.second).at_one(), size);
    }
  });
  EXPECT_GT(fillings, 1000);
}

TEST(Theorem, ClosedFormMatchesEnumeration) {
  for_each_moon_polyomino(7, [&](const MoonPolyomino& t) {
    auto shape = share(t);
    std::map<std::pair<std::vector<int>, std::set<int>>, DistributionBuilder> col;
    for_each_filling(shape, ConstraintSpec::of(FillingClass::Col),
                     [&](const Filling& f) { col[{f.row_counts(), empty_cols(f)}].add(f); });
    for (auto& [key, builder] : col) {
      auto d = builder.polynomial();
      ASSERT_EQ(theorem_rhs_col(t, key.first, key.second), d);
      ASSERT_TRUE(is_symmetric(d));
      // The same class seen as a row class on the quarter-turned shape.
      auto r = rotate90(t);
      ASSERT_EQ(theorem_rhs_row(r, row_counts_to_rotated_cols(key.first), key.second), d);
    }
  });
}

TEST(Theorem, RowClassOnTheShapeItself) {
  for_each_moon_polyomino(7, [&](const MoonPolyomino& t) {
    std::map<std::pair<std::vector<int>, std::set<int>>, DistributionBuilder> row;
    for_each_filling(share(t), ConstraintSpec::of(FillingClass::Row),
                     [&](const Filling& f) { row[{f.col_counts(), empty_rows(f)}].add(f); });
    for (auto& [key, builder] : row) ASSERT_EQ(theorem_rhs_row(t, key.first, key.second), builder.polynomial());
  });
}

TEST(Corollary, BothProductsMatchEnumeration) {
  for_each_moon_polyomino(7, [&](const MoonPolyomino& t) {
    std::map<std::pair<std::set<int>, std::set<int>>, DistributionBuilder> both;
    for_each_filling(share(t), ConstraintSpec::of(FillingClass::Both),
                     [&](const Filling& f) { both[{empty_cols(f), empty_rows(f)}].add(f); });
    for (auto& [key, builder] : both) {
      auto prods = corollary_products(t, key.first, key.second);
      ASSERT_EQ(prods.by_rows, builder.polynomial());
      ASSERT_EQ(prods.by_cols, builder.polynomial());
    }
  });
}

TEST(Compositions, EnumerationSkipsInfeasibleClasses) {
  auto t = load_shape("five_row_shape.txt");
  long n = 0;
  for_each_composition_seq(t, {1, 2, 1, 0, 1}, {2}, [&](const CompositionSeq&) { ++n; });
  EXPECT_EQ(n, 6);
  n = 0;
  for_each_composition_seq(t, {0, 0, 0, 0, 0}, {}, [&](const CompositionSeq&) { ++n; });
  EXPECT_EQ(n, 0);
  EXPECT_EQ(rev(CompositionSeq{{{1, 2, 3}, {0}}}), (CompositionSeq{{{3, 2, 1}, {0}}}));
}

TEST(TextFormat, CompositionSequences) {
  auto cs = load_comps("eight_row_nine_ones_psi.txt");
  std::stringstream ss;
  write_composition_seq(ss, cs);
  EXPECT_EQ(parse_composition_seq(ss), cs);
  std::istringstream bad("1 x\n");
  EXPECT_THROW(parse_composition_seq(bad), std::invalid_argument);
}
