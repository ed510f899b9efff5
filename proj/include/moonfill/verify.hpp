#pragma once

// Exhaustive verification suites. Each suite returns a VerificationReport;
// a suite passes exactly when it recorded no failures.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "moonfill/bijection.hpp"
#include "moonfill/combinatorics.hpp"
#include "moonfill/filling.hpp"
#include "moonfill/polyomino.hpp"
#include "moonfill/pqpoly.hpp"

namespace moonfill {

struct VerificationFailure {
  std::string instance;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  explicit VerificationReport(std::string name = {}) : suite(std::move(name)) {}

  std::string suite;
  std::int64_t checked = 0;
  std::int64_t failure_count = 0;
  std::vector<VerificationFailure> failures;
  std::vector<std::string> notes;
  double elapsed_seconds = 0;

  static constexpr std::size_t kMaxStoredFailures = 25;

  bool passed() const { return failure_count == 0; }

  // Counts one check; records a failure when ok is false.
  bool expect(bool ok, const std::string& instance, const std::string& expected, const std::string& actual) {
    ++checked;
    if (!ok) {
      ++failure_count;
      if (failures.size() < kMaxStoredFailures) failures.push_back({instance, expected, actual});
    }
    return ok;
  }

  bool expect_eq(const PQPolynomial& expected, const PQPolynomial& actual, const std::string& instance) {
    return expect(expected == actual, instance, to_string(expected), to_string(actual));
  }

  template <class T>
  bool expect_value(const T& expected, const T& actual, const std::string& instance) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    return expect(expected == actual, instance, e.str(), a.str());
  }
};

inline void write_text(std::ostream& os, const VerificationReport& r, bool with_timing = true) {
  os << "suite: " << r.suite << '\n';
  os << "checked: " << r.checked << '\n';
  for (auto& n : r.notes) os << "note: " << n << '\n';
  for (auto& f : r.failures)
    os << "FAIL " << f.instance << "\n  expected: " << f.expected << "\n  actual:   " << f.actual << '\n';
  if (r.failure_count > static_cast<std::int64_t>(r.failures.size()))
    os << "... " << r.failure_count - static_cast<std::int64_t>(r.failures.size()) << " more failures\n";
  os << "failures: " << r.failure_count << '\n';
  if (with_timing) os << "elapsed: " << r.elapsed_seconds << " s\n";
  os << (r.passed() ? "PASS" : "FAIL") << '\n';
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (auto& f : r.failures) failures.push_back({{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", r.suite},
          {"checked", r.checked},
          {"failure_count", r.failure_count},
          {"failures", failures},
          {"notes", r.notes},
          {"elapsed_seconds", r.elapsed_seconds},
          {"pass", r.passed()}};
}

namespace detail {

inline std::string describe(const MoonPolyomino& t) {
  std::ostringstream os;
  os << "T[";
  for (int i = 1; i <= t.n_rows(); ++i) os << (i > 1 ? "," : "") << t.row(i).lo << '-' << t.row(i).hi;
  os << ']';
  return os.str();
}

inline std::string describe(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

inline std::string describe(const std::set<int>& v) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : v) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

inline std::string describe(const Filling& f) {
  std::ostringstream os;
  os << describe(f.shape()) << " ones{";
  bool first = true;
  for (auto c : f.ones()) {
    os << (first ? "" : ",") << '(' << c.row << ',' << c.col << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

inline std::string describe(const CompositionSeq& cs) {
  std::ostringstream os;
  for (auto& c : cs.comps) os << describe(c);
  return os.str();
}

// Calls fn(m, A) for every row-count vector with m_i <= r_i and sum at most
// max_ones, and every subset A of the columns.
template <class Fn>
void for_each_col_class(const MoonPolyomino& t, int max_ones, Fn&& fn) {
  const int s = t.n_rows();
  const int cols = t.n_cols();
  for (int total = 0; total <= max_ones; ++total) {
    for_each_weak_composition(total, s, [&](const std::vector<int>& m) {
      for (int i = 1; i <= s; ++i)
        if (m[i - 1] > t.row(i).length()) return;
      for (std::uint32_t mask = 0; mask < (1u << cols); ++mask) {
        std::set<int> a;
        for (int j = 1; j <= cols; ++j)
          if (mask >> (j - 1) & 1) a.insert(j);
        fn(m, a);
      }
    });
  }
}

using ClassKey = std::pair<std::vector<int>, std::set<int>>;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Row-wise pairing of the j-th 1 of phi(F) with the (m_i + 1 - j)-th 1 of F.
inline bool side_counts_swapped(const Filling& f, const Filling& g) {
  const Coloring cf = coloring(f);
  const Coloring cg = coloring(g);
  for (int i = 1; i <= f.shape().n_rows(); ++i) {
    auto lf = f.ones_in_row(i);
    auto lg = g.ones_in_row(i);
    if (lf.size() != lg.size()) return false;
    const std::size_t m = lf.size();
    for (std::size_t j = 0; j < m; ++j) {
      auto sf = side_counts(f, cf, {i, lf[m - 1 - j]});
      auto sg = side_counts(g, cg, {i, lg[j]});
      if (sg.luc != sf.ruc || sg.ruc != sf.luc) return false;
    }
  }
  return true;
}

}  // namespace detail

// Distribution over N^c(T, m; A) against the Gaussian product, and the row
// version on the quarter-turned shape.
inline VerificationReport verify_theorem_distribution(int max_cells, int max_ones = 4) {
  detail::Stopwatch clock;
  VerificationReport rep("theorem-distribution");
  GaussianTable table;
  int shapes = 0;
  for_each_moon_polyomino(max_cells, [&](const MoonPolyomino& t) {
    ++shapes;
    auto shape = share(t);
    const MoonPolyomino rot = rotate90(t);
    const std::string name = detail::describe(t);

    std::map<detail::ClassKey, DistributionBuilder> col_buckets;
    for_each_filling(shape, ConstraintSpec::of(FillingClass::Col), [&](const Filling& f) {
      auto m = f.row_counts();
      if (std::accumulate(m.begin(), m.end(), 0) <= max_ones) col_buckets[{m, empty_cols(f)}].add(f);
    });
    std::map<detail::ClassKey, DistributionBuilder> row_buckets;
    for_each_filling(share(rot), ConstraintSpec::of(FillingClass::Row), [&](const Filling& f) {
      auto n = f.col_counts();
      if (std::accumulate(n.begin(), n.end(), 0) <= max_ones) row_buckets[{n, empty_rows(f)}].add(f);
    });

    std::size_t seen_col = 0;
    std::size_t seen_row = 0;
    detail::for_each_col_class(t, max_ones, [&](const std::vector<int>& m, const std::set<int>& a) {
      const std::string inst = name + " m=" + detail::describe(m) + " A=" + detail::describe(a);
      const PQPolynomial rhs = theorem_rhs_col(t, m, a, &table);
      PQPolynomial lhs;
      if (auto it = col_buckets.find({m, a}); it != col_buckets.end()) {
        lhs = it->second.polynomial();
        ++seen_col;
      }
      rep.expect_eq(rhs, lhs, "col " + inst);

      const auto n = row_counts_to_rotated_cols(m);
      const PQPolynomial rhs_row = theorem_rhs_row(rot, n, a, &table);
      PQPolynomial lhs_row;
      if (auto it = row_buckets.find({n, a}); it != row_buckets.end()) {
        lhs_row = it->second.polynomial();
        ++seen_row;
      }
      rep.expect_eq(rhs_row, lhs_row, "row(rotated) " + inst);
      rep.expect_eq(rhs, rhs_row, "closed forms agree under rotation " + inst);
    });
    rep.expect_value(col_buckets.size(), seen_col, "every column-class bucket visited " + name);
    rep.expect_value(row_buckets.size(), seen_row, "every row-class bucket visited " + name);
  });
  rep.notes.push_back("shapes: " + std::to_string(shapes) + " moon polyominoes with at most " +
                      std::to_string(max_cells) + " cells; classes with at most " + std::to_string(max_ones) +
                      " ones");
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

// psi/upsilon round trips, codomain cardinality and the luc/ruc partial-sum
// description on every feasible class.
inline VerificationReport verify_bijection(int max_cells, int max_ones = 4) {
  detail::Stopwatch clock;
  VerificationReport rep("bijection");
  GaussianTable table;
  for_each_moon_polyomino(max_cells, [&](const MoonPolyomino& t) {
    auto shape = share(t);
    const std::string name = detail::describe(t);
    std::map<detail::ClassKey, std::vector<Filling>> buckets;
    for_each_filling(shape, ConstraintSpec::of(FillingClass::Col), [&](const Filling& f) {
      auto m = f.row_counts();
      if (std::accumulate(m.begin(), m.end(), 0) <= max_ones) buckets[{m, empty_cols(f)}].push_back(f);
    });
    detail::for_each_col_class(t, max_ones, [&](const std::vector<int>& m, const std::set<int>& a) {
      if (!consistent_col_class(t, m, a)) return;
      const HValues hv = h_values(t, m, a);
      if (!hv.feasible(m)) return;
      const std::string inst = name + " m=" + detail::describe(m) + " A=" + detail::describe(a);
      static const std::vector<Filling> none;
      auto it = buckets.find({m, a});
      const auto& fills = it == buckets.end() ? none : it->second;

      std::set<CompositionSeq> images;
      for (const Filling& f : fills) {
        const CompositionSeq cs = psi(f);
        images.insert(cs);
        const Filling back = upsilon(shape, m, a, cs);
        rep.expect(back == f, "upsilon(psi(F)) " + detail::describe(f), detail::describe(f), detail::describe(back));
        const Coloring colors = coloring(f);
        for (int i = 1; i <= t.n_rows(); ++i) {
          auto ones = f.ones_in_row(i);
          const auto& c = cs.comps[i - 1];
          int prefix = 0;
          int total = std::accumulate(c.begin(), c.end(), 0);
          for (std::size_t j = 0; j < ones.size(); ++j) {
            prefix += c[j];
            auto sc = side_counts(f, colors, {i, ones[j]});
            rep.expect(sc.luc == prefix && sc.ruc == total - prefix,
                       "luc/ruc from compositions " + detail::describe(f) + " row " + std::to_string(i),
                       std::to_string(prefix) + "/" + std::to_string(total - prefix),
                       std::to_string(sc.luc) + "/" + std::to_string(sc.ruc));
          }
        }
      }
      rep.expect_value(fills.size(), images.size(), "psi injective " + inst);

      std::int64_t codomain = 0;
      for_each_composition_seq(t, m, a, [&](const CompositionSeq& cs) {
        ++codomain;
        const Filling f = upsilon(shape, m, a, cs);
        const CompositionSeq back = psi(f);
        rep.expect(back == cs, "psi(upsilon(c)) " + inst, detail::describe(cs), detail::describe(back));
      });
      rep.expect_value(static_cast<std::int64_t>(fills.size()), codomain, "class size vs codomain " + inst);
      rep.expect_value(BigInt(codomain), theorem_rhs_col(t, m, a, &table).at_one(), "codomain vs product " + inst);
    });
  });
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

inline VerificationReport verify_involution(int max_cells) {
  detail::Stopwatch clock;
  VerificationReport rep("involution");
  std::int64_t fillings = 0;
  for_each_moon_polyomino(max_cells, [&](const MoonPolyomino& t) {
    for_each_filling(share(t), ConstraintSpec::of(FillingClass::Col), [&](const Filling& f) {
      ++fillings;
      const std::string inst = detail::describe(f);
      const Filling g = phi(f);
      const Filling g_direct = phi_direct(f);
      rep.expect(g == g_direct, "direct description " + inst, detail::describe(g), detail::describe(g_direct));
      const Filling gg = phi(g);
      rep.expect(gg == f, "phi(phi(F)) " + inst, inst, detail::describe(gg));
      rep.expect(g.row_counts() == f.row_counts(), "row counts preserved " + inst, detail::describe(f.row_counts()),
                 detail::describe(g.row_counts()));
      rep.expect(empty_cols(g) == empty_cols(f), "empty columns preserved " + inst, detail::describe(empty_cols(f)),
                 detail::describe(empty_cols(g)));
      auto a = chain_pairs(f);
      auto b = chain_pairs(g);
      rep.expect(a.ne2 == b.se2 && a.se2 == b.ne2, "(ne2, se2) swapped " + inst,
                 std::to_string(a.se2) + "," + std::to_string(a.ne2), std::to_string(b.ne2) + "," + std::to_string(b.se2));
      rep.expect(detail::side_counts_swapped(f, g), "luc/ruc swapped " + inst, "swapped", "not swapped");
    });
  });
  rep.notes.push_back("fillings: " + std::to_string(fillings));
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

inline VerificationReport verify_lemma_compositions(int max_n) {
  detail::Stopwatch clock;
  VerificationReport rep("lemma-compositions");
  for (int n = 0; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) {
      const std::string inst = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const PQPolynomial g = gaussian(n, k);
      rep.expect_eq(g, composition_sum(n - k, k), "composition sum " + inst);
      rep.expect_eq(g, gaussian_recurrence(n, k), "recurrence " + inst);
    }
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

// Fillings of the staircase on [n] with C(n,4) descents number 2^n and
// those with C(n,4) ascents number 16.
inline VerificationReport verify_delta_counts(int max_n) {
  detail::Stopwatch clock;
  VerificationReport rep("delta-counts");
  for (int n = 5; n <= max_n; ++n) {
    const int target = n * (n - 1) * (n - 2) * (n - 3) / 24;
    std::int64_t total = 0;
    std::int64_t descents = 0;
    std::int64_t ascents = 0;
    std::map<int, std::int64_t> ne_hist, se_hist;
    for_each_filling(share(delta(n)), ConstraintSpec::of(FillingClass::All), [&](const Filling& f) {
      auto c = chain_pairs(f);
      ++total;
      if (c.se2 == target) ++descents;
      if (c.ne2 == target) ++ascents;
      ++ne_hist[c.ne2];
      ++se_hist[c.se2];
    });
    const std::string inst = "delta(" + std::to_string(n) + ")";
    rep.expect_value(std::int64_t{1} << (n * (n - 1) / 2), total, inst + " fillings");
    rep.expect_value(std::int64_t{1} << n, descents, inst + " fillings with " + std::to_string(target) + " descents");
    rep.expect_value(std::int64_t{16}, ascents, inst + " fillings with " + std::to_string(target) + " ascents");
    rep.expect(ne_hist != se_hist, inst + " ne2 and se2 not equidistributed", "different", "equal");
    rep.notes.push_back(inst + ": " + std::to_string(total) + " fillings, " + std::to_string(descents) + " with " +
                        std::to_string(target) + " descents, " + std::to_string(ascents) + " with " +
                        std::to_string(target) + " ascents");
  }
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

inline std::int64_t catalan(int n) {
  std::int64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Noncrossing and nonnesting counts for matchings on [2n], n <= max_n, and
// for set partitions of [n], n <= max_n + 3.
inline VerificationReport verify_catalan(int max_n) {
  detail::Stopwatch clock;
  VerificationReport rep("catalan");
  std::string seq;
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t nc = 0, nn = 0;
    for_each_matching(2 * n, [&](const SetPartition& m) {
      auto c = arc_pairs(standard_repr(m));
      nc += c.cros2 == 0;
      nn += c.nest2 == 0;
    });
    rep.expect_value(catalan(n), nc, "noncrossing matchings of [" + std::to_string(2 * n) + "]");
    rep.expect_value(catalan(n), nn, "nonnesting matchings of [" + std::to_string(2 * n) + "]");
    seq += (n > 1 ? "," : "") + std::to_string(nc);
  }
  rep.notes.push_back("noncrossing matchings: " + seq);
  seq.clear();
  for (int n = 1; n <= max_n + 3; ++n) {
    std::int64_t nc = 0, nn = 0;
    for_each_set_partition(n, [&](const SetPartition& p) {
      auto c = arc_pairs(standard_repr(p));
      nc += c.cros2 == 0;
      nn += c.nest2 == 0;
    });
    rep.expect_value(catalan(n), nc, "noncrossing partitions of [" + std::to_string(n) + "]");
    rep.expect_value(catalan(n), nn, "nonnesting partitions of [" + std::to_string(n) + "]");
    seq += (n > 1 ? "," : "") + std::to_string(nc);
  }
  rep.notes.push_back("noncrossing partitions: " + seq);
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

inline VerificationReport verify_matchings_symmetry(int max_n) {
  detail::Stopwatch clock;
  VerificationReport rep("matchings-symmetry");
  for (int n = 1; n <= max_n; ++n) {
    DistributionBuilder joint;
    std::map<int, std::int64_t> cros_hist, nest_hist;
    for_each_matching(2 * n, [&](const SetPartition& m) {
      auto c = arc_pairs(standard_repr(m));
      joint.add(c.cros2, c.nest2);
      ++cros_hist[c.cros2];
      ++nest_hist[c.nest2];
    });
    const std::string inst = "matchings of [" + std::to_string(2 * n) + "]";
    rep.expect(cros_hist == nest_hist, inst + " cros2 and nest2 equidistributed", "equal", "different");
    const PQPolynomial d = joint.polynomial();
    rep.expect_eq(swap_pq(d), d, inst + " joint distribution symmetric");
    if (n <= 3) rep.notes.push_back(inst + ": " + to_string(d));
  }
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

// Joint symmetry over each P_n(S, T), the product formulas for it, and the
// symmetry of (cros_max, nest_max).
inline VerificationReport verify_partitions_symmetry(int max_n) {
  detail::Stopwatch clock;
  VerificationReport rep("partitions-symmetry");
  // Candidate product forms, each evaluated on every nonempty class.
  struct Candidate {
    std::string name;
    std::function<PQPolynomial(const Multiset&, const Multiset&)> product;
    std::int64_t matched = 0;
  };
  auto over = [](bool closers, bool low) {
    return [closers, low](const Multiset& s, const Multiset& t) {
      PQPolynomial out = 1;
      for (int i : closers ? t : s) out *= pq_integer(low ? h_low(s, t, i) : h_high(s, t, i));
      return out;
    };
  };
  std::vector<Candidate> first{{"prod over T of [h_i]", over(true, true)}, {"prod over S of [h_i]", over(false, true)}};
  std::vector<Candidate> second{{"prod over T of [h'_i]", over(true, false)},
                                {"prod over S of [h'_i]", over(false, false)}};
  std::int64_t classes = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::map<std::pair<Multiset, Multiset>, std::vector<SimpleGraph>> buckets;
    for_each_set_partition(n, [&](const SetPartition& p) {
      SimpleGraph g = standard_repr(p);
      auto key = std::make_pair(g.left(), g.right());
      buckets[key].push_back(std::move(g));
    });
    for (const auto& [key, graphs] : buckets) {
      ++classes;
      const auto& [s, t] = key;
      const std::string inst = "n=" + std::to_string(n) + " S=" + detail::describe(s) + " T=" + detail::describe(t);
      const PQPolynomial d = cros_nest_distribution(graphs);
      rep.expect_eq(swap_pq(d), d, "(cros2, nest2) symmetric " + inst);
      for (auto* list : {&first, &second})
        for (auto& c : *list) c.matched += c.product(s, t) == d;
      DistributionBuilder maxima;
      for (auto& g : graphs) maxima.add(cros_max(g), nest_max(g));
      const PQPolynomial dm = maxima.polynomial();
      rep.expect_eq(swap_pq(dm), dm, "(cros_max, nest_max) symmetric " + inst);
    }
  }
  for (auto* list : {&first, &second}) {
    bool any = false;
    for (auto& c : *list) {
      rep.notes.push_back(c.name + ": matches " + std::to_string(c.matched) + " of " + std::to_string(classes) +
                          " classes");
      any = any || c.matched == classes;
    }
    rep.expect(any, "some product form matches every class (" + list->front().name + " / " + list->back().name + ")",
               std::to_string(classes), "no candidate matched all");
  }
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

// Product formulas over G_n(S, T) under the multiplicity-one hypotheses, and
// over linked partitions.
inline VerificationReport verify_linked_partitions(int max_n) {
  detail::Stopwatch clock;
  VerificationReport rep("linked-partitions");
  std::int64_t by_closers = 0, by_openers = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::map<std::pair<Multiset, Multiset>, std::vector<SimpleGraph>> buckets;
    for_each_graph(n, [&](const SimpleGraph& g) { buckets[{g.left(), g.right()}].push_back(g); });
    for (const auto& [key, graphs] : buckets) {
      const auto& [s, t] = key;
      const std::string inst = "n=" + std::to_string(n) + " S=" + detail::describe(s) + " T=" + detail::describe(t);
      const PQPolynomial d = cros_nest_distribution(graphs);
      if (all_distinct(s)) {
        ++by_closers;
        rep.expect_eq(graph_product_by_closers(s, t), d, "graphs, S without repeats " + inst);
        rep.expect_eq(swap_pq(d), d, "graphs symmetric " + inst);
      }
      if (all_distinct(t)) {
        ++by_openers;
        rep.expect_eq(graph_product_by_openers(s, t), d, "graphs, T without repeats " + inst);
        rep.expect_eq(swap_pq(d), d, "graphs symmetric " + inst);
      }
    }

    std::map<std::pair<Multiset, Multiset>, std::vector<SimpleGraph>> lp_buckets;
    std::int64_t count = 0;
    for_each_linked_partition(n, [&](const LinkedPartition& pi) {
      ++count;
      SimpleGraph g = linear_repr(pi);
      rep.expect(all_distinct(g.right()), "right endpoints distinct " + to_string(pi), "distinct", "repeated");
      rep.expect(linked_partition_of(g) == pi, "linear representation inverts " + to_string(pi), to_string(pi),
                 to_string(linked_partition_of(g)));
      auto key = std::make_pair(g.left(), g.right());
      lp_buckets[key].push_back(std::move(g));
    });
    std::int64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    rep.expect_value(fact, count, "linked partitions of [" + std::to_string(n) + "]");
    for (const auto& [key, graphs] : lp_buckets) {
      const auto& [s, t] = key;
      const std::string inst = "n=" + std::to_string(n) + " S=" + detail::describe(s) + " T=" + detail::describe(t);
      const PQPolynomial d = cros_nest_distribution(graphs);
      rep.expect_eq(graph_product_by_openers(s, t), d, "linked partitions " + inst);
      rep.expect_eq(swap_pq(d), d, "linked partitions symmetric " + inst);
    }
  }
  rep.notes.push_back("graph classes with S without repeats: " + std::to_string(by_closers) +
                      ", with T without repeats: " + std::to_string(by_openers));
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

namespace detail {

using TripleDistribution = std::map<std::tuple<int, int, int>, std::int64_t>;

inline TripleDistribution size_ne_se(const MoonPolyomino& t, FillingClass cls) {
  TripleDistribution out;
  for_each_filling(share(t), ConstraintSpec::of(cls), [&](const Filling& f) {
    auto c = chain_pairs(f);
    ++out[{static_cast<int>(f.size()), c.ne2, c.se2}];
  });
  return out;
}

inline std::string describe(const TripleDistribution& d) {
  std::ostringstream os;
  for (auto& [k, v] : d) os << '(' << std::get<0>(k) << ',' << std::get<1>(k) << ',' << std::get<2>(k) << "):" << v << ' ';
  return os.str();
}

inline std::map<std::pair<int, int>, std::int64_t> size_ne_max(const MoonPolyomino& t) {
  std::map<std::pair<int, int>, std::int64_t> out;
  for_each_filling(share(t), ConstraintSpec::of(FillingClass::All),
                   [&](const Filling& f) { ++out[{static_cast<int>(f.size()), ne_max(f)}]; });
  return out;
}

}  // namespace detail

// (|F|, ne2, se2) is invariant under row permutations that give a moon
// polyomino, over N^c and over N.
inline VerificationReport verify_row_permutation(int max_cells) {
  detail::Stopwatch clock;
  VerificationReport rep("row-permutation");
  std::int64_t pairs = 0;
  for_each_moon_polyomino(max_cells, [&](const MoonPolyomino& t) {
    auto perms = row_permutations(t);
    if (perms.size() < 2) return;
    const auto col = detail::size_ne_se(t, FillingClass::Col);
    const auto both = detail::size_ne_se(t, FillingClass::Both);
    for (const auto& other : perms) {
      if (other == t) continue;
      ++pairs;
      const std::string inst = detail::describe(t) + " vs " + detail::describe(other);
      auto oc = detail::size_ne_se(other, FillingClass::Col);
      rep.expect(oc == col, "column class " + inst, detail::describe(col), detail::describe(oc));
      auto ob = detail::size_ne_se(other, FillingClass::Both);
      rep.expect(ob == both, "both class " + inst, detail::describe(both), detail::describe(ob));
    }
  });
  rep.notes.push_back("shape pairs: " + std::to_string(pairs));
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

// (|F|, ne_max) over all 01-fillings is invariant under column permutations
// that give a moon polyomino.
inline VerificationReport verify_rubey(int max_cells) {
  detail::Stopwatch clock;
  VerificationReport rep("rubey-eq13");
  std::int64_t pairs = 0;
  for_each_moon_polyomino(max_cells, [&](const MoonPolyomino& t) {
    auto perms = col_permutations(t);
    if (perms.size() < 2) return;
    const auto base = detail::size_ne_max(t);
    for (const auto& other : perms) {
      if (other == t) continue;
      ++pairs;
      rep.expect(detail::size_ne_max(other) == base,
                 "(|F|, ne_max) " + detail::describe(t) + " vs " + detail::describe(other), "equal", "different");
    }
  });
  rep.notes.push_back("shape pairs: " + std::to_string(pairs));
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

// Convex shapes that are not intersection-free, and unrestricted fillings,
// break the symmetry.
inline VerificationReport verify_counterexamples() {
  detail::Stopwatch clock;
  VerificationReport rep("counterexamples");
  const std::vector<Interval> rows{{2, 3}, {1, 3}, {1, 2}};
  ShapeError kind = ShapeError::EmptyOrOutOfRange;
  bool rejected = false;
  try {
    MoonPolyomino::validate(rows, 3);
  } catch (const ShapeException& e) {
    rejected = true;
    kind = e.kind();
  }
  rep.expect(rejected && kind == ShapeError::NotIntersectionFree, "shape rejected without the non-moon flag",
             "NotIntersectionFree", rejected ? to_string(kind) : "accepted");
  auto t = share(MoonPolyomino::validate(rows, 3, true));
  ConstraintSpec spec = ConstraintSpec::of(FillingClass::Col);
  spec.row_counts = std::vector<int>{1, 1, 1};
  const PQPolynomial one_each = distribution_of(t, spec);
  rep.expect_eq(parse_pqpoly("p^2 + 2*q"), one_each, "one 1 in each row, column class");
  rep.expect(!is_symmetric(one_each), "one 1 in each row is not symmetric", "not symmetric", "symmetric");
  spec = ConstraintSpec::of(FillingClass::Both);
  spec.total_ones = 3;
  const PQPolynomial both = distribution_of(t, spec);
  rep.expect_eq(one_each, both, "three 1s, at most one per row and column");
  for (auto cls : {FillingClass::Col, FillingClass::Both}) {
    const PQPolynomial d = distribution_of(t, ConstraintSpec::of(cls));
    const std::string label = cls == FillingClass::Col ? "column class" : "row and column class";
    rep.expect(!is_symmetric(d), label + " is not symmetric", "not symmetric", to_string(d));
    rep.notes.push_back(label + ": " + to_string(d));
  }
  rep.notes.push_back("one 1 in each row: " + to_string(one_each));
  VerificationReport delta = verify_delta_counts(5);
  rep.checked += delta.checked;
  rep.failure_count += delta.failure_count;
  for (auto& f : delta.failures) rep.failures.push_back(f);
  for (auto& n : delta.notes) rep.notes.push_back(n);
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

// Graphs on [n] against their staircase fillings.
inline VerificationReport verify_correspondence(int max_n) {
  detail::Stopwatch clock;
  VerificationReport rep("correspondence");
  for (int n = 2; n <= max_n; ++n)
    for_each_graph(n, [&](const SimpleGraph& g) {
      std::ostringstream os;
      write_graph(os, g);
      std::string inst = os.str();
      std::replace(inst.begin(), inst.end(), '\n', ' ');
      const Filling f = graph_to_filling(g);
      rep.expect(filling_to_graph(f) == g, "round trip " + inst, "same graph", "different graph");
      rep.expect(stat_transport_check(g), "statistics transported " + inst, "true", "false");
    });
  rep.elapsed_seconds = clock.seconds();
  return rep;
}

struct SuiteInfo {
  std::string name;
  int default_max_size;
  std::string description;
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all{
      {"theorem-distribution", 10, "distribution over N^c(T,m;A) vs Gaussian product, shapes up to max-size cells"},
      {"involution", 10, "phi properties on N^c(T), shapes up to max-size cells"},
      {"bijection", 10, "psi/upsilon round trips, shapes up to max-size cells"},
      {"lemma-compositions", 8, "composition sum vs Gaussian coefficient, n up to max-size"},
      {"delta-counts", 6, "extreme ascent/descent counts on delta(n), 5 <= n <= max-size"},
      {"catalan", 5, "noncrossing/nonnesting counts, matchings of [2n] n <= max-size, partitions n <= max-size+3"},
      {"matchings-symmetry", 5, "cros2/nest2 over matchings of [2n], n <= max-size"},
      {"partitions-symmetry", 7, "symmetry and product forms over P_n(S,T), n <= max-size"},
      {"linked-partitions", 6, "product forms over G_n(S,T) and linked partitions, n <= max-size"},
      {"row-permutation", 9, "row permutations of shapes up to max-size cells"},
      {"rubey-eq13", 9, "(|F|, ne_max) under column permutations, shapes up to max-size cells"},
      {"counterexamples", 0, "non-intersection-free shape and unrestricted staircase fillings"},
      {"correspondence", 6, "graphs on [n] vs staircase fillings, n <= max-size"},
  };
  return all;
}

inline const SuiteInfo* find_suite(const std::string& name) {
  for (auto& s : suites())
    if (s.name == name) return &s;
  return nullptr;
}

// max_size < 0 selects the suite default. Throws std::invalid_argument for
// an unknown suite name.
inline VerificationReport run_suite(const std::string& name, int max_size = -1) {
  const SuiteInfo* info = find_suite(name);
  if (!info) throw std::invalid_argument("unknown suite '" + name + "'");
  const int k = max_size < 0 ? info->default_max_size : max_size;
  if (name == "theorem-distribution") return verify_theorem_distribution(k);
  if (name == "involution") return verify_involution(k);
  if (name == "bijection") return verify_bijection(k);
  if (name == "lemma-compositions") return verify_lemma_compositions(k);
  if (name == "delta-counts") return verify_delta_counts(k);
  if (name == "catalan") return verify_catalan(k);
  if (name == "matchings-symmetry") return verify_matchings_symmetry(k);
  if (name == "partitions-symmetry") return verify_partitions_symmetry(k);
  if (name == "linked-partitions") return verify_linked_partitions(k);
  if (name == "row-permutation") return verify_row_permutation(k);
  if (name == "rubey-eq13") return verify_rubey(k);
  if (name == "counterexamples") return verify_counterexamples();
  return verify_correspondence(k);
}

}  // namespace moonfill
