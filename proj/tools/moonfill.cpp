// moonfill: validate shapes, compute filling statistics and distributions,
// apply psi / upsilon / phi and run the verification suites.
//
// Exit codes: 0 success, 1 invalid shape or failed verification, 2 usage,
// I/O or parse error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "moonfill/bijection.hpp"
#include "moonfill/filling.hpp"
#include "moonfill/polyomino.hpp"
#include "moonfill/pqpoly.hpp"
#include "moonfill/verify.hpp"

namespace {

using namespace moonfill;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

// "1,2,0" -> {1, 2, 0}; "" and "none" give the empty list.
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "none") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("bad integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::set<int> parse_int_set(const std::string& text) {
  auto v = parse_int_list(text);
  return {v.begin(), v.end()};
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string join(const std::set<int>& s) { return join(std::vector<int>(s.begin(), s.end())); }

std::string order_string(const std::vector<int>& order, char prefix) {
  std::ostringstream os;
  for (std::size_t i = 0; i < order.size(); ++i) os << (i ? " < " : "") << prefix << order[i];
  return os.str();
}

int cmd_validate(const std::string& path, bool allow_non_moon) {
  auto in = open_input(path);
  Filling f = parse_filling(in, allow_non_moon);
  const MoonPolyomino& t = f.shape();
  std::cout << (t.is_moon() ? "valid moon polyomino" : "valid convex polyomino (not a moon polyomino)") << '\n';
  std::cout << "rows " << t.n_rows() << " columns " << t.n_cols() << " cells " << t.cell_count() << '\n';
  std::cout << "r(T)=(" << join(t.row_lengths()) << ")\n";
  std::cout << "c(T)=(" << join(t.col_lengths()) << ")\n";
  if (t.is_moon()) {
    std::cout << "Up rows 1.." << t.i0() << ", Low rows " << t.i0() + 1 << ".." << t.n_rows() << '\n';
    std::cout << "Left columns 1.." << t.j0() << ", Right columns " << t.j0() + 1 << ".." << t.n_cols() << '\n';
    std::cout << "row order: " << order_string(row_order(t), 'R') << '\n';
    std::cout << "column order: " << order_string(col_order(t), 'C') << '\n';
  }
  return kOk;
}

int cmd_stats(const std::string& path, bool allow_non_moon) {
  auto in = open_input(path);
  Filling f = parse_filling(in, allow_non_moon);
  const auto pairs = chain_pairs(f);
  const auto flags = class_of(f);
  std::cout << "ones " << f.size() << '\n';
  std::cout << "ne2 " << pairs.ne2 << '\n';
  std::cout << "se2 " << pairs.se2 << '\n';
  std::cout << "ne_max " << ne_max(f) << '\n';
  std::cout << "se_max " << se_max(f) << '\n';
  std::cout << "ER {" << join(empty_rows(f)) << "}\n";
  std::cout << "EC {" << join(empty_cols(f)) << "}\n";
  std::cout << "column class " << (flags.in_col_class ? "yes" : "no") << '\n';
  std::cout << "row class " << (flags.in_row_class ? "yes" : "no") << '\n';
  std::cout << "row and column class " << (flags.in_both ? "yes" : "no") << '\n';
  return kOk;
}

struct DistOptions {
  std::string path;
  std::string cls = "all";
  std::optional<std::string> m, n, a, b;
  std::optional<int> k;
  bool allow_non_moon = false;
};

int cmd_dist(const DistOptions& o) {
  auto in = open_input(o.path);
  Filling input = parse_filling(in, o.allow_non_moon);
  const MoonPolyomino& t = input.shape();
  ConstraintSpec spec;
  if (o.cls == "all") {
    spec.cls = FillingClass::All;
  } else if (o.cls == "col") {
    spec.cls = FillingClass::Col;
  } else if (o.cls == "row") {
    spec.cls = FillingClass::Row;
  } else if (o.cls == "both") {
    spec.cls = FillingClass::Both;
  } else {
    throw UsageError("unknown class '" + o.cls + "' (all, col, row, both)");
  }
  if (o.m) spec.row_counts = parse_int_list(*o.m);
  if (o.n) spec.col_counts = parse_int_list(*o.n);
  if (o.a) spec.empty_cols = parse_int_set(*o.a);
  if (o.b) spec.empty_rows = parse_int_set(*o.b);
  spec.total_ones = o.k;

  const PQPolynomial lhs = distribution_of(input.shape_ptr(), spec);
  std::optional<PQPolynomial> rhs;
  std::optional<PQPolynomial> rhs_alt;
  if (t.is_moon()) {
    if (spec.cls == FillingClass::Col && spec.row_counts && spec.empty_cols && !spec.col_counts && !spec.empty_rows &&
        !spec.total_ones)
      rhs = theorem_rhs_col(t, *spec.row_counts, *spec.empty_cols);
    if (spec.cls == FillingClass::Row && spec.col_counts && spec.empty_rows && !spec.row_counts && !spec.empty_cols &&
        !spec.total_ones)
      rhs = theorem_rhs_row(t, *spec.col_counts, *spec.empty_rows);
    if (spec.cls == FillingClass::Both && spec.empty_cols && spec.empty_rows && !spec.row_counts &&
        !spec.col_counts && !spec.total_ones) {
      // Every nonempty row and column holds exactly one 1.
      if (t.n_rows() - spec.empty_rows->size() == t.n_cols() - spec.empty_cols->size()) {
        auto c = corollary_products(t, *spec.empty_cols, *spec.empty_rows);
        rhs = c.by_rows;
        rhs_alt = c.by_cols;
      } else {
        rhs = PQPolynomial();
      }
    }
  }
  std::cout << to_string(lhs);
  bool agree = true;
  if (rhs) {
    agree = *rhs == lhs && (!rhs_alt || *rhs_alt == lhs);
    std::cout << "  " << (agree ? "AGREE" : "DISAGREE");
  }
  if (!is_symmetric(lhs)) std::cout << "  NOT SYMMETRIC";
  std::cout << '\n';
  if (rhs && !agree) {
    std::cout << "closed form: " << to_string(*rhs) << '\n';
    if (rhs_alt) std::cout << "column form: " << to_string(*rhs_alt) << '\n';
  }
  return agree ? kOk : kFailure;
}

void emit(const std::optional<std::string>& out_path, const std::function<void(std::ostream&)>& write) {
  if (!out_path) {
    write(std::cout);
    return;
  }
  std::ofstream out(*out_path);
  if (!out) throw UsageError("cannot write '" + *out_path + "'");
  write(out);
}

int cmd_psi(const std::string& path, const std::optional<std::string>& out) {
  auto in = open_input(path);
  const Filling f = parse_filling(in);
  const CompositionSeq cs = psi(f);
  emit(out, [&](std::ostream& os) { write_composition_seq(os, cs); });
  return kOk;
}

int cmd_upsilon(const std::string& shape_path, const std::string& comps_path, const std::string& m_text,
                const std::string& a_text, const std::optional<std::string>& out) {
  auto shape_in = open_input(shape_path);
  const MoonPolyomino t = parse_polyomino(shape_in);
  auto comps_in = open_input(comps_path);
  const CompositionSeq cs = parse_composition_seq(comps_in);
  const Filling f = upsilon(t, parse_int_list(m_text), parse_int_set(a_text), cs);
  emit(out, [&](std::ostream& os) { write_filling(os, f); });
  return kOk;
}

int cmd_phi(const std::string& path, const std::optional<std::string>& out) {
  auto in = open_input(path);
  const Filling f = parse_filling(in);
  const Filling g = phi(f);
  const auto before = chain_pairs(f);
  const auto after = chain_pairs(g);
  std::ostringstream swap;
  swap << "(ne2, se2): (" << before.ne2 << ", " << before.se2 << ") -> (" << after.ne2 << ", " << after.se2 << ")";
  if (out) {
    emit(out, [&](std::ostream& os) { write_filling(os, g); });
    std::cout << swap.str() << '\n';
  } else {
    write_filling(std::cout, g);
    std::cout << "# " << swap.str() << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& suite, int max_size, const std::string& format) {
  if (format != "text" && format != "json") throw UsageError("unknown format '" + format + "' (text, json)");
  std::vector<std::string> names;
  if (suite == "all") {
    for (auto& s : suites()) names.push_back(s.name);
  } else {
    if (!find_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
    names.push_back(suite);
  }
  bool all_pass = true;
  nlohmann::json reports = nlohmann::json::array();
  for (auto& name : names) {
    const VerificationReport r = run_suite(name, suite == "all" ? -1 : max_size);
    all_pass = all_pass && r.passed();
    if (format == "json") {
      reports.push_back(to_json(r));
    } else {
      write_text(std::cout, r);
      if (names.size() > 1) std::cout << '\n';
    }
  }
  if (format == "json") std::cout << (names.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  return all_pass ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moon polyomino fillings: statistics, distributions, bijections and verification"};
  app.require_subcommand(1);

  std::string file;
  bool allow_non_moon = false;

  auto* validate = app.add_subcommand("validate", "check a shape or filling file and summarize the shape");
  validate->add_option("file", file, "shape or filling file")->required();
  validate->add_flag("--allow-non-moon", allow_non_moon, "accept convex shapes that are not intersection-free");

  auto* stats = app.add_subcommand("stats", "statistics of a filling");
  stats->add_option("file", file, "filling file")->required();
  stats->add_flag("--allow-non-moon", allow_non_moon, "accept convex shapes that are not intersection-free");

  DistOptions dist_opts;
  auto* dist = app.add_subcommand("dist", "joint (ne2, se2) distribution over a class of fillings");
  dist->add_option("file", dist_opts.path, "shape file")->required();
  dist->add_option("--class", dist_opts.cls, "all, col, row or both")->capture_default_str();
  dist->add_option("--m", dist_opts.m, "1s per row, comma separated");
  dist->add_option("--n", dist_opts.n, "1s per column, comma separated");
  dist->add_option("--A", dist_opts.a, "empty columns, comma separated ('none' for the empty set)");
  dist->add_option("--B", dist_opts.b, "empty rows, comma separated ('none' for the empty set)");
  dist->add_option("--k", dist_opts.k, "total number of 1s");
  dist->add_flag("--allow-non-moon", dist_opts.allow_non_moon, "accept convex shapes that are not intersection-free");

  std::optional<std::string> out_path;
  auto* psi_cmd = app.add_subcommand("psi", "composition sequence of a column-class filling");
  psi_cmd->add_option("file", file, "filling file")->required();
  psi_cmd->add_option("-o,--output", out_path, "output file");

  std::string comps_path, m_text, a_text;
  auto* upsilon_cmd = app.add_subcommand("upsilon", "filling from a composition sequence");
  upsilon_cmd->add_option("file", file, "shape file")->required();
  upsilon_cmd->add_option("--comps", comps_path, "composition sequence file")->required();
  upsilon_cmd->add_option("--m", m_text, "1s per row, comma separated")->required();
  upsilon_cmd->add_option("--A", a_text, "empty columns, comma separated ('none' for the empty set)");
  upsilon_cmd->add_option("-o,--output", out_path, "output file");

  auto* phi_cmd = app.add_subcommand("phi", "apply the involution exchanging ne2 and se2");
  phi_cmd->add_option("file", file, "filling file")->required();
  phi_cmd->add_option("-o,--output", out_path, "output file");

  std::string suite;
  int max_size = -1;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite_help = "suite name or 'all':";
  for (auto& s : suites()) suite_help += "\n  " + s.name + " (default max-size " + std::to_string(s.default_max_size) + ")";
  verify->add_option("--suite", suite, suite_help)->required();
  verify->add_option("--max-size", max_size, "size bound; the suite default when omitted");
  verify->add_option("--format", format, "text or json")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(file, allow_non_moon);
    if (*stats) return cmd_stats(file, allow_non_moon);
    if (*dist) return cmd_dist(dist_opts);
    if (*psi_cmd) return cmd_psi(file, out_path);
    if (*upsilon_cmd) return cmd_upsilon(file, comps_path, m_text, a_text, out_path);
    if (*phi_cmd) return cmd_phi(file, out_path);
    if (*verify) return cmd_verify(suite, max_size, format);
  } catch (const ShapeException& e) {
    std::cerr << "invalid shape: " << e.what() << '\n';
    return kFailure;
  } catch (const NotColumnClass& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
