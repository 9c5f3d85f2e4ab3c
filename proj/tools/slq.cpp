// slq: command-line front-end.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "slq/chern.hpp"
#include "slq/connection.hpp"
#include "slq/projectors.hpp"
#include "slq/serialize.hpp"
#include "slq/suites.hpp"
#include "slq/textio.hpp"

namespace {

using namespace slq;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
  std::string format = "plain";
  std::string output;
  std::uint64_t seed = SuiteBounds{}.seed;
  int max_winding = SuiteBounds{}.max_winding;
  int max_degree = SuiteBounds{}.max_degree;

  Format fmt() const {
    if (format == "latex") return Format::latex;
    if (format == "json") return Format::json;
    return Format::plain;
  }
};

std::string side_name(Side s) { return s == Side::left ? "left" : "right"; }

std::string render_matrix(const AlgebraMatrix& m, Format f) {
  std::ostringstream out;
  if (f == Format::latex) {
    out << "\\begin{pmatrix}\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << "  ";
      for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " & " : "") << print_algebra(m.at(r, c), f);
      out << (r + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    out << "\\end{pmatrix}\n";
    return out.str();
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << print_algebra(m.at(r, c));
    out << "]\n";
  }
  return out.str();
}

std::string render_report(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.range << "]\n";
    if (c.counterexample) out << "  counterexample: " << *c.counterexample << "\n";
    if (c.note) out << "  note: " << *c.note << "\n";
  }
  out << r.suite() << ": " << (r.passed() ? "passed" : "FAILED") << " (" << r.checks().size() << " checks)\n";
  return out.str();
}

std::string render_pairings(const std::vector<PairingResult>& rows, Format f) {
  std::ostringstream out;
  if (f == Format::latex) out << "\\begin{tabular}{rrl}\nn & side & value \\\\\n";
  else out << "n\tside\tvalue\n";
  for (const auto& p : rows) {
    if (f == Format::latex)
      out << p.winding << " & " << side_name(p.side) << " & $" << print_scalar(p.value, f) << "$ \\\\\n";
    else
      out << p.winding << "\t" << side_name(p.side) << "\t" << print_scalar(p.value) << "\n";
  }
  if (f == Format::latex) out << "\\end{tabular}\n";
  return out.str();
}

std::string render_vector(const std::vector<AlgebraElement>& v, Format f) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + print_algebra(v[i], f);
  return out + ")";
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw std::invalid_argument("cannot open output file " + o.output);
  file << text;
}

std::string with_newline(std::string s) { return s.empty() || s.back() != '\n' ? s + "\n" : s; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the quantum Hopf fibration over the standard Podles sphere"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "latex", "json"}));
  app.add_option("--output", o.output, "Write output to a file");
  app.add_option("--seed", o.seed, "Seed for random property tests");
  app.add_option("--max-winding", o.max_winding, "Largest |n| checked by verify")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", o.max_degree, "Largest monomial degree checked by verify")->check(CLI::PositiveNumber);

  std::string expr;
  auto* normalize = app.add_subcommand("normalize", "Print the PBW normal form of an expression");
  normalize->add_option("expr", expr, "Expression in a, b, c, d, q")->required();

  int n = 0;
  std::string side = "left";
  bool verify_flag = false;
  auto* projector = app.add_subcommand("projector", "Print the projector e_n (left) or f_n (right)");
  projector->add_option("-n", n, "Winding number")->allow_extra_args(false);
  projector->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));
  projector->add_flag("--verify", verify_flag, "Append idempotency and coinvariance checks");

  std::optional<int> chern_n, from, to;
  auto* chern = app.add_subcommand("chern", "Chern-Connes pairing of e_n and f_n");
  chern->add_option("-n", chern_n, "Single winding number");
  chern->add_option("--from", from, "First winding number");
  chern->add_option("--to", to, "Last winding number");

  std::string suite;
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
  verify->add_flag("--inject-fault", inject_fault, "Perturb e_n to exercise the failure path");

  int factor_n = 0;
  auto* factor = app.add_subcommand("factor", "Rank-one factors u, v with e_n = u v^T");
  factor->add_option("-n", factor_n, "Winding number");

  std::string split_expr;
  auto* splitting = app.add_subcommand("splitting", "Print s, s~ and s^ of an expression");
  splitting->add_option("expr", split_expr, "Expression in a, b, c, d, q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  const Format f = o.fmt();
  try {
    if (*normalize) {
      const AlgebraElement x = parse_algebra(expr);
      emit(o, f == Format::json ? element_json(x).dump(2) + "\n" : print_algebra(x, f) + "\n");
      return exit_ok;
    }
    if (*projector) {
      const Side s = side == "left" ? Side::left : Side::right;
      const AlgebraMatrix m = s == Side::left ? build_e(n) : build_f(n);
      const std::string label = (s == Side::left ? "e_" : "f_") + std::to_string(n);
      VerificationReport report("projector");
      if (verify_flag) {
        report.merge(verify_idempotent(m, label));
        report.merge(verify_coinvariant_entries(m, label));
      }
      if (f == Format::json) {
        Json doc = matrix_json(m);
        if (verify_flag) doc["verification"] = report_json(report);
        emit(o, doc.dump(2) + "\n");
      } else {
        emit(o, render_matrix(m, f) + (verify_flag ? render_report(report) : ""));
      }
      return report.passed() ? exit_ok : exit_failed;
    }
    if (*chern) {
      int lo = 0, hi = 0;
      if (chern_n) {
        lo = hi = *chern_n;
      } else if (from && to) {
        lo = *from;
        hi = *to;
      } else {
        std::cerr << "chern: give -n N or both --from and --to\n";
        return exit_usage;
      }
      if (lo > hi) {
        std::cerr << "chern: --from must not exceed --to\n";
        return exit_usage;
      }
      const auto rows = chern_scan(lo, hi);
      emit(o, f == Format::json ? serialize_report(rows) + "\n" : render_pairings(rows, f));
      return exit_ok;
    }
    if (*verify) {
      SuiteBounds bounds{o.max_winding, o.max_degree, o.seed, inject_fault};
      const VerificationReport report = run_suite(suite, bounds);
      emit(o, f == Format::json ? serialize_report(report) + "\n" : render_report(report));
      return report.passed() ? exit_ok : exit_failed;
    }
    if (*factor) {
      const RankOneFactors r = rank_one_factor(factor_n);
      if (f == Format::json) {
        AlgebraMatrix m(2, r.u.size());
        for (std::size_t i = 0; i < r.u.size(); ++i) {
          m.at(0, i) = r.u[i];
          m.at(1, i) = r.v[i];
        }
        emit(o, matrix_json(m).dump(2) + "\n");
      } else {
        emit(o, "u = " + render_vector(r.u, f) + "\nv = " + render_vector(r.v, f) + "\nv^T u = " +
                    print_algebra(inner_product(r), f) + "\n");
      }
      return exit_ok;
    }
    if (*splitting) {
      const AlgebraElement x = parse_algebra(split_expr);
      const TensorAA s = splitting_s(x), st = splitting_s_tilde(x), sc = splitting_s_check(x);
      if (f == Format::json) {
        Json doc;
        doc["kind"] = "element";
        doc["value"] = print_algebra(x);
        doc["s"] = print_tensor(s);
        doc["s_tilde"] = print_tensor(st);
        doc["s_check"] = print_tensor(sc);
        emit(o, doc.dump(2) + "\n");
      } else {
        emit(o, with_newline("s(x) = " + print_tensor(s, f)) + with_newline("s~(x) = " + print_tensor(st, f)) +
                    with_newline("s^(x) = " + print_tensor(sc, f)));
      }
      return exit_ok;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  } catch (const MathError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
