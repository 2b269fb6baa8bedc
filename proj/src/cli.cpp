#include "qpoly/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qpoly/bench.hpp"
#include "qpoly/errors.hpp"
#include "qpoly/expr.hpp"
#include "qpoly/io.hpp"
#include "qpoly/one_sided.hpp"
#include "qpoly/seq_poly.hpp"

namespace qpoly::cli {

namespace {

// Sends text to `path`, or to `out` when the path is empty.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
  if (!file) throw IoError("cannot write '" + path + "'");
}

std::string quaternion_lines(std::span<const Quaternion> values) {
  std::ostringstream s;
  io::write_quaternion_lines(s, values);
  return s.str();
}

Expr parse_argument(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw FileFormatError("expression", 1, e.position() + 1, e.message());
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quaternion polynomial toolkit", "qpoly"};
  app.require_subcommand(1);

  std::string expr_text, point_text, out_path, file_a, file_b, file_p, file_x, file_y, op;
  double epsilon = 0.5;
  std::uint64_t seed = kDefaultSeed;
  bool naive = false;
  int repeats = 5;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression at one point");
  eval->add_option("-e,--expr", expr_text, "Expression in X")->required();
  eval->add_option("-x,--point", point_text, "Quaternion literal")->required();

  auto* expand_cmd = app.add_subcommand("expand", "Expand a bracket-free expression into its quadruple form");
  expand_cmd->add_option("-e,--expr", expr_text, "Expression in X")->required();
  expand_cmd->add_option("-o,--output", out_path, "Write here instead of stdout");

  auto* zerotest = app.add_subcommand("zerotest", "Randomized test whether an expression is identically zero");
  zerotest->add_option("-e,--expr", expr_text, "Expression in X")->required();
  zerotest->add_option("--epsilon", epsilon, "Error probability bound in (0,1)")->required();
  zerotest->add_option("--seed", seed, "RNG seed");

  auto* convolve = app.add_subcommand("convolve", "Product of two coefficient sequences");
  convolve->add_option("-a", file_a, "Coefficient file")->required();
  convolve->add_option("-b", file_b, "Coefficient file")->required();
  convolve->add_flag("--naive", naive, "Use the direct double loop");
  convolve->add_option("-o,--output", out_path, "Write here instead of stdout");

  auto* multieval = app.add_subcommand("multieval", "Evaluate a one-sided polynomial at many points");
  multieval->add_option("-p", file_p, "Coefficient file")->required();
  multieval->add_option("-x", file_x, "Point file")->required();
  multieval->add_flag("--naive", naive, "Per-point Horner evaluation");
  multieval->add_option("-o,--output", out_path, "Write here instead of stdout");

  auto* interp = app.add_subcommand("interpolate", "One-sided interpolation through points and values");
  interp->add_option("-x", file_x, "Point file")->required();
  interp->add_option("-y", file_y, "Value file")->required();
  interp->add_option("-o,--output", out_path, "Write here instead of stdout");

  auto* nbody = app.add_subcommand("nbody", "Sums of inverse distances to real poles");
  nbody->add_option("-a", file_a, "Pole file (real numbers)")->required();
  nbody->add_option("-x", file_x, "Point file")->required();
  nbody->add_flag("--naive", naive, "Direct summation");
  nbody->add_option("-o,--output", out_path, "Write here instead of stdout");

  auto* bench_cmd = app.add_subcommand("bench", "Timing table for scaling checks");
  bench_cmd->add_option("--op", op, "convolve, multieval or mul1")
      ->required()
      ->check(CLI::IsMember({"convolve", "multieval", "mul1"}));
  std::vector<std::size_t> sizes;
  bench_cmd->add_option("--sizes", sizes, "Comma separated sizes")->required()->delimiter(',');
  bench_cmd->add_option("--repeats", repeats, "Runs per size; the median is reported")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      const Expr e = parse_argument(expr_text);
      Quaternion x;
      try {
        x = parse_quaternion(point_text);
      } catch (const ParseError& pe) {
        throw FileFormatError("point", 1, pe.position() + 1, pe.message());
      }
      out << format_quaternion(eval_at(e, x)) << '\n';
    } else if (*expand_cmd) {
      const QuadruplePoly p = expand(parse_argument(expr_text));
      std::ostringstream s;
      io::write_quadruple(s, p);
      emit(out_path, out, s.str());
    } else if (*zerotest) {
      const Expr e = parse_argument(expr_text);
      std::mt19937_64 rng(seed);
      out << (zero_test(e, epsilon, rng) == Verdict::Zero ? "zero" : "non-zero") << '\n';
    } else if (*convolve) {
      const QSeq a(io::read_quaternion_file(file_a));
      const QSeq b(io::read_quaternion_file(file_b));
      const QSeq c = naive ? convolve_naive(a, b) : convolve_fast(a, b);
      emit(out_path, out, quaternion_lines(c.coeffs()));
    } else if (*multieval) {
      const OneSidedPoly p(io::read_quaternion_file(file_p));
      const std::vector<Quaternion> xs = io::read_quaternion_file(file_x);
      const std::vector<Quaternion> v = naive ? multieval_naive(p, xs) : multieval_fast(p, xs);
      emit(out_path, out, quaternion_lines(v));
    } else if (*interp) {
      const std::vector<Quaternion> xs = io::read_quaternion_file(file_x);
      const std::vector<Quaternion> ys = io::read_quaternion_file(file_y);
      emit(out_path, out, quaternion_lines(interpolate(xs, ys).coeffs()));
    } else if (*nbody) {
      const std::vector<double> poles = io::read_real_file(file_a);
      const std::vector<Quaternion> xs = io::read_quaternion_file(file_x);
      const std::vector<Quaternion> v = naive ? nbody_naive(poles, xs) : nbody_multieval(poles, xs);
      emit(out_path, out, quaternion_lines(v));
    } else if (*bench_cmd) {
      out << "size,seconds\n";
      for (const bench::BenchRow& row : bench::run(op, sizes, repeats, seed)) {
        out << row.size << ',' << row.seconds << '\n';
      }
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace qpoly::cli
