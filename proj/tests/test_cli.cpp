#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qpoly/cli.hpp"
#include "qpoly/io.hpp"
#include "qpoly/one_sided.hpp"
#include "support.hpp"

using namespace qpoly;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qpoly");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(QPOLY_TEST_DATA) + "/" + name; }

double max_relative(const std::string& a, const std::string& b) {
  const auto va = io::parse_quaternion_lines(a, "a");
  const auto vb = io::parse_quaternion_lines(b, "b");
  REQUIRE(va.size() == vb.size());
  double m = 0.0;
  for (std::size_t t = 0; t < va.size(); ++t) {
    m = std::max(m, qtest::diff(va[t], vb[t]) / std::max(1.0, qtest::max_component(vb[t])));
  }
  return m;
}

}  // namespace

TEST_CASE("eval and zerotest") {
  const Result r = run_cli({"eval", "-e", "X", "-x", "1+2i"});
  CHECK(r.code == 0);
  CHECK(r.out == "1+2i\n");
  const Result z = run_cli({"zerotest", "-e", "X\xC2\xB7X\xC2\xB7i\xC2\xB7X\xC2\xB7i + i\xC2\xB7X\xC2\xB7X\xC2\xB7i\xC2\xB7X - "
                                              "i\xC2\xB7X\xC2\xB7i\xC2\xB7X\xC2\xB7X - X\xC2\xB7i\xC2\xB7X\xC2\xB7X\xC2\xB7i",
                            "--epsilon", "0.01"});
  CHECK(z.code == 0);
  CHECK(z.out == "zero\n");
  const Result n = run_cli({"zerotest", "-e", "i*X-X*i+1", "--epsilon", "0.001", "--seed", "3"});
  CHECK(n.out == "non-zero\n");
  CHECK(run_cli({"zerotest", "-e", "i*X-X*i+1", "--epsilon", "0.3", "--seed", "9"}).out ==
        run_cli({"zerotest", "-e", "i*X-X*i+1", "--epsilon", "0.3", "--seed", "9"}).out);
}

TEST_CASE("expand") {
  const Result r = run_cli({"expand", "-e", "X*i"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("D 1\n", 0) == 0);
  const QuadruplePoly p = io::parse_quadruple(r.out, "out");
  CHECK(qtest::diff(p.evaluate(Quaternion::unit_j()), Quaternion::unit_j() * Quaternion::unit_i()) <= 1e-15);
  const Result b = run_cli({"expand", "-e", "(X)*(X)"});
  CHECK(b.code == 1);
  CHECK(b.err.find("bracket") != std::string::npos);
}

TEST_CASE("fast subcommands agree with --naive") {
  const Result c1 = run_cli({"convolve", "-a", data("coeffs.txt"), "-b", data("coeffs_b.txt")});
  const Result c2 = run_cli({"convolve", "-a", data("coeffs.txt"), "-b", data("coeffs_b.txt"), "--naive"});
  REQUIRE(c1.code == 0);
  CHECK(max_relative(c1.out, c2.out) <= 1e-9);

  const Result m1 = run_cli({"multieval", "-p", data("coeffs.txt"), "-x", data("points.txt")});
  const Result m2 = run_cli({"multieval", "-p", data("coeffs.txt"), "-x", data("points.txt"), "--naive"});
  REQUIRE(m1.code == 0);
  CHECK(max_relative(m1.out, m2.out) <= 1e-7);

  const Result n1 = run_cli({"nbody", "-a", data("poles.txt"), "-x", data("points.txt")});
  const Result n2 = run_cli({"nbody", "-a", data("poles.txt"), "-x", data("points.txt"), "--naive"});
  REQUIRE(n1.code == 0);
  CHECK(max_relative(n1.out, n2.out) <= 1e-7);
}

TEST_CASE("interpolate") {
  const Result bad = run_cli({"interpolate", "-x", data("ijk.txt"), "-y", data("ijk_values.txt")});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("automorphically equivalent") != std::string::npos);

  const Result ok = run_cli({"interpolate", "-x", data("interp_points.txt"), "-y", data("interp_points.txt")});
  REQUIRE(ok.code == 0);
  const auto xs = io::read_quaternion_file(data("interp_points.txt"));
  const OneSidedPoly p(io::parse_quaternion_lines(ok.out, "out"));
  for (const Quaternion& x : xs) CHECK(qtest::diff(horner_eval(p, x), x) <= 1e-7);
}

TEST_CASE("bench output") {
  const Result r = run_cli({"bench", "--op", "convolve", "--sizes", "16,32", "--repeats", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("size,seconds\n16,", 0) == 0);
  CHECK(r.out.find("\n32,") != std::string::npos);
  CHECK(run_cli({"bench", "--op", "sort", "--sizes", "16"}).code == 2);
}

TEST_CASE("usage and input errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"eval", "-e", "X"}).code == 2);
  const Result syntax = run_cli({"eval", "-e", "X^2", "-x", "1"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("expression:1:2") != std::string::npos);
  const Result missing = run_cli({"multieval", "-p", "/nonexistent", "-x", data("points.txt")});
  CHECK(missing.code == 2);
  const Result collide = run_cli({"nbody", "-a", data("poles.txt"), "-x", data("poles.txt")});
  CHECK(collide.code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}
