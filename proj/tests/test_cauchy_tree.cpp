#include <doctest.h>

#include "qpoly/cauchy_tree.hpp"
#include "support.hpp"

using namespace qpoly;

namespace {

void check_against_direct(const std::vector<Complex>& src, const std::vector<Complex>& tgt,
                          const std::vector<std::vector<Complex>>& w, double tol) {
  const CauchyTree tree(src);
  const auto got = tree.sums(w, tgt);
  REQUIRE(got.size() == w.size());
  for (std::size_t c = 0; c < w.size(); ++c) {
    for (std::size_t t = 0; t < tgt.size(); ++t) {
      Complex ref{};
      double scale = 0.0;
      for (std::size_t j = 0; j < src.size(); ++j) {
        ref += w[c][j] / (src[j] - tgt[t]);
        scale += std::abs(w[c][j]) / std::abs(src[j] - tgt[t]);
      }
      REQUIRE(std::abs(got[c][t] - ref) <= tol * scale);
    }
  }
}

}  // namespace

TEST_CASE("treecode matches direct sums") {
  qtest::Rng rng(31);
  for (const std::size_t n : {1u, 10u, 100u, 3000u}) {
    std::vector<Complex> src(n), tgt(500);
    for (Complex& z : src) z = qtest::random_complex(rng, 2.0);
    for (Complex& z : tgt) z = qtest::random_complex(rng, 3.0);
    std::vector<std::vector<Complex>> w(2, std::vector<Complex>(n));
    for (auto& row : w)
      for (Complex& v : row) v = qtest::random_complex(rng);
    check_against_direct(src, tgt, w, 1e-12);
  }
}

TEST_CASE("sources on a line and on the unit circle") {
  qtest::Rng rng(32);
  std::vector<Complex> line(2000), circle(2048);
  for (Complex& z : line) z = {qtest::uniform(rng, -5, 5), 0.0};
  for (std::size_t t = 0; t < circle.size(); ++t) circle[t] = std::polar(1.0, 2 * M_PI * t / 2048.0);
  std::vector<Complex> tgt(300);
  for (Complex& z : tgt) z = qtest::random_complex(rng, 1.5);
  const std::vector<std::vector<Complex>> w1{std::vector<Complex>(line.size(), Complex{1.0})};
  check_against_direct(line, tgt, w1, 1e-12);
  std::vector<std::vector<Complex>> w2{std::vector<Complex>(circle.size())};
  for (Complex& v : w2[0]) v = qtest::random_complex(rng);
  check_against_direct(circle, tgt, w2, 1e-12);
}
