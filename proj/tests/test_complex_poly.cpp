#include <doctest.h>

#include <cmath>

#include "qpoly/complex_poly.hpp"
#include "qpoly/errors.hpp"
#include "support.hpp"

using namespace qpoly;

namespace {

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t t = 0; t < n; ++t) {
    const Complex x = t < a.size() ? a[t] : Complex{};
    const Complex y = t < b.size() ? b[t] : Complex{};
    m = std::max(m, std::abs(x - y));
  }
  return m;
}

double max_abs(const std::vector<Complex>& a) {
  double m = 0.0;
  for (const Complex& z : a) m = std::max(m, std::abs(z));
  return m;
}

// Direct O(n^2) DFT with the same sign convention.
std::vector<Complex> dft(const std::vector<Complex>& x) {
  const std::size_t n = x.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < n; ++t)
      out[k] += x[t] * std::polar(1.0, -2.0 * M_PI * static_cast<double>(k * t % n) / static_cast<double>(n));
  return out;
}

}  // namespace

TEST_CASE("fft examples") {
  const std::vector<Complex> delta{1, 0, 0, 0};
  CHECK(max_abs_diff(fft(delta), {1, 1, 1, 1}) <= 1e-15);
  const Complex c{2.0, -3.0};
  CHECK(max_abs_diff(fft({c, c, c, c}), {4.0 * c, 0, 0, 0}) <= 1e-14);
  CHECK_THROWS_AS(fft(std::vector<Complex>(3)), NonPowerOfTwoLength);
  CHECK_THROWS_AS(fft(std::vector<Complex>{}), NonPowerOfTwoLength);
}

TEST_CASE("fft against direct DFT, round trip, linearity, Parseval") {
  qtest::Rng rng(11);
  for (const std::size_t n : {1u, 2u, 8u, 64u, 256u}) {
    const auto x = qtest::random_coeffs(n, rng);
    const auto y = qtest::random_coeffs(n, rng);
    const auto fx = fft(x);
    CHECK(max_abs_diff(fx, dft(x)) <= 1e-10 * std::max(1.0, max_abs(fx)));
    CHECK(max_abs_diff(fft(fx, true), x) <= 1e-10 * max_abs(x));

    std::vector<Complex> combo(n);
    const Complex alpha{0.3, -1.2};
    for (std::size_t t = 0; t < n; ++t) combo[t] = alpha * x[t] + y[t];
    const auto fy = fft(y);
    std::vector<Complex> expect(n);
    for (std::size_t t = 0; t < n; ++t) expect[t] = alpha * fx[t] + fy[t];
    CHECK(max_abs_diff(fft(combo), expect) <= 1e-10 * max_abs(expect));

    double ex = 0.0, ef = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      ex += std::norm(x[t]);
      ef += std::norm(fx[t]);
    }
    CHECK(std::abs(ef / static_cast<double>(n) - ex) <= 1e-10 * ex);
  }
}

TEST_CASE("cmul") {
  const CPoly p{1, 1};
  const CPoly q{1, -1};
  const CPoly r = cmul(p, q);
  CHECK(r.degree() == 2);
  CHECK(std::abs(r[0] - 1.0) <= 1e-15);
  CHECK(std::abs(r[1]) <= 1e-15);
  CHECK(std::abs(r[2] + 1.0) <= 1e-15);

  qtest::Rng rng(12);
  const CPoly a(qtest::random_coeffs(51, rng));
  const CPoly one{1};
  CHECK(max_abs_diff(cmul(a, one).coeffs(), a.coeffs()) <= 1e-14);

  for (int t = 0; t < 20; ++t) {
    const auto ca = qtest::random_coeffs(51, rng);
    const auto cb = qtest::random_coeffs(51, rng);
    const auto ref = qtest::schoolbook(ca, cb);
    const CPoly got = cmul(CPoly(ca), CPoly(cb));
    CHECK(max_abs_diff(got.coeffs(), ref) <= 1e-9 * max_abs(ref));
    CHECK(got.degree() == 100);
  }
  CHECK(cmul(a, CPoly{}).is_zero());
}

TEST_CASE("convolve_real matches schoolbook") {
  qtest::Rng rng(13);
  for (const std::size_t n : {1u, 3u, 100u, 1000u}) {
    std::vector<double> a(n), b(n + 7);
    for (double& v : a) v = qtest::uniform(rng);
    for (double& v : b) v = qtest::uniform(rng);
    const auto got = convolve_real(a, b);
    REQUIRE(got.size() == a.size() + b.size() - 1);
    double m = 0.0;
    for (std::size_t l = 0; l < got.size(); ++l) {
      double ref = 0.0;
      for (std::size_t s = 0; s < a.size(); ++s)
        if (l >= s && l - s < b.size()) ref += a[s] * b[l - s];
      m = std::max(m, std::abs(got[l] - ref));
    }
    CHECK(m <= 1e-12 * static_cast<double>(n));
  }
}

TEST_CASE("degree additivity after trimming") {
  qtest::Rng rng(14);
  for (int t = 0; t < 50; ++t) {
    const std::size_t da = 1 + static_cast<std::size_t>(t) * 7 % 300;
    const std::size_t db = 1 + static_cast<std::size_t>(t) * 13 % 200;
    auto ca = qtest::random_coeffs(da + 1, rng);
    auto cb = qtest::random_coeffs(db + 1, rng);
    const CPoly a(ca), b(cb);
    CHECK(cmul(a, b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("div_rem") {
  const Complex i{0, 1};
  const DivRem d = div_rem(CPoly{1, 0, 1}, CPoly{-i, 1});
  CHECK(std::abs(d.quotient[0] - i) <= 1e-15);
  CHECK(std::abs(d.quotient[1] - 1.0) <= 1e-15);
  CHECK(d.remainder.degree() <= 0);
  CHECK(std::abs(d.remainder[0]) <= 1e-15);

  qtest::Rng rng(15);
  const CPoly p(qtest::random_coeffs(41, rng));
  const DivRem unit = div_rem(p, CPoly{1});
  CHECK(max_abs_diff(unit.quotient.coeffs(), p.coeffs()) <= 1e-15);
  CHECK(unit.remainder.is_zero());
  CHECK_THROWS_AS(div_rem(p, CPoly{}), DivisorZero);

  for (int t = 0; t < 20; ++t) {
    const auto cp = qtest::random_coeffs(41, rng);
    // Divisor with roots in the unit disk keeps the quotient bounded.
    std::vector<Complex> cd{qtest::random_complex(rng) + 2.0};
    for (int r = 0; r < 7; ++r) {
      Complex root;
      do root = qtest::random_complex(rng);
      while (std::abs(root) > 1.0);
      cd = qtest::schoolbook(cd, {-root, 1});
    }
    const DivRem r = div_rem(CPoly(cp), CPoly(cd));
    CHECK(r.remainder.degree() < 7);
    auto back = qtest::schoolbook(r.quotient.coeffs(), cd);
    back.resize(std::max(back.size(), r.remainder.size()));
    for (std::size_t l = 0; l < r.remainder.size(); ++l) back[l] += r.remainder[l];
    CHECK(max_abs_diff(back, cp) <= 1e-8 * max_abs(cp));
  }
  // Arbitrary divisors: the residual is small against |q| |d|, the size of
  // the terms that cancel.
  for (int t = 0; t < 20; ++t) {
    const auto cp = qtest::random_coeffs(41, rng);
    const auto cd = qtest::random_coeffs(8, rng);
    const DivRem r = div_rem(CPoly(cp), CPoly(cd));
    auto back = qtest::schoolbook(r.quotient.coeffs(), cd);
    back.resize(std::max(back.size(), r.remainder.size()));
    for (std::size_t l = 0; l < r.remainder.size(); ++l) back[l] += r.remainder[l];
    std::vector<Complex> aq, ad;
    for (const Complex& z : r.quotient.coeffs()) aq.emplace_back(std::abs(z));
    for (const Complex& z : cd) ad.emplace_back(std::abs(z));
    CHECK(max_abs_diff(back, cp) <= 1e-12 * std::max(max_abs(qtest::schoolbook(aq, ad)), max_abs(cp)));
  }
}

TEST_CASE("subproduct tree and derivative") {
  const std::vector<Complex> pm{1, -1};
  const CPoly root = subproduct_build(pm).root();
  CHECK(std::abs(root[0] + 1.0) <= 1e-15);
  CHECK(std::abs(root[1]) <= 1e-15);
  CHECK(std::abs(root[2] - 1.0) <= 1e-15);

  const CPoly d = derivative(CPoly{0, 0, 0, 1});
  CHECK(d.degree() == 2);
  CHECK(std::abs(d[2] - 3.0) <= 1e-15);
  CHECK(derivative(CPoly{5}).is_zero());

  qtest::Rng rng(16);
  for (const std::size_t n : {1u, 2u, 5u, 16u, 33u}) {
    const auto pts = qtest::random_coeffs(n, rng);
    std::vector<Complex> fold{1};
    for (const Complex& z : pts) fold = qtest::schoolbook(fold, {-z, 1});
    CHECK(max_abs_diff(subproduct_build(pts).root().coeffs(), fold) <= 1e-12 * max_abs(fold));
  }
  CHECK(subproduct_build(std::vector<Complex>{}).root().degree() == 0);
}

TEST_CASE("multipoint evaluation examples") {
  const std::vector<Complex> pts{0, 1, 2};
  const auto sq = multipoint_eval(CPoly{0, 0, 1}, pts);
  CHECK(max_abs_diff(sq, {0, 1, 4}) <= 1e-15);
  const Complex c{1.5, -2};
  std::vector<Complex> many(100);
  qtest::Rng rng(17);
  for (Complex& z : many) z = qtest::random_complex(rng, 3.0);
  for (const Complex& v : multipoint_eval(CPoly{c}, many)) CHECK(std::abs(v - c) <= 1e-14);
  CHECK(multipoint_eval(CPoly{}, many)[5] == Complex{});
}

TEST_CASE("multipoint evaluation agrees with Horner") {
  qtest::Rng rng(18);
  struct Case {
    std::size_t degree, points;
    double radius;
  };
  for (const Case c : {Case{200, 256, 1.0}, Case{1024, 1024, 1.0}, Case{1024, 1500, 1.3}, Case{64, 40, 2.0},
                       Case{513, 700, 0.5}, Case{31, 1000, 1.0}}) {
    const auto coeffs = qtest::random_coeffs(c.degree + 1, rng);
    std::vector<Complex> pts(c.points);
    for (Complex& z : pts) {
      do z = qtest::random_complex(rng, c.radius);
      while (std::abs(z) > c.radius);
    }
    const auto got = multipoint_eval(CPoly(coeffs), pts);
    for (std::size_t t = 0; t < pts.size(); ++t) {
      const Complex ref = qtest::horner(coeffs, pts[t]);
      double scale = 0.0;
      for (std::size_t l = coeffs.size(); l-- > 0;) scale = scale * std::abs(pts[t]) + std::abs(coeffs[l]);
      REQUIRE(std::abs(got[t] - ref) <= 1e-7 * std::max(std::abs(ref), 1e-3 * scale));
    }
  }
}

TEST_CASE("points on the unit circle and roots of unity") {
  qtest::Rng rng(19);
  const std::size_t n = 512;
  const auto coeffs = qtest::random_coeffs(n, rng);
  std::vector<Complex> pts;
  for (std::size_t t = 0; t < n; ++t) pts.push_back(std::polar(1.0, 2.0 * M_PI * static_cast<double>(t) / n));
  for (std::size_t t = 0; t < 100; ++t) pts.push_back(std::polar(1.0, qtest::uniform(rng, -M_PI, M_PI)));
  const auto got = multipoint_eval(CPoly(coeffs), pts);
  for (std::size_t t = 0; t < pts.size(); ++t) {
    REQUIRE(std::abs(got[t] - qtest::horner(coeffs, pts[t])) <= 1e-9 * std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("remainder tree reference on the unit circle") {
  qtest::Rng rng(20);
  const auto coeffs = qtest::random_coeffs(64, rng);
  std::vector<Complex> pts(64);
  for (Complex& z : pts) z = std::polar(1.0, qtest::uniform(rng, -M_PI, M_PI));
  const auto got = remainder_tree_eval(CPoly(coeffs), pts, 4);
  for (std::size_t t = 0; t < pts.size(); ++t) {
    CHECK(std::abs(got[t] - qtest::horner(coeffs, pts[t])) <= 1e-6);
  }
}

TEST_CASE("multipoint_eval_many shares points") {
  qtest::Rng rng(21);
  std::vector<CPoly> polys;
  std::vector<std::vector<Complex>> raw;
  for (const std::size_t n : {1u, 40u, 300u, 0u}) {
    raw.push_back(qtest::random_coeffs(n, rng));
    polys.emplace_back(raw.back());
  }
  std::vector<Complex> pts(400);
  for (Complex& z : pts) z = qtest::random_complex(rng, 1.2);
  const auto got = multipoint_eval_many(polys, pts);
  REQUIRE(got.size() == polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c) {
    for (std::size_t t = 0; t < pts.size(); ++t) {
      const Complex ref = qtest::horner(raw[c], pts[t]);
      REQUIRE(std::abs(got[c][t] - ref) <= 1e-7 * std::max(1.0, std::abs(ref)));
    }
  }
}
