#include "qpoly/seq_poly.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qpoly/complex_poly.hpp"

namespace qpoly {

double QSeq::max_abs() const {
  double m = 0.0;
  for (const Quaternion& q : coeffs_) {
    m = std::max({m, std::abs(q.re), std::abs(q.im_i), std::abs(q.im_j), std::abs(q.im_k)});
  }
  return m;
}

QSeq add(const QSeq& a, const QSeq& b) {
  std::vector<Quaternion> c(std::max(a.size(), b.size()));
  for (std::size_t l = 0; l < c.size(); ++l) c[l] = a[l] + b[l];
  return QSeq(std::move(c));
}

QSeq convolve_naive(const QSeq& a, const QSeq& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t t = 0; t < a.size(); ++t) {
    for (std::size_t s = 0; s < b.size(); ++s) c[t + s] += a.coeffs()[t] * b.coeffs()[s];
  }
  return QSeq(std::move(c));
}

namespace {

std::array<std::vector<double>, 4> split(const QSeq& a) {
  std::array<std::vector<double>, 4> parts;
  for (auto& p : parts) p.resize(a.size());
  for (std::size_t l = 0; l < a.size(); ++l) {
    const Quaternion& q = a.coeffs()[l];
    parts[0][l] = q.re;
    parts[1][l] = q.im_i;
    parts[2][l] = q.im_j;
    parts[3][l] = q.im_k;
  }
  return parts;
}

}  // namespace

namespace {

// Spectra of four real sequences from two complex FFTs: (x0 + i x1) and
// (x2 + i x3) are transformed together and separated by conjugate symmetry.
std::array<std::vector<Complex>, 4> real_spectra(const std::array<std::vector<double>, 4>& x, std::size_t n) {
  std::array<std::vector<Complex>, 4> spec;
  const Complex half_minus_i{0.0, -0.5};
  for (std::size_t pair = 0; pair < 2; ++pair) {
    const std::vector<double>& re = x[2 * pair];
    const std::vector<double>& im = x[2 * pair + 1];
    std::vector<Complex>& s0 = spec[2 * pair];
    std::vector<Complex>& s1 = spec[2 * pair + 1];
    s0.assign(n, Complex{});
    s1.resize(n);
    for (std::size_t l = 0; l < re.size(); ++l) s0[l] = {re[l], im[l]};
    fft_inplace(s0, false);
    for (std::size_t k = 0; k <= n / 2; ++k) {
      const std::size_t m = (n - k) % n;
      const Complex zk = s0[k];
      const Complex zm = s0[m];
      s0[k] = 0.5 * (zk + std::conj(zm));
      s1[k] = half_minus_i * (zk - std::conj(zm));
      s0[m] = 0.5 * (zm + std::conj(zk));
      s1[m] = half_minus_i * (zm - std::conj(zk));
    }
  }
  return spec;
}

}  // namespace

QSeq convolve_fast(const QSeq& a, const QSeq& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  const std::size_t n = next_power_of_two(len);
  const auto sa = real_spectra(split(a), n);
  const auto sb = real_spectra(split(b), n);
  // The 16 real convolutions as spectral products, accumulated per target
  // in kHamiltonTable order. Targets 0, 1 share one buffer as r0 + i r1 and
  // targets 2, 3 the other; both results of a pair are real.
  std::array<std::vector<Complex>, 2> acc{std::vector<Complex>(n), std::vector<Complex>(n)};
  for (const BasisProduct& term : kHamiltonTable) {
    const std::vector<Complex>& x = sa[static_cast<std::size_t>(term.left)];
    const std::vector<Complex>& y = sb[static_cast<std::size_t>(term.right)];
    std::vector<Complex>& dst = acc[static_cast<std::size_t>(term.target / 2)];
    const Complex w = term.target % 2 == 0 ? Complex{static_cast<double>(term.sign), 0.0}
                                           : Complex{0.0, static_cast<double>(term.sign)};
    for (std::size_t k = 0; k < n; ++k) dst[k] += w * (x[k] * y[k]);
  }
  for (auto& z : acc) fft_inplace(z, true);
  std::vector<Quaternion> c(len);
  for (std::size_t l = 0; l < len; ++l) {
    c[l] = {acc[0][l].real(), acc[0][l].imag(), acc[1][l].real(), acc[1][l].imag()};
  }
  return QSeq(std::move(c));
}

double max_difference(const QSeq& a, const QSeq& b) {
  double m = 0.0;
  for (std::size_t l = 0; l < std::max(a.size(), b.size()); ++l) {
    const Quaternion d = a[l] - b[l];
    m = std::max({m, std::abs(d.re), std::abs(d.im_i), std::abs(d.im_j), std::abs(d.im_k)});
  }
  return m;
}

}  // namespace qpoly
