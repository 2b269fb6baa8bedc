#pragma once

// Random inputs and independent reference computations shared by the unit
// tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "qpoly/complex_poly.hpp"
#include "qpoly/map_poly.hpp"
#include "qpoly/quaternion.hpp"

namespace qtest {

using qpoly::Complex;
using qpoly::Quaternion;
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Quaternion random_quaternion(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Quaternion random_ball(Rng& rng) {
  for (;;) {
    const Quaternion q = random_quaternion(rng);
    if (qpoly::norm_squared(q) <= 1.0) return q;
  }
}

inline Quaternion random_unit(Rng& rng) {
  for (;;) {
    const Quaternion q = random_quaternion(rng);
    const double n = qpoly::norm(q);
    if (n > 0.1 && n <= 1.0) return q * (1.0 / n);
  }
}

/// beta i + gamma j + delta k with beta^2 + gamma^2 + delta^2 = 1.
inline Quaternion random_unit_imaginary(Rng& rng) {
  for (;;) {
    const Quaternion q{0, uniform(rng), uniform(rng), uniform(rng)};
    const double n = qpoly::norm(q);
    if (n > 0.1 && n <= 1.0) return q * (1.0 / n);
  }
}

inline Complex random_complex(Rng& rng, double r = 1.0) { return {uniform(rng, -r, r), uniform(rng, -r, r)}; }

/// Component-by-component accumulation of the Hamilton products, written
/// out from i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
inline Quaternion hamilton_reference(const Quaternion& a, const Quaternion& b) {
  const double a0 = a.re, a1 = a.im_i, a2 = a.im_j, a3 = a.im_k;
  const double b0 = b.re, b1 = b.im_i, b2 = b.im_j, b3 = b.im_k;
  return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3, a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
          a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1, a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
}

inline double max_component(const Quaternion& q) {
  return std::max({std::abs(q.re), std::abs(q.im_i), std::abs(q.im_j), std::abs(q.im_k)});
}

inline double diff(const Quaternion& a, const Quaternion& b) { return max_component(a - b); }

/// Schoolbook product of complex coefficient vectors.
inline std::vector<Complex> schoolbook(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Complex> c(a.size() + b.size() - 1);
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = 0; t < b.size(); ++t) c[s + t] += a[s] * b[t];
  return c;
}

inline Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (std::size_t l = c.size(); l-- > 0;) acc = acc * z + c[l];
  return acc;
}

inline std::vector<Complex> random_coeffs(std::size_t n, Rng& rng) {
  std::vector<Complex> c(n);
  for (Complex& v : c) v = random_complex(rng);
  return c;
}

/// Dense RPoly4 with every coefficient of total degree <= d drawn from [-1,1].
inline qpoly::RPoly4 random_rpoly4(int d, Rng& rng) {
  qpoly::RPoly4 f(d);
  for (double& c : f.mutable_data()) c = uniform(rng);
  return f;
}

inline qpoly::QuadruplePoly random_quadruple(int d, Rng& rng) {
  return qpoly::QuadruplePoly({random_rpoly4(d, rng), random_rpoly4(d, rng), random_rpoly4(d, rng),
                               random_rpoly4(d, rng)});
}

/// Random bracket-free expression over X, small integer-like constants and
/// the units, with at most `max_tokens` tokens; `*` as the product sign.
inline std::string random_expression(Rng& rng, std::size_t max_tokens) {
  static const char* const atoms[] = {"X", "X", "X", "i", "j", "k", "2", "0.5", "1.5j", "3k", "2i"};
  std::uniform_int_distribution<int> pick_atom(0, 10);
  std::uniform_int_distribution<int> coin(0, 3);
  std::string out;
  std::size_t tokens = 0;
  bool first = true;
  while (tokens + 2 <= max_tokens) {
    if (!first) {
      out += coin(rng) < 2 ? " + " : " - ";
      ++tokens;
    }
    out += atoms[pick_atom(rng)];
    ++tokens;
    while (tokens + 2 <= max_tokens && coin(rng) != 0) {
      out += '*';
      out += atoms[pick_atom(rng)];
      tokens += 2;
    }
    first = false;
    if (coin(rng) == 0) break;
  }
  if (out.empty()) out = "X";
  return out;
}

}  // namespace qtest
