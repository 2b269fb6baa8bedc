#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

namespace qpoly {

/// Default absolute tolerance of equality predicates on quaternions.
inline constexpr double kEqTolerance = 1e-9;

/// Hamilton quaternion re + im_i*i + im_j*j + im_k*k over doubles.
struct Quaternion {
  double re = 0.0;
  double im_i = 0.0;
  double im_j = 0.0;
  double im_k = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r) : re(r) {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double r, double i, double j, double k)
      : re(r), im_i(i), im_j(j), im_k(k) {}

  static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }
  /// Embeds a + bi as a quaternion of the subalgebra R + iR.
  static constexpr Quaternion from_complex(std::complex<double> z) {
    return {z.real(), z.imag(), 0, 0};
  }

  constexpr std::array<double, 4> components() const { return {re, im_i, im_j, im_k}; }
  constexpr double operator[](int m) const {
    return m == 0 ? re : m == 1 ? im_i : m == 2 ? im_j : im_k;
  }

  constexpr bool is_real() const { return im_i == 0 && im_j == 0 && im_k == 0; }
  /// True iff the value lies in R + iR.
  constexpr bool is_complex() const { return im_j == 0 && im_k == 0; }

  constexpr Quaternion imaginary() const { return {0, im_i, im_j, im_k}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    re += o.re; im_i += o.im_i; im_j += o.im_j; im_k += o.im_k;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    re -= o.re; im_i -= o.im_i; im_j -= o.im_j; im_k -= o.im_k;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    re *= s; im_i *= s; im_j *= s; im_k *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.re, -a.im_i, -a.im_j, -a.im_k}; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.re * b.re - a.im_i * b.im_i - a.im_j * b.im_j - a.im_k * b.im_k,
          a.re * b.im_i + a.im_i * b.re + a.im_j * b.im_k - a.im_k * b.im_j,
          a.re * b.im_j + a.im_j * b.re + a.im_k * b.im_i - a.im_i * b.im_k,
          a.re * b.im_k + a.im_k * b.re + a.im_i * b.im_j - a.im_j * b.im_i};
}

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// One bilinear term of the product: component `target` of a*b receives
/// sign * a[left] * b[right].
struct BasisProduct {
  int left;
  int right;
  int target;
  int sign;
};

/// The 16 terms of the componentwise product, grouped by target component
/// in the order (f0g0 - f1g1 - f2g2 - f3g3, f0g1 + f1g0 + f2g3 - f3g2,
/// f0g2 + f2g0 + f3g1 - f1g3, f0g3 + f3g0 + f1g2 - f2g1). Sequence
/// convolution and polynomial-quadruple products both recombine with it.
inline constexpr std::array<BasisProduct, 16> kHamiltonTable{{
    {0, 0, 0, +1}, {1, 1, 0, -1}, {2, 2, 0, -1}, {3, 3, 0, -1},
    {0, 1, 1, +1}, {1, 0, 1, +1}, {2, 3, 1, +1}, {3, 2, 1, -1},
    {0, 2, 2, +1}, {2, 0, 2, +1}, {3, 1, 2, +1}, {1, 3, 2, -1},
    {0, 3, 3, +1}, {3, 0, 3, +1}, {1, 2, 3, +1}, {2, 1, 3, -1},
}};

constexpr Quaternion conj(const Quaternion& a) { return {a.re, -a.im_i, -a.im_j, -a.im_k}; }

constexpr double norm_squared(const Quaternion& a) {
  return a.re * a.re + a.im_i * a.im_i + a.im_j * a.im_j + a.im_k * a.im_k;
}

double norm(const Quaternion& a);

/// Euclidean length of the imaginary part.
double imag_norm(const Quaternion& a);

/// Two-sided inverse conj(a)/|a|^2. Throws DivisionByZero for a == 0.
Quaternion inverse(const Quaternion& a);

/// Re(a) = Re(b) and |Im(a)| = |Im(b)|, each within `tolerance` (absolute).
bool auto_equivalent(const Quaternion& a, const Quaternion& b,
                     double tolerance = kEqTolerance);

/// Componentwise closeness in the max norm.
bool approx_equal(const Quaternion& a, const Quaternion& b, double tolerance = kEqTolerance);

/// u * x * u^-1. Throws ZeroConjugator for u == 0.
Quaternion apply_automorphism(const Quaternion& u, const Quaternion& x);

/// Unit conjugator u with u*x*u^-1 = y in R + iR.
struct Rotation {
  Quaternion u{1.0};
  Quaternion y;

  std::complex<double> y_complex() const { return {y.re, y.im_i}; }
  /// Maps a value computed at y back to the original point: u^-1 * v * u.
  Quaternion restore(const Quaternion& v) const { return conj(u) * v * u; }
};

/// Rotates x into R + iR. Points already in R + iR keep u = 1 and y = x;
/// otherwise y = Re(x) + |Im(x)| i and u maps Im(x)/|Im(x)| onto i.
Rotation rotation_to_complex(const Quaternion& x);

/// Parses `a+bi+cj+dk` with omitted zero terms, e.g. `1-2k`, `i`, `-0.5j`.
/// Throws SyntaxError.
Quaternion parse_quaternion(std::string_view text);

/// Inverse of parse_quaternion, 17 significant digits per component.
std::string format_quaternion(const Quaternion& q);

}  // namespace qpoly

namespace qpoly {

/// Scans one literal term (`number unit?` or `unit`) starting at `pos`,
/// skipping leading whitespace. Advances `pos` past it on success; returns
/// false and leaves `pos` untouched when no term starts there.
bool scan_quaternion_term(std::string_view text, std::size_t& pos, Quaternion& out);

}  // namespace qpoly
