#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qpoly {

using Complex = std::complex<double>;

/// Relative threshold below which coefficients do not count towards degree().
inline constexpr double kDegreeTrim = 1e-9;

/// Dense univariate polynomial over C; coeffs()[l] multiplies Z^l.
/// Stored coefficient vectors carry no trailing exact zeros.
class CPoly {
 public:
  CPoly() = default;
  explicit CPoly(std::vector<Complex> coeffs);
  CPoly(std::initializer_list<Complex> coeffs);

  static CPoly from_real(std::span<const double> coeffs);
  /// Z - root.
  static CPoly linear(Complex root);

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  Complex operator[](std::size_t l) const {
    return l < coeffs_.size() ? coeffs_[l] : Complex{};
  }

  /// Largest index whose coefficient exceeds kDegreeTrim * max|c|; -1 for zero.
  int degree() const;
  double max_abs() const;

  Complex horner(Complex z) const;

  friend CPoly operator+(const CPoly& a, const CPoly& b);
  friend CPoly operator-(const CPoly& a, const CPoly& b);

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

/// In-place radix-2 DFT, X_k = sum x_n exp(-2 pi i k n / N); the inverse
/// transform includes the 1/N factor. Throws NonPowerOfTwoLength.
void fft_inplace(std::span<Complex> values, bool inverse);
std::vector<Complex> fft(std::vector<Complex> values, bool inverse = false);

std::size_t next_power_of_two(std::size_t n);

/// Product of two polynomials through a zero-padded FFT.
CPoly cmul(const CPoly& p, const CPoly& q);

/// Linear convolution of real sequences through one complex FFT pair.
std::vector<double> convolve_real(std::span<const double> a, std::span<const double> b);

struct DivRem {
  CPoly quotient;
  CPoly remainder;
};

/// p = quotient * d + remainder with deg remainder < deg d. Throws DivisorZero.
DivRem div_rem(const CPoly& p, const CPoly& d);

CPoly derivative(const CPoly& p);

/// Balanced product tree over linear factors Z - pt. level(0) holds the
/// linear factors, the last level holds the single root polynomial. An odd
/// node at the end of a level is carried up unchanged.
class SubproductTree {
 public:
  SubproductTree() = default;
  explicit SubproductTree(std::span<const Complex> points);

  std::size_t levels() const { return levels_.size(); }
  const std::vector<CPoly>& level(std::size_t l) const { return levels_[l]; }
  const CPoly& root() const;
  std::size_t point_count() const { return point_count_; }

 private:
  std::vector<std::vector<CPoly>> levels_;
  std::size_t point_count_ = 0;
};

SubproductTree subproduct_build(std::span<const Complex> points);

std::vector<Complex> horner_eval_all(const CPoly& p, std::span<const Complex> points);

/// Classical top-down remainder tree over the subproduct tree. Exact in
/// real arithmetic but numerically unstable away from the unit circle;
/// multipoint_eval does not route through it.
std::vector<Complex> remainder_tree_eval(const CPoly& p, std::span<const Complex> points,
                                         std::size_t crossover = 32);

struct MultipointOptions {
  /// Below this many points (or coefficients) values come from Horner.
  std::size_t crossover = 32;
};

/// Values p(pt) for every point. Large inputs use barycentric interpolation
/// from the values at the N-th roots of unity (one FFT) with the Cauchy
/// sums evaluated by CauchyTree; points outside the unit disk go through
/// the reversed polynomial at 1/pt.
std::vector<Complex> multipoint_eval(const CPoly& p, std::span<const Complex> points,
                                     const MultipointOptions& options = {});

/// Same as multipoint_eval for several polynomials sharing one point set.
std::vector<std::vector<Complex>> multipoint_eval_many(std::span<const CPoly> polys,
                                                       std::span<const Complex> points,
                                                       const MultipointOptions& options = {});

}  // namespace qpoly
