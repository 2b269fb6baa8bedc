#pragma once

#include <array>
#include <climits>
#include <cstddef>
#include <span>
#include <vector>

namespace qpoly {

using Exponent = std::array<int, 4>;
using Point4 = std::array<double, 4>;

/// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = INT_MIN;

/// Dense real polynomial in X0..X3 holding every monomial of total degree
/// at most bound(); C(bound + 4, 4) slots laid out with e0 slowest.
class RPoly4 {
 public:
  RPoly4() : RPoly4(0) {}
  explicit RPoly4(int bound);

  static RPoly4 constant(double c);
  /// The monomial X_axis.
  static RPoly4 variable(int axis);

  int bound() const { return bound_; }
  std::size_t slot_count() const { return coeffs_.size(); }
  std::span<const double> data() const { return coeffs_; }
  std::span<double> mutable_data() { return coeffs_; }

  /// Coefficient of X^e, zero when e lies outside the stored bound.
  double coeff(const Exponent& e) const;
  /// Mutable access; e must satisfy e0 + e1 + e2 + e3 <= bound().
  double& at(const Exponent& e);

  /// Calls f(exponent, coefficient) for every stored slot in layout order.
  template <class F>
  void for_each_slot(F&& f) const {
    std::size_t idx = 0;
    for (int a = 0; a <= bound_; ++a)
      for (int b = 0; a + b <= bound_; ++b)
        for (int c = 0; a + b + c <= bound_; ++c)
          for (int d = 0; a + b + c + d <= bound_; ++d) f(Exponent{a, b, c, d}, coeffs_[idx++]);
  }

  /// Max total degree over coefficients with |c| > threshold.
  int total_degree(double threshold = 0.0) const;
  int max_axis_degree(int axis) const;
  double max_abs() const;
  double l1_norm() const;
  bool is_zero() const;

  double evaluate(const Point4& x) const;
  /// sum |c| |x0|^e0 ... |x3|^e3, an upper bound for |evaluate(x)|.
  double evaluate_abs(const Point4& x) const;

  /// Same polynomial stored with a different bound (terms above it dropped).
  RPoly4 with_bound(int bound) const;
  /// Zeroes coefficients with |c| <= threshold and shrinks the bound to the
  /// remaining total degree.
  void snap(double threshold);

  RPoly4& operator+=(const RPoly4& o);
  RPoly4& operator-=(const RPoly4& o);
  RPoly4& operator*=(double s);

  friend bool operator==(const RPoly4&, const RPoly4&) = default;

 private:
  static std::size_t index(const Exponent& e, int bound);
  int bound_;
  std::vector<double> coeffs_;
};

RPoly4 operator+(RPoly4 a, const RPoly4& b);
RPoly4 operator-(RPoly4 a, const RPoly4& b);
RPoly4 operator*(RPoly4 a, double s);

std::size_t slot_count_for_bound(int bound);

/// Schoolbook product over all pairs of nonzero terms.
RPoly4 multiply_naive(const RPoly4& f, const RPoly4& g);

/// Per-axis strides for packing the exponents of a product into a single
/// variable: s_v = maxdeg_v(f) + maxdeg_v(g) + 1, so no two product
/// exponents share a packed index.
struct KroneckerLayout {
  std::array<std::size_t, 4> stride{};

  static KroneckerLayout for_product(const std::array<int, 4>& max_f,
                                     const std::array<int, 4>& max_g);

  std::size_t pack(const Exponent& e) const {
    return static_cast<std::size_t>(e[0]) +
           stride[0] * (static_cast<std::size_t>(e[1]) +
                        stride[1] * (static_cast<std::size_t>(e[2]) +
                                     stride[2] * static_cast<std::size_t>(e[3])));
  }
  bool fits(const Exponent& e) const {
    for (int v = 0; v < 4; ++v) {
      if (static_cast<std::size_t>(e[static_cast<std::size_t>(v)]) >= stride[static_cast<std::size_t>(v)]) return false;
    }
    return true;
  }
  /// Packed length of the product, one past its largest packed index.
  std::size_t product_length() const { return stride[0] * stride[1] * stride[2] * stride[3]; }
};

std::array<int, 4> max_axis_degrees(const RPoly4& f);

/// Packs f into a coefficient vector of length layout.product_length().
std::vector<double> kronecker_pack(const RPoly4& f, const KroneckerLayout& layout);
/// Reads a product with total-degree bound `bound` back out of packed form.
RPoly4 kronecker_unpack(std::span<const double> packed, const KroneckerLayout& layout, int bound);

/// Product through Kronecker packing and one complex FFT multiplication.
RPoly4 multiply_kronecker(const RPoly4& f, const RPoly4& g);

/// f(T x + y) for the 4x4 matrix T (row v gives the form substituted for X_v).
using Matrix4 = std::array<std::array<double, 4>, 4>;
RPoly4 affine_substitute(const RPoly4& f, const Matrix4& t, const Point4& y);

}  // namespace qpoly
