#pragma once

#include <array>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "qpoly/quaternion.hpp"
#include "qpoly/rpoly4.hpp"

namespace qpoly {

/// A polynomial mapping H -> H stored as its four real coordinate
/// functions: p(x) = f0(x) + f1(x) i + f2(x) j + f3(x) k, each f_m a real
/// polynomial in the coordinates (Re x, Im_i x, Im_j x, Im_k x).
class QuadruplePoly {
 public:
  QuadruplePoly() = default;
  explicit QuadruplePoly(std::array<RPoly4, 4> components) : f_(std::move(components)) {}

  static QuadruplePoly constant(const Quaternion& a);
  /// The identity mapping X, components (X0, X1, X2, X3).
  static QuadruplePoly variable();
  /// Real-valued coordinate map x -> x[axis], i.e. components (X_axis, 0, 0, 0).
  static QuadruplePoly projection(int axis);

  const RPoly4& component(int m) const { return f_[static_cast<std::size_t>(m)]; }
  RPoly4& component(int m) { return f_[static_cast<std::size_t>(m)]; }
  const std::array<RPoly4, 4>& components() const { return f_; }

  /// Largest stored total-degree bound over the components.
  int bound() const;
  double max_abs() const;
  bool is_zero() const;

  Quaternion evaluate(const Quaternion& x) const;
  /// Componentwise sum of |coefficient| * |x|^e, bounding every |f_m(x)|.
  double evaluate_abs(const Quaternion& x) const;

  /// Drops coefficients with |c| <= threshold in every component.
  void snap(double threshold);

  QuadruplePoly& operator+=(const QuadruplePoly& o);
  QuadruplePoly& operator-=(const QuadruplePoly& o);

  friend bool operator==(const QuadruplePoly&, const QuadruplePoly&) = default;

 private:
  std::array<RPoly4, 4> f_;
};

QuadruplePoly add(const QuadruplePoly& p, const QuadruplePoly& q);
QuadruplePoly sub(const QuadruplePoly& p, const QuadruplePoly& q);
inline QuadruplePoly operator+(const QuadruplePoly& p, const QuadruplePoly& q) { return add(p, q); }
inline QuadruplePoly operator-(const QuadruplePoly& p, const QuadruplePoly& q) { return sub(p, q); }

/// Product through the 16-term table with schoolbook component products.
QuadruplePoly mul_naive(const QuadruplePoly& p, const QuadruplePoly& q);

/// Same product with all 16 component products done in one Kronecker
/// layout: 8 forward FFTs, the table applied to the spectra, 4 inverse FFTs.
/// Round-off below the FFT noise level is snapped to zero.
QuadruplePoly mul_fast(const QuadruplePoly& p, const QuadruplePoly& q);

/// Max of the component total degrees, ignoring coefficients below
/// 1e-9 of the largest one; kMinusInfinity for the zero mapping.
int degree(const QuadruplePoly& p);

/// Largest |difference| over all coefficients of all components.
double max_difference(const QuadruplePoly& p, const QuadruplePoly& q);

/// Quaternion values on a product grid A0 x A1 x A2 x A3, a0 slowest.
struct GridValues {
  std::array<std::size_t, 4> shape{};
  std::vector<Quaternion> values;

  const Quaternion& at(std::size_t a0, std::size_t a1, std::size_t a2, std::size_t a3) const {
    return values[((a0 * shape[1] + a1) * shape[2] + a2) * shape[3] + a3];
  }
};

using GridAxes = std::array<std::vector<double>, 4>;

/// Values of p at every grid point, one axis at a time: the trailing axis is
/// eliminated first by batched univariate multipoint evaluation.
GridValues grid_multieval(const QuadruplePoly& p, const GridAxes& axes);

/// q with q(x) = p(T x + y) coordinatewise.
QuadruplePoly affine_substitute(const QuadruplePoly& p, const Matrix4& t, const Point4& y);

/// Values of p on the image T G + y of the grid G. Throws SingularTransform
/// when |det T| <= 1e-12.
GridValues affine_grid_multieval(const QuadruplePoly& p, const Matrix4& t, const Point4& y,
                                 const GridAxes& axes);

double determinant(const Matrix4& t);

struct ZeroWitness {
  Quaternion point;
  Quaternion value;
  /// evaluate_abs at the point; values below a small multiple of it are
  /// indistinguishable from zero.
  double magnitude = 0.0;
};

/// Evaluates p at a point drawn uniformly from A^4. Throws EmptySampleSet.
ZeroWitness random_zero_witness(const QuadruplePoly& p, std::span<const double> samples,
                                std::mt19937_64& rng);

}  // namespace qpoly
