#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qpoly/complex_poly.hpp"
#include "qpoly/quaternion.hpp"

namespace qpoly {

/// sum a_l X^l with every coefficient on the left.
class OneSidedPoly {
 public:
  OneSidedPoly() = default;
  explicit OneSidedPoly(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  Quaternion operator[](std::size_t l) const { return l < coeffs_.size() ? coeffs_[l] : Quaternion{}; }

  /// Largest l with a_l != 0, -1 for the zero polynomial.
  int degree() const;

 private:
  std::vector<Quaternion> coeffs_;
};

/// left * X^power * right.
struct TwoSidedTerm {
  Quaternion left{1.0};
  std::size_t power = 0;
  Quaternion right{1.0};
};

/// sum over terms of a X^l b; several terms may share a power.
class TwoSidedPoly {
 public:
  TwoSidedPoly() = default;
  explicit TwoSidedPoly(std::vector<TwoSidedTerm> terms) : terms_(std::move(terms)) {}
  static TwoSidedPoly from_one_sided(const OneSidedPoly& p);

  const std::vector<TwoSidedTerm>& terms() const { return terms_; }
  void add_term(const Quaternion& left, std::size_t power, const Quaternion& right) {
    terms_.push_back({left, power, right});
  }

 private:
  std::vector<TwoSidedTerm> terms_;
};

/// a0 (X - a_1) ... (X - a_n).
struct RootFormPoly {
  Quaternion a0{1.0};
  std::vector<Quaternion> roots;
};

Quaternion horner_eval(const OneSidedPoly& p, const Quaternion& x);
Quaternion two_sided_eval(const TwoSidedPoly& p, const Quaternion& x);
Quaternion root_form_eval(const RootFormPoly& p, const Quaternion& x);

/// The sixteen real-coefficient polynomials q_st with
/// p(x) = sum_{s,t} e_s q_st(x) e_t, e = (1, i, j, k).
struct RealDecomposition {
  std::array<std::array<std::vector<double>, 4>, 4> cells;

  bool nonzero(int s, int t) const;
  /// Recomposes p(x) from the cells by direct Horner evaluation.
  Quaternion evaluate(const Quaternion& x) const;
};

RealDecomposition decompose_to_real(const TwoSidedPoly& p);

/// p at every point: each point is rotated into R + iR, every nonzero cell
/// is evaluated at all rotated points by complex multipoint evaluation, and
/// the values are rotated back.
std::vector<Quaternion> multieval_fast(const TwoSidedPoly& p, std::span<const Quaternion> xs,
                                       const MultipointOptions& options = {});
std::vector<Quaternion> multieval_fast(const OneSidedPoly& p, std::span<const Quaternion> xs,
                                       const MultipointOptions& options = {});

std::vector<Quaternion> multieval_naive(const TwoSidedPoly& p, std::span<const Quaternion> xs);
std::vector<Quaternion> multieval_naive(const OneSidedPoly& p, std::span<const Quaternion> xs);

struct Feasibility {
  bool feasible = true;
  std::string reason;
  explicit operator bool() const { return feasible; }
};

/// Points admit unique interpolation by degree < n iff they are pairwise
/// distinct and no three are automorphically equivalent.
Feasibility interpolation_feasible(std::span<const Quaternion> xs, double tolerance = kEqTolerance);

/// Threshold on double_determinant_ratio below which the Vandermonde matrix
/// counts as singular.
inline constexpr double kDetTolerance = 1e-9;

/// |det| of the 2n x 2n complex form of the Vandermonde matrix (x_l^m),
/// each entry z1 + z2 j becoming [[z1, z2], [-conj z2, conj z1]].
double double_determinant(std::span<const Quaternion> xs);
/// double_determinant divided by the product of the complex rows' 2-norms
/// (Hadamard's bound), so 0 <= ratio <= 1.
double double_determinant_ratio(std::span<const Quaternion> xs);

/// The p with deg p < n and p(x_l) = y_l, from the 4n x 4n real system of
/// the coefficients' components. Throws SizeMismatch, InfeasiblePoints, or
/// NumericallySingular when a pivot falls below 1e-12 of the matrix scale.
OneSidedPoly interpolate(std::span<const Quaternion> xs, std::span<const Quaternion> ys);

/// Minimum distance from a rotated point to a pole.
inline constexpr double kPoleTolerance = 1e-9;

/// sum_l (x - a_l)^-1 for real poles a_l at every point x. Rotated points
/// are fed as targets to a CauchyTree over the poles. Throws PoleCollision.
std::vector<Quaternion> nbody_multieval(std::span<const double> poles, std::span<const Quaternion> xs);
std::vector<Quaternion> nbody_naive(std::span<const double> poles, std::span<const Quaternion> xs);

}  // namespace qpoly
