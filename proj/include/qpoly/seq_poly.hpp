#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qpoly/quaternion.hpp"

namespace qpoly {

/// Finite quaternion sequence under componentwise addition and the
/// non-commutative convolution c_l = sum_t a_t * b_(l-t). There is
/// deliberately no evaluation: the convolution is not compatible with
/// substituting a quaternion for X.
class QSeq {
 public:
  QSeq() = default;
  explicit QSeq(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {}
  QSeq(std::initializer_list<Quaternion> coeffs) : coeffs_(coeffs) {}

  /// The sequence (0, 1).
  static QSeq variable() { return QSeq{Quaternion{}, Quaternion{1.0}}; }

  const std::vector<Quaternion>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  Quaternion operator[](std::size_t l) const {
    return l < coeffs_.size() ? coeffs_[l] : Quaternion{};
  }

  /// Largest |component| over all entries.
  double max_abs() const;

  friend bool operator==(const QSeq&, const QSeq&) = default;

 private:
  std::vector<Quaternion> coeffs_;
};

QSeq add(const QSeq& a, const QSeq& b);

/// Direct double loop over a_t * b_(l-t), factor order kept; the reference product.
QSeq convolve_naive(const QSeq& a, const QSeq& b);

/// Splits both sequences into their four real component sequences, runs the
/// 16 real convolutions as products of shared spectra (two forward FFTs per
/// operand, two inverse) and recombines them with kHamiltonTable.
QSeq convolve_fast(const QSeq& a, const QSeq& b);

/// Max componentwise distance between two sequences (missing entries are 0).
double max_difference(const QSeq& a, const QSeq& b);

}  // namespace qpoly
