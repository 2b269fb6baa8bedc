#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qpoly {

/// Tree code for Cauchy sums  sum_j w_j / (s_j - t)  over fixed sources s_j.
///
/// Sources are split recursively at the median of the wider bounding-box
/// side. A node whose enclosing radius is at most `opening` times its
/// distance to the target is replaced by its truncated multipole series
/// -sum_k M_k / (t - c)^(k+1), M_k = sum w_j (s_j - c)^k; the truncation
/// error is bounded by opening^order / (1 - opening) relative to
/// sum |w_j| / |t - c|. Leaves are summed directly. Each target visits
/// O(log n) nodes for sources on curves or well spread sets.
class CauchyTree {
 public:
  struct Options {
    int order = 44;
    double opening = 0.5;
    std::size_t leaf_size = 24;
  };

  explicit CauchyTree(std::span<const std::complex<double>> sources);
  CauchyTree(std::span<const std::complex<double>> sources, Options options);

  std::size_t size() const { return sources_.size(); }

  /// result[c][t] = sum_j weights[c][j] / (sources[j] - targets[t]) where
  /// weights[c] is indexed like the constructor's sources. A target equal
  /// to a source yields a non-finite sum.
  std::vector<std::vector<std::complex<double>>> sums(
      std::span<const std::vector<std::complex<double>>> weights,
      std::span<const std::complex<double>> targets) const;

 private:
  struct Node {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::complex<double> center;
    double radius = 0.0;
    int left = -1;
    int right = -1;
  };

  int build(std::size_t begin, std::size_t end);

  Options options_;
  std::vector<std::complex<double>> sources_;  // tree order
  std::vector<std::size_t> original_index_;    // tree order -> input order
  std::vector<Node> nodes_;
};

}  // namespace qpoly
