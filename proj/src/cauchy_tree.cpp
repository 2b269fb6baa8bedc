#include "qpoly/cauchy_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qpoly {

using Complex = std::complex<double>;

CauchyTree::CauchyTree(std::span<const Complex> sources) : CauchyTree(sources, Options{}) {}

CauchyTree::CauchyTree(std::span<const Complex> sources, Options options)
    : options_(options), sources_(sources.begin(), sources.end()) {
  original_index_.resize(sources_.size());
  std::iota(original_index_.begin(), original_index_.end(), std::size_t{0});
  if (!sources_.empty()) {
    nodes_.reserve(4 * (sources_.size() / std::max<std::size_t>(options_.leaf_size, 1) + 1));
    build(0, sources_.size());
    std::vector<Complex> ordered(sources_.size());
    for (std::size_t t = 0; t < ordered.size(); ++t) ordered[t] = sources_[original_index_[t]];
    sources_ = std::move(ordered);
  }
}

// Builds over original_index_[begin, end) using the still unpermuted sources_.
int CauchyTree::build(std::size_t begin, std::size_t end) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back(Node{begin, end, {}, 0.0, -1, -1});

  double lo_x = INFINITY, hi_x = -INFINITY, lo_y = INFINITY, hi_y = -INFINITY;
  for (std::size_t t = begin; t < end; ++t) {
    const Complex s = sources_[original_index_[t]];
    lo_x = std::min(lo_x, s.real()); hi_x = std::max(hi_x, s.real());
    lo_y = std::min(lo_y, s.imag()); hi_y = std::max(hi_y, s.imag());
  }
  const Complex center{0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)};
  double radius = 0.0;
  for (std::size_t t = begin; t < end; ++t) {
    radius = std::max(radius, std::abs(sources_[original_index_[t]] - center));
  }
  nodes_[id].center = center;
  nodes_[id].radius = radius;

  if (end - begin <= options_.leaf_size || radius == 0.0) return id;

  const bool split_x = (hi_x - lo_x) >= (hi_y - lo_y);
  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(original_index_.begin() + static_cast<std::ptrdiff_t>(begin),
                   original_index_.begin() + static_cast<std::ptrdiff_t>(mid),
                   original_index_.begin() + static_cast<std::ptrdiff_t>(end),
                   [&](std::size_t a, std::size_t b) {
                     return split_x ? sources_[a].real() < sources_[b].real()
                                    : sources_[a].imag() < sources_[b].imag();
                   });
  const int left = build(begin, mid);
  const int right = build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

std::vector<std::vector<Complex>> CauchyTree::sums(std::span<const std::vector<Complex>> weights,
                                                   std::span<const Complex> targets) const {
  const std::size_t channels = weights.size();
  const std::size_t order = static_cast<std::size_t>(options_.order);
  std::vector<std::vector<Complex>> result(channels, std::vector<Complex>(targets.size()));
  if (channels == 0 || sources_.empty()) return result;

  // Weights in tree order, interleaved by channel.
  std::vector<Complex> w(sources_.size() * channels);
  for (std::size_t t = 0; t < sources_.size(); ++t) {
    for (std::size_t c = 0; c < channels; ++c) w[t * channels + c] = weights[c][original_index_[t]];
  }

  std::vector<std::vector<double>> binom(order, std::vector<double>(order, 0.0));
  for (std::size_t k = 0; k < order; ++k) {
    binom[k][0] = binom[k][k] = 1.0;
    for (std::size_t m = 1; m < k; ++m) binom[k][m] = binom[k - 1][m - 1] + binom[k - 1][m];
  }

  // moments[(node * channels + c) * order + k]
  const std::size_t stride = channels * order;
  std::vector<Complex> moments(nodes_.size() * stride);
  std::vector<Complex> dpow(order);
  for (std::size_t n = nodes_.size(); n-- > 0;) {
    const Node& node = nodes_[n];
    Complex* m = moments.data() + n * stride;
    if (node.left < 0) {
      for (std::size_t t = node.begin; t < node.end; ++t) {
        const Complex d = sources_[t] - node.center;
        Complex p{1.0};
        for (std::size_t k = 0; k < order; ++k) {
          for (std::size_t c = 0; c < channels; ++c) m[c * order + k] += w[t * channels + c] * p;
          p *= d;
        }
      }
      continue;
    }
    for (const int child : {node.left, node.right}) {
      const Complex d = nodes_[child].center - node.center;
      dpow[0] = 1.0;
      for (std::size_t k = 1; k < order; ++k) dpow[k] = dpow[k - 1] * d;
      const Complex* mc = moments.data() + static_cast<std::size_t>(child) * stride;
      for (std::size_t c = 0; c < channels; ++c) {
        for (std::size_t k = 0; k < order; ++k) {
          Complex acc{};
          for (std::size_t j = 0; j <= k; ++j) acc += binom[k][j] * dpow[k - j] * mc[c * order + j];
          m[c * order + k] += acc;
        }
      }
    }
  }

  std::vector<int> stack;
  std::vector<Complex> acc(channels);
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const Complex target = targets[ti];
    std::fill(acc.begin(), acc.end(), Complex{});
    stack.assign(1, 0);
    while (!stack.empty()) {
      const Node& node = nodes_[static_cast<std::size_t>(stack.back())];
      const std::size_t n = static_cast<std::size_t>(stack.back());
      stack.pop_back();
      const bool leaf = node.left < 0;
      const std::size_t count = node.end - node.begin;
      const Complex diff = target - node.center;
      const double dist = std::abs(diff);
      if (!(leaf && count <= order) && node.radius <= options_.opening * dist) {
        const Complex z = 1.0 / diff;
        const Complex* m = moments.data() + n * stride;
        for (std::size_t c = 0; c < channels; ++c) {
          const Complex* mk = m + c * order;
          Complex h = mk[order - 1];
          for (std::size_t k = order - 1; k-- > 0;) h = h * z + mk[k];
          acc[c] -= h * z;
        }
      } else if (leaf) {
        for (std::size_t t = node.begin; t < node.end; ++t) {
          const Complex d = sources_[t] - target;
          const Complex inv = std::conj(d) / std::norm(d);
          for (std::size_t c = 0; c < channels; ++c) acc[c] += w[t * channels + c] * inv;
        }
      } else {
        stack.push_back(node.left);
        stack.push_back(node.right);
      }
    }
    for (std::size_t c = 0; c < channels; ++c) result[c][ti] = acc[c];
  }
  return result;
}

}  // namespace qpoly
