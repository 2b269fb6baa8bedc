#include "qpoly/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "qpoly/cauchy_tree.hpp"
#include "qpoly/errors.hpp"

namespace qpoly {

CPoly::CPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CPoly::CPoly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

CPoly CPoly::from_real(std::span<const double> coeffs) {
  return CPoly(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

CPoly CPoly::linear(Complex root) { return CPoly({-root, Complex{1.0}}); }

void CPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

double CPoly::max_abs() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

int CPoly::degree() const {
  const double threshold = kDegreeTrim * max_abs();
  for (std::size_t l = coeffs_.size(); l-- > 0;) {
    if (std::abs(coeffs_[l]) > threshold) return static_cast<int>(l);
  }
  return -1;
}

Complex CPoly::horner(Complex z) const {
  Complex acc{};
  for (std::size_t l = coeffs_.size(); l-- > 0;) acc = acc * z + coeffs_[l];
  return acc;
}

CPoly operator+(const CPoly& a, const CPoly& b) {
  std::vector<Complex> c(std::max(a.size(), b.size()));
  for (std::size_t l = 0; l < c.size(); ++l) c[l] = a[l] + b[l];
  return CPoly(std::move(c));
}

CPoly operator-(const CPoly& a, const CPoly& b) {
  std::vector<Complex> c(std::max(a.size(), b.size()));
  for (std::size_t l = 0; l < c.size(); ++l) c[l] = a[l] - b[l];
  return CPoly(std::move(c));
}

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

namespace {

// Forward twiddles exp(-2 pi i k / n), k < n/2, computed directly per index
// (recurrences drift at large n) and kept per thread for reuse.
const std::vector<Complex>& twiddles(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::vector<Complex>> cache;
  std::vector<Complex>& t = cache[n];
  if (t.size() != n / 2) {
    t.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
      t[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    }
  }
  return t;
}

}  // namespace

void fft_inplace(std::span<Complex> values, bool inverse) {
  const std::size_t n = values.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw NonPowerOfTwoLength("FFT length " + std::to_string(n) + " is not a power of two");
  }
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(values[i], values[j]);
  }
  const std::vector<Complex>& twiddle = twiddles(n);
  const bool flip = inverse;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex w = flip ? std::conj(twiddle[k * step]) : twiddle[k * step];
        const Complex t = w * values[start + k + half];
        values[start + k + half] = values[start + k] - t;
        values[start + k] += t;
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (Complex& v : values) v *= scale;
  }
}

std::vector<Complex> fft(std::vector<Complex> values, bool inverse) {
  fft_inplace(values, inverse);
  return values;
}

CPoly cmul(const CPoly& p, const CPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const std::size_t len = p.size() + q.size() - 1;
  const std::size_t n = next_power_of_two(len);
  std::vector<Complex> a(n), b(n);
  std::copy(p.coeffs().begin(), p.coeffs().end(), a.begin());
  std::copy(q.coeffs().begin(), q.coeffs().end(), b.begin());
  fft_inplace(a, false);
  fft_inplace(b, false);
  for (std::size_t k = 0; k < n; ++k) a[k] *= b[k];
  fft_inplace(a, true);
  a.resize(len);
  return CPoly(std::move(a));
}

std::vector<double> convolve_real(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  const std::size_t n = next_power_of_two(len);
  // Pack a + i*b; the two spectra separate by conjugate symmetry.
  std::vector<Complex> x(n);
  for (std::size_t t = 0; t < a.size(); ++t) x[t].real(a[t]);
  for (std::size_t t = 0; t < b.size(); ++t) x[t].imag(b[t]);
  fft_inplace(x, false);
  std::vector<Complex> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex xk = x[k];
    const Complex xr = std::conj(x[(n - k) & (n - 1)]);
    const Complex fa = 0.5 * (xk + xr);
    const Complex fb = Complex{0.0, -0.5} * (xk - xr);
    y[k] = fa * fb;
  }
  fft_inplace(y, true);
  std::vector<double> c(len);
  for (std::size_t t = 0; t < len; ++t) c[t] = y[t].real();
  return c;
}

DivRem div_rem(const CPoly& p, const CPoly& d) {
  if (d.is_zero()) throw DivisorZero("division by the zero polynomial");
  const std::size_t m = d.size() - 1;
  if (p.size() <= m) return {CPoly{}, p};
  std::vector<Complex> r = p.coeffs();
  std::vector<Complex> q(p.size() - m);
  const Complex lead = d.coeffs().back();
  for (std::size_t k = p.size(); k-- > m;) {
    const Complex c = r[k] / lead;
    q[k - m] = c;
    for (std::size_t t = 0; t <= m; ++t) r[k - m + t] -= c * d.coeffs()[t];
    r[k] = 0.0;
  }
  r.resize(m);
  return {CPoly(std::move(q)), CPoly(std::move(r))};
}

CPoly derivative(const CPoly& p) {
  if (p.size() <= 1) return {};
  std::vector<Complex> c(p.size() - 1);
  for (std::size_t l = 1; l < p.size(); ++l) c[l - 1] = p.coeffs()[l] * static_cast<double>(l);
  return CPoly(std::move(c));
}

SubproductTree::SubproductTree(std::span<const Complex> points) : point_count_(points.size()) {
  if (points.empty()) return;
  std::vector<CPoly> level;
  level.reserve(points.size());
  for (const Complex& x : points) level.push_back(CPoly::linear(x));
  levels_.push_back(std::move(level));
  while (levels_.back().size() > 1) {
    const std::vector<CPoly>& below = levels_.back();
    std::vector<CPoly> up;
    up.reserve((below.size() + 1) / 2);
    for (std::size_t t = 0; t + 1 < below.size(); t += 2) up.push_back(cmul(below[t], below[t + 1]));
    if (below.size() % 2 == 1) up.push_back(below.back());
    levels_.push_back(std::move(up));
  }
}

const CPoly& SubproductTree::root() const {
  static const CPoly one({Complex{1.0}});
  return levels_.empty() ? one : levels_.back().front();
}

SubproductTree subproduct_build(std::span<const Complex> points) { return SubproductTree(points); }

std::vector<Complex> horner_eval_all(const CPoly& p, std::span<const Complex> points) {
  std::vector<Complex> out(points.size());
  for (std::size_t t = 0; t < points.size(); ++t) out[t] = p.horner(points[t]);
  return out;
}

namespace {

void descend(const SubproductTree& tree, std::size_t level, std::size_t index, const CPoly& rem,
             std::span<const Complex> points, std::size_t crossover, std::vector<Complex>& out) {
  const std::size_t width = std::size_t{1} << level;
  const std::size_t first = index * width;
  const std::size_t last = std::min(first + width, points.size());
  if (level == 0 || last - first < crossover) {
    for (std::size_t t = first; t < last; ++t) out[t] = rem.horner(points[t]);
    return;
  }
  const std::vector<CPoly>& below = tree.level(level - 1);
  for (std::size_t child = 2 * index; child < std::min(2 * index + 2, below.size()); ++child) {
    descend(tree, level - 1, child, div_rem(rem, below[child]).remainder, points, crossover, out);
  }
}

}  // namespace

std::vector<Complex> remainder_tree_eval(const CPoly& p, std::span<const Complex> points,
                                         std::size_t crossover) {
  std::vector<Complex> out(points.size());
  if (points.empty()) return out;
  const SubproductTree tree(points);
  const std::size_t top = tree.levels() - 1;
  descend(tree, top, 0, div_rem(p, tree.root()).remainder, points, std::max<std::size_t>(crossover, 1),
          out);
  return out;
}

namespace {

Complex int_power(Complex z, std::size_t e) {
  Complex result{1.0};
  while (e > 0) {
    if (e & 1) result *= z;
    z *= z;
    e >>= 1;
  }
  return result;
}

// Barycentric interpolation through the N-th roots of unity
//   q(y) = [sum_j v_j z_j / (z_j - y)] / [sum_j z_j / (z_j - y)],
// exact for deg q < N, with v_j = q(z_j) from one forward FFT.
void eval_in_disk(std::span<const std::vector<Complex>> coeffs, std::size_t n,
                  const std::vector<Complex>& nodes, const CauchyTree& tree,
                  std::span<const Complex> targets, std::span<const std::size_t> slots,
                  std::vector<std::vector<Complex>>& out) {
  if (targets.empty()) return;
  std::vector<std::vector<Complex>> weights;
  std::vector<std::vector<Complex>> values;
  weights.reserve(coeffs.size() + 1);
  for (const std::vector<Complex>& c : coeffs) {
    std::vector<Complex> v(n);
    std::copy(c.begin(), c.end(), v.begin());
    fft_inplace(v, false);
    std::vector<Complex> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = v[j] * nodes[j];
    values.push_back(std::move(v));
    weights.push_back(std::move(w));
  }
  weights.push_back(nodes);
  const auto sums = tree.sums(weights, targets);
  const std::vector<Complex>& denom = sums.back();
  const double angle_scale = static_cast<double>(n) / (2.0 * std::numbers::pi);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    // Nodes are z_j = exp(-2 pi i j / n); an exact hit takes the node value.
    const double turns = -std::arg(targets[t]) * angle_scale;
    const auto j = static_cast<std::size_t>(
        (static_cast<long long>(std::llround(turns)) % static_cast<long long>(n) +
         static_cast<long long>(n)) %
        static_cast<long long>(n));
    const bool hit = targets[t] == nodes[j];
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      out[c][slots[t]] = hit ? values[c][j] : sums[c][t] / denom[t];
    }
  }
}

}  // namespace

std::vector<std::vector<Complex>> multipoint_eval_many(std::span<const CPoly> polys,
                                                       std::span<const Complex> points,
                                                       const MultipointOptions& options) {
  std::vector<std::vector<Complex>> out(polys.size(), std::vector<Complex>(points.size()));
  std::size_t longest = 0;
  for (const CPoly& p : polys) longest = std::max(longest, p.size());
  if (points.empty() || longest == 0) return out;

  if (points.size() < options.crossover || longest <= options.crossover) {
    for (std::size_t c = 0; c < polys.size(); ++c) out[c] = horner_eval_all(polys[c], points);
    return out;
  }

  const std::size_t n = next_power_of_two(longest);
  std::vector<Complex> nodes(n);
  for (std::size_t j = 0; j < n; ++j) {
    nodes[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(n));
  }
  const CauchyTree tree(nodes);

  std::vector<Complex> inner, outer;
  std::vector<std::size_t> inner_slot, outer_slot;
  for (std::size_t t = 0; t < points.size(); ++t) {
    if (std::abs(points[t]) <= 1.0) {
      inner.push_back(points[t]);
      inner_slot.push_back(t);
    } else {
      outer.push_back(1.0 / points[t]);
      outer_slot.push_back(t);
    }
  }

  std::vector<std::vector<Complex>> coeffs;
  coeffs.reserve(polys.size());
  for (const CPoly& p : polys) coeffs.push_back(p.coeffs());
  eval_in_disk(coeffs, n, nodes, tree, inner, inner_slot, out);

  if (!outer.empty()) {
    // q(y) = y^d * rev(q)(1/y) with d = size - 1.
    for (std::vector<Complex>& c : coeffs) std::reverse(c.begin(), c.end());
    eval_in_disk(coeffs, n, nodes, tree, outer, outer_slot, out);
    for (std::size_t c = 0; c < polys.size(); ++c) {
      if (polys[c].is_zero()) continue;
      const std::size_t d = polys[c].size() - 1;
      for (const std::size_t slot : outer_slot) out[c][slot] *= int_power(points[slot], d);
    }
  }
  return out;
}

std::vector<Complex> multipoint_eval(const CPoly& p, std::span<const Complex> points,
                                     const MultipointOptions& options) {
  return std::move(multipoint_eval_many(std::span<const CPoly>(&p, 1), points, options).front());
}

}  // namespace qpoly
