#include "qpoly/map_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "dense_lu.hpp"
#include "qpoly/complex_poly.hpp"
#include "qpoly/errors.hpp"

namespace qpoly {

QuadruplePoly QuadruplePoly::constant(const Quaternion& a) {
  QuadruplePoly p;
  for (int m = 0; m < 4; ++m) p.component(m) = RPoly4::constant(a[m]);
  return p;
}

QuadruplePoly QuadruplePoly::variable() {
  QuadruplePoly p;
  for (int m = 0; m < 4; ++m) p.component(m) = RPoly4::variable(m);
  return p;
}

QuadruplePoly QuadruplePoly::projection(int axis) {
  QuadruplePoly p;
  p.component(0) = RPoly4::variable(axis);
  return p;
}

int QuadruplePoly::bound() const {
  int b = 0;
  for (const RPoly4& f : f_) b = std::max(b, f.bound());
  return b;
}

double QuadruplePoly::max_abs() const {
  double m = 0.0;
  for (const RPoly4& f : f_) m = std::max(m, f.max_abs());
  return m;
}

bool QuadruplePoly::is_zero() const {
  return std::all_of(f_.begin(), f_.end(), [](const RPoly4& f) { return f.is_zero(); });
}

Quaternion QuadruplePoly::evaluate(const Quaternion& x) const {
  const Point4 pt = x.components();
  return {f_[0].evaluate(pt), f_[1].evaluate(pt), f_[2].evaluate(pt), f_[3].evaluate(pt)};
}

double QuadruplePoly::evaluate_abs(const Quaternion& x) const {
  const Point4 pt = x.components();
  double s = 0.0;
  for (const RPoly4& f : f_) s += f.evaluate_abs(pt);
  return s;
}

void QuadruplePoly::snap(double threshold) {
  for (RPoly4& f : f_) f.snap(threshold);
}

QuadruplePoly& QuadruplePoly::operator+=(const QuadruplePoly& o) {
  for (std::size_t m = 0; m < 4; ++m) f_[m] += o.f_[m];
  return *this;
}

QuadruplePoly& QuadruplePoly::operator-=(const QuadruplePoly& o) {
  for (std::size_t m = 0; m < 4; ++m) f_[m] -= o.f_[m];
  return *this;
}

QuadruplePoly add(const QuadruplePoly& p, const QuadruplePoly& q) {
  QuadruplePoly r = p;
  return r += q;
}

QuadruplePoly sub(const QuadruplePoly& p, const QuadruplePoly& q) {
  QuadruplePoly r = p;
  return r -= q;
}

QuadruplePoly mul_naive(const QuadruplePoly& p, const QuadruplePoly& q) {
  std::array<RPoly4, 4> out;
  for (const BasisProduct& t : kHamiltonTable) {
    const RPoly4& a = p.component(t.left);
    const RPoly4& b = q.component(t.right);
    if (a.is_zero() || b.is_zero()) continue;
    RPoly4 prod = multiply_naive(a, b);
    if (t.sign < 0) prod *= -1.0;
    out[static_cast<std::size_t>(t.target)] += prod;
  }
  return QuadruplePoly(std::move(out));
}

namespace {

std::array<int, 4> joint_axis_degrees(const QuadruplePoly& p) {
  std::array<int, 4> m{0, 0, 0, 0};
  for (const RPoly4& f : p.components()) {
    const std::array<int, 4> d = max_axis_degrees(f);
    for (std::size_t v = 0; v < 4; ++v) m[v] = std::max(m[v], d[v]);
  }
  return m;
}

double l2_norm(const QuadruplePoly& p) {
  double s = 0.0;
  for (const RPoly4& f : p.components()) {
    for (const double c : f.data()) s += c * c;
  }
  return std::sqrt(s);
}

}  // namespace

QuadruplePoly mul_fast(const QuadruplePoly& p, const QuadruplePoly& q) {
  if (p.is_zero() || q.is_zero()) return QuadruplePoly();
  const KroneckerLayout layout = KroneckerLayout::for_product(joint_axis_degrees(p), joint_axis_degrees(q));
  const std::size_t n = next_power_of_two(layout.product_length());

  auto spectrum = [&](const RPoly4& f) {
    std::vector<Complex> s(n);
    if (f.is_zero()) return s;
    f.for_each_slot([&](const Exponent& e, double c) {
      if (c != 0.0) s[layout.pack(e)] = c;
    });
    fft_inplace(s, false);
    return s;
  };
  std::array<std::vector<Complex>, 4> sp, sq;
  for (int m = 0; m < 4; ++m) {
    sp[static_cast<std::size_t>(m)] = spectrum(p.component(m));
    sq[static_cast<std::size_t>(m)] = spectrum(q.component(m));
  }

  const int bound = p.bound() + q.bound();
  const double eps = std::numeric_limits<double>::epsilon();
  const double noise = 8.0 * eps * std::log2(static_cast<double>(n) + 1.0) * l2_norm(p) * l2_norm(q);

  std::array<RPoly4, 4> out;
  for (int target = 0; target < 4; ++target) {
    std::vector<Complex> acc(n);
    bool any = false;
    for (const BasisProduct& t : kHamiltonTable) {
      if (t.target != target) continue;
      if (p.component(t.left).is_zero() || q.component(t.right).is_zero()) continue;
      const std::vector<Complex>& a = sp[static_cast<std::size_t>(t.left)];
      const std::vector<Complex>& b = sq[static_cast<std::size_t>(t.right)];
      const double sign = static_cast<double>(t.sign);
      for (std::size_t k = 0; k < n; ++k) acc[k] += sign * (a[k] * b[k]);
      any = true;
    }
    if (!any) continue;
    fft_inplace(acc, true);
    std::vector<double> real(n);
    for (std::size_t k = 0; k < n; ++k) real[k] = acc[k].real();
    RPoly4 f = kronecker_unpack(real, layout, bound);
    f.snap(noise);
    out[static_cast<std::size_t>(target)] = std::move(f);
  }
  return QuadruplePoly(std::move(out));
}

int degree(const QuadruplePoly& p) {
  const double scale = p.max_abs();
  if (scale == 0.0) return kMinusInfinity;
  int deg = kMinusInfinity;
  for (const RPoly4& f : p.components()) deg = std::max(deg, f.total_degree(kDegreeTrim * scale));
  return deg;
}

double max_difference(const QuadruplePoly& p, const QuadruplePoly& q) {
  double m = 0.0;
  for (int c = 0; c < 4; ++c) {
    const RPoly4& a = p.component(c);
    const RPoly4& b = q.component(c);
    const RPoly4& wide = a.bound() >= b.bound() ? a : b;
    wide.for_each_slot([&](const Exponent& e, double) { m = std::max(m, std::abs(a.coeff(e) - b.coeff(e))); });
  }
  return m;
}

namespace {

// Eliminates the trailing unevaluated axis. `level` maps exponent prefixes
// of length k (entries past k are zero) to values over the grid of axes
// k..3; the result does the same for prefixes of length k-1.
using Level = std::map<Exponent, std::vector<double>>;

std::array<Level, 4> eliminate_axis(const std::array<Level, 4>& levels, int k, int bound,
                                    const std::vector<double>& points, std::size_t cells) {
  const std::size_t axis = static_cast<std::size_t>(k - 1);
  std::vector<CPoly> polys;
  std::vector<std::pair<int, Exponent>> keys;
  for (int m = 0; m < 4; ++m) {
    const Level& level = levels[static_cast<std::size_t>(m)];
    std::map<Exponent, int> prefixes;
    for (const auto& [e, vals] : level) {
      Exponent head = e;
      head[axis] = 0;
      prefixes.emplace(head, 0);
    }
    for (const auto& [head, unused] : prefixes) {
      int used = 0;
      for (std::size_t v = 0; v < axis; ++v) used += head[v];
      for (std::size_t g = 0; g < cells; ++g) {
        std::vector<Complex> coeffs(static_cast<std::size_t>(bound - used) + 1);
        for (int d = 0; d <= bound - used; ++d) {
          Exponent e = head;
          e[axis] = d;
          const auto it = level.find(e);
          if (it != level.end()) coeffs[static_cast<std::size_t>(d)] = it->second[g];
        }
        polys.emplace_back(std::move(coeffs));
      }
      keys.emplace_back(m, head);
    }
  }
  std::vector<Complex> pts(points.begin(), points.end());
  const std::vector<std::vector<Complex>> values = multipoint_eval_many(polys, pts);

  std::array<Level, 4> next;
  std::size_t poly = 0;
  for (const auto& [m, head] : keys) {
    std::vector<double> out(points.size() * cells);
    for (std::size_t g = 0; g < cells; ++g, ++poly) {
      for (std::size_t a = 0; a < points.size(); ++a) out[a * cells + g] = values[poly][a].real();
    }
    next[static_cast<std::size_t>(m)].emplace(head, std::move(out));
  }
  return next;
}

}  // namespace

GridValues grid_multieval(const QuadruplePoly& p, const GridAxes& axes) {
  GridValues grid;
  for (std::size_t v = 0; v < 4; ++v) grid.shape[v] = axes[v].size();
  const std::size_t total = grid.shape[0] * grid.shape[1] * grid.shape[2] * grid.shape[3];
  grid.values.assign(total, Quaternion{});
  if (total == 0) return grid;

  const int bound = p.bound();
  std::array<Level, 4> levels;
  for (int m = 0; m < 4; ++m) {
    p.component(m).with_bound(bound).for_each_slot([&](const Exponent& e, double c) {
      if (c != 0.0) levels[static_cast<std::size_t>(m)].emplace(e, std::vector<double>{c});
    });
  }
  std::size_t cells = 1;
  for (int k = 4; k >= 1; --k) {
    levels = eliminate_axis(levels, k, bound, axes[static_cast<std::size_t>(k - 1)], cells);
    cells *= axes[static_cast<std::size_t>(k - 1)].size();
  }
  for (int m = 0; m < 4; ++m) {
    const Level& level = levels[static_cast<std::size_t>(m)];
    if (level.empty()) continue;
    const std::vector<double>& vals = level.begin()->second;
    for (std::size_t t = 0; t < total; ++t) {
      double& slot = m == 0 ? grid.values[t].re : m == 1 ? grid.values[t].im_i
                                            : m == 2 ? grid.values[t].im_j
                                                     : grid.values[t].im_k;
      slot = vals[t];
    }
  }
  return grid;
}

QuadruplePoly affine_substitute(const QuadruplePoly& p, const Matrix4& t, const Point4& y) {
  std::array<RPoly4, 4> out;
  for (int m = 0; m < 4; ++m) out[static_cast<std::size_t>(m)] = affine_substitute(p.component(m), t, y);
  return QuadruplePoly(std::move(out));
}

double determinant(const Matrix4& t) {
  std::vector<double> a;
  a.reserve(16);
  for (const auto& row : t) a.insert(a.end(), row.begin(), row.end());
  return detail::lu_determinant(detail::lu_decompose(std::move(a), 4));
}

GridValues affine_grid_multieval(const QuadruplePoly& p, const Matrix4& t, const Point4& y,
                                 const GridAxes& axes) {
  if (!(std::abs(determinant(t)) > 1e-12)) throw SingularTransform("affine transform is singular");
  return grid_multieval(affine_substitute(p, t, y), axes);
}

ZeroWitness random_zero_witness(const QuadruplePoly& p, std::span<const double> samples,
                                std::mt19937_64& rng) {
  if (samples.empty()) throw EmptySampleSet("sample set is empty");
  std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
  ZeroWitness w;
  w.point = {samples[pick(rng)], samples[pick(rng)], samples[pick(rng)], samples[pick(rng)]};
  w.value = p.evaluate(w.point);
  w.magnitude = p.evaluate_abs(w.point);
  return w;
}

}  // namespace qpoly
