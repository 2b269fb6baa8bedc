#include "qpoly/rpoly4.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpoly/complex_poly.hpp"

namespace qpoly {

namespace {

// Number of exponent tuples in k variables with sum <= n, i.e. C(n + k, k).
std::size_t tuples(int n, int k) {
  if (n < 0) return 0;
  std::size_t r = 1;
  for (int t = 1; t <= k; ++t) r = r * static_cast<std::size_t>(n + t) / static_cast<std::size_t>(t);
  return r;
}

}  // namespace

std::size_t slot_count_for_bound(int bound) { return tuples(bound, 4); }

RPoly4::RPoly4(int bound) : bound_(std::max(bound, 0)), coeffs_(slot_count_for_bound(bound_), 0.0) {}

RPoly4 RPoly4::constant(double c) {
  RPoly4 p(0);
  p.coeffs_[0] = c;
  return p;
}

RPoly4 RPoly4::variable(int axis) {
  RPoly4 p(1);
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(axis)] = 1;
  p.at(e) = 1.0;
  return p;
}

std::size_t RPoly4::index(const Exponent& e, int bound) {
  const int m1 = bound - e[0];
  const int m2 = m1 - e[1];
  const int m3 = m2 - e[2];
  return (tuples(bound, 4) - tuples(m1, 4)) + (tuples(m1, 3) - tuples(m2, 3)) +
         (tuples(m2, 2) - tuples(m3, 2)) + static_cast<std::size_t>(e[3]);
}

double RPoly4::coeff(const Exponent& e) const {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[3] < 0) return 0.0;
  if (e[0] + e[1] + e[2] + e[3] > bound_) return 0.0;
  return coeffs_[index(e, bound_)];
}

double& RPoly4::at(const Exponent& e) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[3] < 0 || e[0] + e[1] + e[2] + e[3] > bound_) {
    throw std::out_of_range("exponent outside the stored degree bound");
  }
  return coeffs_[index(e, bound_)];
}

int RPoly4::total_degree(double threshold) const {
  int deg = kMinusInfinity;
  for_each_slot([&](const Exponent& e, double c) {
    if (std::abs(c) > threshold) deg = std::max(deg, e[0] + e[1] + e[2] + e[3]);
  });
  return deg;
}

int RPoly4::max_axis_degree(int axis) const {
  int deg = 0;
  for_each_slot([&](const Exponent& e, double c) {
    if (c != 0.0) deg = std::max(deg, e[static_cast<std::size_t>(axis)]);
  });
  return deg;
}

double RPoly4::max_abs() const {
  double m = 0.0;
  for (const double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double RPoly4::l1_norm() const {
  double s = 0.0;
  for (const double c : coeffs_) s += std::abs(c);
  return s;
}

bool RPoly4::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

namespace {

template <class Coord>
double eval_impl(const RPoly4& f, const Point4& x, Coord coord) {
  const int d = f.bound();
  std::array<std::vector<double>, 4> pw;
  for (std::size_t v = 0; v < 4; ++v) {
    pw[v].resize(static_cast<std::size_t>(d) + 1);
    pw[v][0] = 1.0;
    for (int e = 1; e <= d; ++e) pw[v][static_cast<std::size_t>(e)] = pw[v][static_cast<std::size_t>(e - 1)] * coord(x[v]);
  }
  double s = 0.0;
  f.for_each_slot([&](const Exponent& e, double c) {
    if (c == 0.0) return;
    s += coord(c) * pw[0][static_cast<std::size_t>(e[0])] * pw[1][static_cast<std::size_t>(e[1])] *
         pw[2][static_cast<std::size_t>(e[2])] * pw[3][static_cast<std::size_t>(e[3])];
  });
  return s;
}

}  // namespace

double RPoly4::evaluate(const Point4& x) const {
  return eval_impl(*this, x, [](double v) { return v; });
}

double RPoly4::evaluate_abs(const Point4& x) const {
  return eval_impl(*this, x, [](double v) { return std::abs(v); });
}

RPoly4 RPoly4::with_bound(int bound) const {
  RPoly4 out(bound);
  for_each_slot([&](const Exponent& e, double c) {
    if (c != 0.0 && e[0] + e[1] + e[2] + e[3] <= out.bound_) out.at(e) = c;
  });
  return out;
}

void RPoly4::snap(double threshold) {
  for (double& c : coeffs_) {
    if (std::abs(c) <= threshold) c = 0.0;
  }
  const int deg = total_degree();
  const int target = deg == kMinusInfinity ? 0 : deg;
  if (target != bound_) *this = with_bound(target);
}

RPoly4& RPoly4::operator+=(const RPoly4& o) {
  if (o.bound_ > bound_) *this = with_bound(o.bound_);
  if (o.bound_ == bound_) {
    for (std::size_t t = 0; t < coeffs_.size(); ++t) coeffs_[t] += o.coeffs_[t];
  } else {
    o.for_each_slot([&](const Exponent& e, double c) {
      if (c != 0.0) at(e) += c;
    });
  }
  return *this;
}

RPoly4& RPoly4::operator-=(const RPoly4& o) {
  RPoly4 neg = o;
  neg *= -1.0;
  return *this += neg;
}

RPoly4& RPoly4::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

RPoly4 operator+(RPoly4 a, const RPoly4& b) { return a += b; }
RPoly4 operator-(RPoly4 a, const RPoly4& b) { return a -= b; }
RPoly4 operator*(RPoly4 a, double s) { return a *= s; }

RPoly4 multiply_naive(const RPoly4& f, const RPoly4& g) {
  struct Term {
    Exponent e;
    double c;
  };
  std::vector<Term> tf, tg;
  f.for_each_slot([&](const Exponent& e, double c) {
    if (c != 0.0) tf.push_back({e, c});
  });
  g.for_each_slot([&](const Exponent& e, double c) {
    if (c != 0.0) tg.push_back({e, c});
  });
  RPoly4 out(f.bound() + g.bound());
  for (const Term& a : tf) {
    for (const Term& b : tg) {
      out.at({a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}) += a.c * b.c;
    }
  }
  return out;
}

std::array<int, 4> max_axis_degrees(const RPoly4& f) {
  std::array<int, 4> m{0, 0, 0, 0};
  f.for_each_slot([&](const Exponent& e, double c) {
    if (c == 0.0) return;
    for (std::size_t v = 0; v < 4; ++v) m[v] = std::max(m[v], e[v]);
  });
  return m;
}

KroneckerLayout KroneckerLayout::for_product(const std::array<int, 4>& max_f,
                                             const std::array<int, 4>& max_g) {
  KroneckerLayout layout;
  for (std::size_t v = 0; v < 4; ++v) {
    layout.stride[v] = static_cast<std::size_t>(max_f[v] + max_g[v] + 1);
  }
  return layout;
}

std::vector<double> kronecker_pack(const RPoly4& f, const KroneckerLayout& layout) {
  std::vector<double> packed(layout.product_length(), 0.0);
  f.for_each_slot([&](const Exponent& e, double c) {
    if (c != 0.0) packed[layout.pack(e)] = c;
  });
  return packed;
}

RPoly4 kronecker_unpack(std::span<const double> packed, const KroneckerLayout& layout, int bound) {
  RPoly4 out(bound);
  std::size_t idx = 0;
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (int c = 0; a + b + c <= bound; ++c)
        for (int d = 0; a + b + c + d <= bound; ++d, ++idx) {
          const Exponent e{a, b, c, d};
          if (!layout.fits(e)) continue;
          const std::size_t k = layout.pack(e);
          if (k < packed.size()) out.mutable_data()[idx] = packed[k];
        }
  return out;
}

RPoly4 multiply_kronecker(const RPoly4& f, const RPoly4& g) {
  const KroneckerLayout layout = KroneckerLayout::for_product(max_axis_degrees(f), max_axis_degrees(g));
  const std::vector<double> pf = kronecker_pack(f, layout);
  const std::vector<double> pg = kronecker_pack(g, layout);
  const std::vector<double> prod = convolve_real(pf, pg);
  return kronecker_unpack(prod, layout, f.bound() + g.bound());
}

namespace {

// p * (sum_w row[w] X_w + shift).
RPoly4 mul_linear(const RPoly4& p, const std::array<double, 4>& row, double shift) {
  RPoly4 out(p.bound() + 1);
  p.for_each_slot([&](const Exponent& e, double c) {
    if (c == 0.0) return;
    if (shift != 0.0) out.at(e) += c * shift;
    for (std::size_t w = 0; w < 4; ++w) {
      if (row[w] == 0.0) continue;
      Exponent up = e;
      ++up[w];
      out.at(up) += c * row[w];
    }
  });
  return out;
}

// Horner in axis `axis` over the exponents still free after `prefix`.
RPoly4 compose(const RPoly4& f, const Matrix4& t, const Point4& y, std::size_t axis,
               Exponent prefix, int remaining) {
  if (axis == 4) return RPoly4::constant(f.coeff(prefix));
  RPoly4 acc(0);
  for (int e = remaining; e >= 0; --e) {
    prefix[axis] = e;
    RPoly4 inner = compose(f, t, y, axis + 1, prefix, remaining - e);
    acc = e == remaining ? std::move(inner) : mul_linear(acc, t[axis], y[axis]) + inner;
  }
  return acc;
}

}  // namespace

RPoly4 affine_substitute(const RPoly4& f, const Matrix4& t, const Point4& y) {
  RPoly4 out = compose(f, t, y, 0, Exponent{0, 0, 0, 0}, f.bound());
  return out.with_bound(f.bound());
}

}  // namespace qpoly
