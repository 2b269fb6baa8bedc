#include "qpoly/one_sided.hpp"

#include <algorithm>
#include <cmath>

#include "dense_lu.hpp"
#include "qpoly/cauchy_tree.hpp"
#include "qpoly/errors.hpp"

namespace qpoly {

namespace {

constexpr std::array<Quaternion, 4> kBasis{Quaternion{1, 0, 0, 0}, Quaternion{0, 1, 0, 0},
                                           Quaternion{0, 0, 1, 0}, Quaternion{0, 0, 0, 1}};

}  // namespace

int OneSidedPoly::degree() const {
  for (std::size_t l = coeffs_.size(); l-- > 0;) {
    if (coeffs_[l] != Quaternion{}) return static_cast<int>(l);
  }
  return -1;
}

TwoSidedPoly TwoSidedPoly::from_one_sided(const OneSidedPoly& p) {
  TwoSidedPoly out;
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (p[l] != Quaternion{}) out.add_term(p[l], l, Quaternion{1.0});
  }
  return out;
}

Quaternion horner_eval(const OneSidedPoly& p, const Quaternion& x) {
  Quaternion acc;
  for (std::size_t l = p.size(); l-- > 0;) acc = acc * x + p[l];
  return acc;
}

Quaternion two_sided_eval(const TwoSidedPoly& p, const Quaternion& x) {
  std::size_t top = 0;
  for (const TwoSidedTerm& t : p.terms()) top = std::max(top, t.power);
  std::vector<Quaternion> powers(top + 1);
  powers[0] = Quaternion{1.0};
  for (std::size_t l = 1; l <= top; ++l) powers[l] = powers[l - 1] * x;
  Quaternion sum;
  for (const TwoSidedTerm& t : p.terms()) sum += t.left * powers[t.power] * t.right;
  return sum;
}

Quaternion root_form_eval(const RootFormPoly& p, const Quaternion& x) {
  Quaternion acc = p.a0;
  for (const Quaternion& a : p.roots) acc = acc * (x - a);
  return acc;
}

bool RealDecomposition::nonzero(int s, int t) const {
  const auto& c = cells[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
  return std::any_of(c.begin(), c.end(), [](double v) { return v != 0.0; });
}

Quaternion RealDecomposition::evaluate(const Quaternion& x) const {
  Quaternion sum;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      const auto& c = cells[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      if (c.empty()) continue;
      Quaternion acc;
      for (std::size_t l = c.size(); l-- > 0;) acc = acc * x + c[l];
      sum += kBasis[static_cast<std::size_t>(s)] * acc * kBasis[static_cast<std::size_t>(t)];
    }
  }
  return sum;
}

RealDecomposition decompose_to_real(const TwoSidedPoly& p) {
  RealDecomposition d;
  for (const TwoSidedTerm& term : p.terms()) {
    for (int s = 0; s < 4; ++s) {
      const double a = term.left[s];
      if (a == 0.0) continue;
      for (int t = 0; t < 4; ++t) {
        const double b = term.right[t];
        if (b == 0.0) continue;
        auto& c = d.cells[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (c.size() <= term.power) c.resize(term.power + 1, 0.0);
        c[term.power] += a * b;
      }
    }
  }
  return d;
}

std::vector<Quaternion> multieval_fast(const TwoSidedPoly& p, std::span<const Quaternion> xs,
                                       const MultipointOptions& options) {
  const RealDecomposition d = decompose_to_real(p);
  std::vector<std::pair<int, int>> used;
  std::vector<CPoly> polys;
  for (int s = 0; s < 4; ++s) {
    for (int t = 0; t < 4; ++t) {
      if (!d.nonzero(s, t)) continue;
      used.emplace_back(s, t);
      polys.push_back(CPoly::from_real(d.cells[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]));
    }
  }
  std::vector<Rotation> rot(xs.size());
  std::vector<Complex> ys(xs.size());
  for (std::size_t l = 0; l < xs.size(); ++l) {
    rot[l] = rotation_to_complex(xs[l]);
    ys[l] = rot[l].y_complex();
  }
  const std::vector<std::vector<Complex>> values = multipoint_eval_many(polys, ys, options);

  std::vector<Quaternion> out(xs.size());
  for (std::size_t l = 0; l < xs.size(); ++l) {
    Quaternion sum;
    for (std::size_t c = 0; c < used.size(); ++c) {
      const Quaternion v = rot[l].restore(Quaternion::from_complex(values[c][l]));
      sum += kBasis[static_cast<std::size_t>(used[c].first)] * v *
             kBasis[static_cast<std::size_t>(used[c].second)];
    }
    out[l] = sum;
  }
  return out;
}

std::vector<Quaternion> multieval_fast(const OneSidedPoly& p, std::span<const Quaternion> xs,
                                       const MultipointOptions& options) {
  return multieval_fast(TwoSidedPoly::from_one_sided(p), xs, options);
}

std::vector<Quaternion> multieval_naive(const TwoSidedPoly& p, std::span<const Quaternion> xs) {
  std::vector<Quaternion> out;
  out.reserve(xs.size());
  for (const Quaternion& x : xs) out.push_back(two_sided_eval(p, x));
  return out;
}

std::vector<Quaternion> multieval_naive(const OneSidedPoly& p, std::span<const Quaternion> xs) {
  std::vector<Quaternion> out;
  out.reserve(xs.size());
  for (const Quaternion& x : xs) out.push_back(horner_eval(p, x));
  return out;
}

Feasibility interpolation_feasible(std::span<const Quaternion> xs, double tolerance) {
  const std::size_t n = xs.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (norm(xs[a] - xs[b]) <= tolerance) {
        return {false, "points " + std::to_string(a) + " and " + std::to_string(b) + " coincide"};
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!auto_equivalent(xs[a], xs[b], tolerance)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (auto_equivalent(xs[a], xs[c], tolerance) && auto_equivalent(xs[b], xs[c], tolerance)) {
          return {false, "points " + std::to_string(a) + ", " + std::to_string(b) + " and " +
                             std::to_string(c) + " are automorphically equivalent"};
        }
      }
    }
  }
  return {};
}

namespace {

// Complex 2n x 2n form of the Vandermonde matrix, row-major.
std::vector<Complex> complex_vandermonde(std::span<const Quaternion> xs) {
  const std::size_t n = xs.size();
  const std::size_t w = 2 * n;
  std::vector<Complex> a(w * w);
  for (std::size_t l = 0; l < n; ++l) {
    Quaternion power{1.0};
    for (std::size_t m = 0; m < n; ++m) {
      const Complex z1{power.re, power.im_i};
      const Complex z2{power.im_j, power.im_k};
      a[(2 * l) * w + 2 * m] = z1;
      a[(2 * l) * w + 2 * m + 1] = z2;
      a[(2 * l + 1) * w + 2 * m] = -std::conj(z2);
      a[(2 * l + 1) * w + 2 * m + 1] = std::conj(z1);
      power = power * xs[l];
    }
  }
  return a;
}

}  // namespace

double double_determinant(std::span<const Quaternion> xs) {
  const std::size_t w = 2 * xs.size();
  return std::abs(detail::lu_determinant(detail::lu_decompose(complex_vandermonde(xs), w)));
}

double double_determinant_ratio(std::span<const Quaternion> xs) {
  const std::size_t w = 2 * xs.size();
  std::vector<Complex> a = complex_vandermonde(xs);
  // Work in logs: the raw determinant of large point sets over- or underflows.
  double log_rows = 0.0;
  for (std::size_t r = 0; r < w; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < w; ++c) s += std::norm(a[r * w + c]);
    log_rows += 0.5 * std::log(s);
  }
  const auto lu = detail::lu_decompose(std::move(a), w);
  double log_det = 0.0;
  for (std::size_t i = 0; i < w; ++i) {
    const double v = std::abs(lu.lu[i * w + i]);
    if (v == 0.0) return 0.0;
    log_det += std::log(v);
  }
  return std::min(1.0, std::exp(log_det - log_rows));
}

OneSidedPoly interpolate(std::span<const Quaternion> xs, std::span<const Quaternion> ys) {
  if (xs.size() != ys.size()) throw SizeMismatch("point and value counts differ");
  const Feasibility f = interpolation_feasible(xs);
  if (!f) throw InfeasiblePoints("interpolation is not uniquely solvable: " + f.reason);
  const std::size_t n = xs.size();
  if (n == 0) return OneSidedPoly();
  const std::size_t w = 4 * n;
  // Row 4l + target holds component `target` of sum_m a_m x_l^m; column
  // 4m + s multiplies component s of a_m.
  std::vector<double> a(w * w, 0.0);
  std::vector<double> b(w);
  for (std::size_t l = 0; l < n; ++l) {
    Quaternion power{1.0};
    for (std::size_t m = 0; m < n; ++m) {
      for (const BasisProduct& t : kHamiltonTable) {
        a[(4 * l + static_cast<std::size_t>(t.target)) * w + 4 * m + static_cast<std::size_t>(t.left)] +=
            t.sign * power[t.right];
      }
      power = power * xs[l];
    }
    for (int c = 0; c < 4; ++c) b[4 * l + static_cast<std::size_t>(c)] = ys[l][c];
  }
  double scale = 0.0;
  for (const double v : a) scale = std::max(scale, std::abs(v));
  const auto lu = detail::lu_decompose(std::move(a), w);
  if (!(lu.min_pivot > 1e-12 * scale)) {
    throw NumericallySingular("interpolation system is numerically singular");
  }
  const std::vector<double> sol = detail::lu_solve(lu, b);
  std::vector<Quaternion> coeffs(n);
  for (std::size_t m = 0; m < n; ++m) {
    coeffs[m] = {sol[4 * m], sol[4 * m + 1], sol[4 * m + 2], sol[4 * m + 3]};
  }
  return OneSidedPoly(std::move(coeffs));
}

std::vector<Quaternion> nbody_multieval(std::span<const double> poles, std::span<const Quaternion> xs) {
  std::vector<Quaternion> out(xs.size());
  if (poles.empty()) return out;
  std::vector<double> sorted(poles.begin(), poles.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<Rotation> rot(xs.size());
  std::vector<Complex> ys(xs.size());
  for (std::size_t l = 0; l < xs.size(); ++l) {
    rot[l] = rotation_to_complex(xs[l]);
    ys[l] = rot[l].y_complex();
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), ys[l].real());
    double gap = INFINITY;
    if (it != sorted.end()) gap = std::min(gap, std::hypot(*it - ys[l].real(), ys[l].imag()));
    if (it != sorted.begin()) gap = std::min(gap, std::hypot(*std::prev(it) - ys[l].real(), ys[l].imag()));
    if (gap < kPoleTolerance) {
      throw PoleCollision("point " + std::to_string(l) + " lies on a pole");
    }
  }
  std::vector<Complex> sources(poles.begin(), poles.end());
  const CauchyTree tree(sources);
  const std::vector<std::vector<Complex>> weights{std::vector<Complex>(poles.size(), Complex{1.0})};
  const auto sums = tree.sums(weights, ys);
  for (std::size_t l = 0; l < xs.size(); ++l) {
    out[l] = rot[l].restore(Quaternion::from_complex(-sums[0][l]));
  }
  return out;
}

std::vector<Quaternion> nbody_naive(std::span<const double> poles, std::span<const Quaternion> xs) {
  std::vector<Quaternion> out(xs.size());
  for (std::size_t l = 0; l < xs.size(); ++l) {
    for (const double a : poles) out[l] += inverse(xs[l] - Quaternion{a});
  }
  return out;
}

}  // namespace qpoly
