#include "qpoly/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "qpoly/map_poly.hpp"
#include "qpoly/one_sided.hpp"
#include "qpoly/seq_poly.hpp"

namespace qpoly::bench {

namespace {

Quaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

// Uniform in the unit ball, by rejection.
Quaternion random_ball_point(std::mt19937_64& rng) {
  for (;;) {
    const Quaternion q = random_quaternion(rng);
    if (norm_squared(q) <= 1.0) return q;
  }
}

QSeq random_seq(std::size_t n, std::mt19937_64& rng) {
  std::vector<Quaternion> c(n);
  for (Quaternion& q : c) q = random_quaternion(rng);
  return QSeq(std::move(c));
}

QuadruplePoly random_quadruple(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::array<RPoly4, 4> comps;
  for (RPoly4& f : comps) {
    f = RPoly4(degree);
    for (double& c : f.mutable_data()) c = u(rng);
  }
  return QuadruplePoly(std::move(comps));
}

constexpr double kMinSample = 0.02;

double time_once(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

bool known_op(std::string_view op) { return op == "convolve" || op == "multieval" || op == "mul1"; }

std::vector<BenchRow> run(std::string_view op, std::span<const std::size_t> sizes, int repeats,
                          std::uint64_t seed) {
  if (!known_op(op)) throw std::invalid_argument("unknown bench op '" + std::string(op) + "'");
  std::mt19937_64 rng(seed);
  std::vector<BenchRow> rows;
  for (const std::size_t n : sizes) {
    std::function<void()> body;
    if (op == "convolve") {
      const QSeq a = random_seq(n, rng);
      const QSeq b = random_seq(n, rng);
      body = [a, b] { volatile std::size_t sink = convolve_fast(a, b).size(); (void)sink; };
    } else if (op == "multieval") {
      TwoSidedPoly p;
      for (std::size_t l = 0; l < n; ++l) p.add_term(random_quaternion(rng), l, random_quaternion(rng));
      std::vector<Quaternion> xs(n);
      for (Quaternion& x : xs) x = random_ball_point(rng);
      body = [p, xs] { volatile std::size_t sink = multieval_fast(p, xs).size(); (void)sink; };
    } else {
      const QuadruplePoly p = random_quadruple(static_cast<int>(n), rng);
      const QuadruplePoly q = random_quadruple(static_cast<int>(n), rng);
      body = [p, q] { volatile int sink = mul_fast(p, q).bound(); (void)sink; };
    }
    // Short calls are batched so every sample spans at least kMinSample.
    const double first = time_once(body);
    const int batch = first >= kMinSample ? 1 : static_cast<int>(std::ceil(kMinSample / std::max(first, 1e-9)));
    const std::function<void()> sample = [&] {
      for (int b = 0; b < batch; ++b) body();
    };
    std::vector<double> times;
    for (int r = 0; r < std::max(repeats, 1); ++r) times.push_back(time_once(sample) / batch);
    std::sort(times.begin(), times.end());
    rows.push_back({n, times[times.size() / 2]});
  }
  return rows;
}

}  // namespace qpoly::bench
