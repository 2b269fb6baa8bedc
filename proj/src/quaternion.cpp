#include "qpoly/quaternion.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "qpoly/errors.hpp"

namespace qpoly {

namespace {

double scaled_norm(double a, double b, double c, double d) {
  const double m = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (m == 0.0) return 0.0;
  if (m < 1e150 && m > 1e-150) return std::sqrt(a * a + b * b + c * c + d * d);
  a /= m; b /= m; c /= m; d /= m;
  return m * std::sqrt(a * a + b * b + c * c + d * d);
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of a decimal floating literal at text[pos], or 0.
std::size_t number_length(std::string_view text, std::size_t pos) {
  std::size_t p = pos;
  std::size_t digits = 0;
  while (p < text.size() && is_digit(text[p])) { ++p; ++digits; }
  if (p < text.size() && text[p] == '.') {
    ++p;
    while (p < text.size() && is_digit(text[p])) { ++p; ++digits; }
  }
  if (digits == 0) return 0;
  if (p < text.size() && (text[p] == 'e' || text[p] == 'E')) {
    std::size_t q = p + 1;
    if (q < text.size() && (text[q] == '+' || text[q] == '-')) ++q;
    if (q < text.size() && is_digit(text[q])) {
      while (q < text.size() && is_digit(text[q])) ++q;
      p = q;
    }
  }
  return p - pos;
}

Quaternion unit_for(char c) {
  switch (c) {
    case 'i': return Quaternion::unit_i();
    case 'j': return Quaternion::unit_j();
    default: return Quaternion::unit_k();
  }
}

bool is_unit(char c) { return c == 'i' || c == 'j' || c == 'k'; }

void append_component(std::string& out, double value, const char* unit) {
  if (value == 0.0) return;  // also drops -0.0
  const bool negative = value < 0;
  if (negative) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const double magnitude = std::abs(value);
  if (*unit != '\0' && magnitude == 1.0) {
    out += unit;
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", magnitude);
  out += buf;
  out += unit;
}

}  // namespace

double norm(const Quaternion& a) { return scaled_norm(a.re, a.im_i, a.im_j, a.im_k); }

double imag_norm(const Quaternion& a) { return std::hypot(a.im_i, a.im_j, a.im_k); }

Quaternion inverse(const Quaternion& a) {
  const double n2 = norm_squared(a);
  if (n2 == 0.0) {
    if (a == Quaternion{}) throw DivisionByZero("inverse of the zero quaternion");
    // |a| underflows when squared; rescale first.
    const double n = norm(a);
    return conj(a * (1.0 / n)) * (1.0 / n);
  }
  return conj(a) * (1.0 / n2);
}

bool auto_equivalent(const Quaternion& a, const Quaternion& b, double tolerance) {
  return std::abs(a.re - b.re) <= tolerance &&
         std::abs(imag_norm(a) - imag_norm(b)) <= tolerance;
}

bool approx_equal(const Quaternion& a, const Quaternion& b, double tolerance) {
  return std::abs(a.re - b.re) <= tolerance && std::abs(a.im_i - b.im_i) <= tolerance &&
         std::abs(a.im_j - b.im_j) <= tolerance && std::abs(a.im_k - b.im_k) <= tolerance;
}

Quaternion apply_automorphism(const Quaternion& u, const Quaternion& x) {
  if (u == Quaternion{}) throw ZeroConjugator("conjugation by the zero quaternion");
  return u * x * inverse(u);
}

Rotation rotation_to_complex(const Quaternion& x) {
  if (x.is_complex()) return {Quaternion{1.0}, x};

  const double s = imag_norm(x);
  const double vi = x.im_i / s;
  const double vj = x.im_j / s;
  const double vk = x.im_k / s;
  // u is proportional to v + i. For v close to -i the sum 1 + vi cancels, so
  // it is rewritten as (vj^2 + vk^2) / (1 - vi).
  const double t = vi >= 0 ? 1.0 + vi : (vj * vj + vk * vk) / (1.0 - vi);
  const double n = scaled_norm(0.0, t, vj, vk);
  Quaternion u = n > 0 ? Quaternion{0.0, t / n, vj / n, vk / n} : Quaternion::unit_j();
  return {u, Quaternion{x.re, s, 0.0, 0.0}};
}

bool scan_quaternion_term(std::string_view text, std::size_t& pos, Quaternion& out) {
  std::size_t p = pos;
  skip_space(text, p);
  if (p >= text.size()) return false;

  const std::size_t len = number_length(text, p);
  if (len == 0) {
    if (!is_unit(text[p])) return false;
    out = unit_for(text[p]);
    pos = p + 1;
    return true;
  }
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data() + p, text.data() + p + len, value);
  if (ec != std::errc{} || end != text.data() + p + len) {
    throw SyntaxError("malformed number '" + std::string(text.substr(p, len)) + "'", p);
  }
  p += len;
  std::size_t q = p;
  skip_space(text, q);
  if (q < text.size() && is_unit(text[q])) {
    out = unit_for(text[q]) * value;
    pos = q + 1;
  } else {
    out = Quaternion{value};
    pos = p;
  }
  return true;
}

Quaternion parse_quaternion(std::string_view text) {
  std::size_t pos = 0;
  Quaternion total;
  bool first = true;
  for (;;) {
    skip_space(text, pos);
    if (pos >= text.size()) break;
    double sign = 1.0;
    const char c = text[pos];
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (!first) {
      throw SyntaxError("expected '+' or '-' between literal terms", pos);
    }
    Quaternion term;
    if (!scan_quaternion_term(text, pos, term)) {
      skip_space(text, pos);
      throw SyntaxError("expected a number or one of i, j, k", pos);
    }
    total += term * sign;
    first = false;
  }
  if (first) throw SyntaxError("empty quaternion literal", 0);
  return total;
}

std::string format_quaternion(const Quaternion& q) {
  std::string out;
  append_component(out, q.re, "");
  append_component(out, q.im_i, "i");
  append_component(out, q.im_j, "j");
  append_component(out, q.im_k, "k");
  if (out.empty()) out = "0";
  return out;
}

}  // namespace qpoly
