#include "qpoly/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qpoly/errors.hpp"

namespace qpoly::io {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
  std::size_t indent;
};

// Non-empty, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::string_view content) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    ++number;
    std::string_view line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t indent = 0;
    while (indent < line.size() && (line[indent] == ' ' || line[indent] == '\t')) ++indent;
    if (indent < line.size() && line[indent] != '#') lines.push_back({number, line, indent});
    if (end == content.size()) break;
    start = end + 1;
  }
  return lines;
}

}  // namespace

std::vector<Quaternion> parse_quaternion_lines(std::string_view content, const std::string& source) {
  std::vector<Quaternion> out;
  for (const Line& line : content_lines(content)) {
    try {
      out.push_back(parse_quaternion(line.text));
    } catch (const ParseError& e) {
      throw FileFormatError(source, line.number, e.position() + 1, e.message());
    }
  }
  return out;
}

std::vector<double> parse_real_lines(std::string_view content, const std::string& source) {
  std::vector<double> out;
  for (const Line& line : content_lines(content)) {
    Quaternion q;
    try {
      q = parse_quaternion(line.text);
    } catch (const ParseError& e) {
      throw FileFormatError(source, line.number, e.position() + 1, e.message());
    }
    if (!q.is_real()) throw FileFormatError(source, line.number, line.indent + 1, "expected a real number");
    out.push_back(q.re);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

std::vector<Quaternion> read_quaternion_file(const std::string& path) {
  return parse_quaternion_lines(read_file(path), path);
}

std::vector<double> read_real_file(const std::string& path) { return parse_real_lines(read_file(path), path); }

void write_quaternion_lines(std::ostream& out, std::span<const Quaternion> values) {
  for (const Quaternion& q : values) out << format_quaternion(q) << '\n';
}

namespace {

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_quadruple(std::ostream& out, const QuadruplePoly& p) {
  const int bound = p.bound();
  out << "D " << bound << '\n';
  std::array<RPoly4, 4> wide;
  for (int m = 0; m < 4; ++m) wide[static_cast<std::size_t>(m)] = p.component(m).with_bound(bound);
  wide[0].for_each_slot([&](const Exponent& e, double) {
    std::array<double, 4> c{};
    bool any = false;
    for (std::size_t m = 0; m < 4; ++m) {
      c[m] = wide[m].coeff(e);
      any = any || c[m] != 0.0;
    }
    if (!any) return;
    out << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << e[3];
    for (const double v : c) out << ' ' << format_real(v);
    out << '\n';
  });
}

namespace {

// Splits on blanks, remembering 1-based columns.
std::vector<std::pair<std::string_view, std::size_t>> fields(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t p = 0;
  while (p < line.size()) {
    while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
    if (p >= line.size()) break;
    const std::size_t start = p;
    while (p < line.size() && line[p] != ' ' && line[p] != '\t') ++p;
    out.emplace_back(line.substr(start, p - start), start + 1);
  }
  return out;
}

template <class T>
T parse_number(std::string_view field, const std::string& source, std::size_t line, std::size_t column) {
  T value{};
  const char* begin = field.data();
  if (!field.empty() && field[0] == '+') ++begin;
  const auto [end, ec] = std::from_chars(begin, field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw FileFormatError(source, line, column, "malformed number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

QuadruplePoly parse_quadruple(std::string_view content, const std::string& source) {
  const std::vector<Line> lines = content_lines(content);
  if (lines.empty()) throw FileFormatError(source, 1, 1, "missing 'D <bound>' header");
  const auto head = fields(lines[0].text);
  if (head.size() != 2 || head[0].first != "D") {
    throw FileFormatError(source, lines[0].number, lines[0].indent + 1, "expected 'D <bound>' header");
  }
  const int bound = parse_number<int>(head[1].first, source, lines[0].number, head[1].second);
  if (bound < 0) throw FileFormatError(source, lines[0].number, head[1].second, "negative degree bound");

  std::array<RPoly4, 4> comps{RPoly4(bound), RPoly4(bound), RPoly4(bound), RPoly4(bound)};
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto f = fields(lines[l].text);
    if (f.size() != 8) {
      throw FileFormatError(source, lines[l].number, lines[l].indent + 1,
                            "expected 'e0 e1 e2 e3 c0 c1 c2 c3'");
    }
    Exponent e{};
    int sum = 0;
    for (std::size_t v = 0; v < 4; ++v) {
      e[v] = parse_number<int>(f[v].first, source, lines[l].number, f[v].second);
      if (e[v] < 0) throw FileFormatError(source, lines[l].number, f[v].second, "negative exponent");
      sum += e[v];
    }
    if (sum > bound) throw FileFormatError(source, lines[l].number, f[0].second, "exponent exceeds the bound D");
    for (std::size_t m = 0; m < 4; ++m) {
      comps[m].at(e) = parse_number<double>(f[4 + m].first, source, lines[l].number, f[4 + m].second);
    }
  }
  return QuadruplePoly(std::move(comps));
}

}  // namespace qpoly::io
