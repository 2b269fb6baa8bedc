#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpoly/map_poly.hpp"
#include "qpoly/quaternion.hpp"

namespace qpoly::io {

// Line-oriented text files: one value per line; blank lines and lines
// starting with '#' are skipped. Errors carry the source name, line and
// column.

std::vector<Quaternion> parse_quaternion_lines(std::string_view content, const std::string& source);
std::vector<double> parse_real_lines(std::string_view content, const std::string& source);

/// Whole file as a string. Throws IoError.
std::string read_file(const std::string& path);

std::vector<Quaternion> read_quaternion_file(const std::string& path);
std::vector<double> read_real_file(const std::string& path);

void write_quaternion_lines(std::ostream& out, std::span<const Quaternion> values);

/// Header `D <bound>`, then `e0 e1 e2 e3 c0 c1 c2 c3` for every exponent
/// with a nonzero coefficient in some component.
void write_quadruple(std::ostream& out, const QuadruplePoly& p);
QuadruplePoly parse_quadruple(std::string_view content, const std::string& source);

}  // namespace qpoly::io
