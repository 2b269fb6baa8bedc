#include <doctest.h>

#include <sstream>

#include "qpoly/errors.hpp"
#include "qpoly/io.hpp"
#include "support.hpp"

using namespace qpoly;

TEST_CASE("quaternion lines") {
  const auto v = io::parse_quaternion_lines("# header\n1+2i\n\n  -k\r\n3\n", "mem");
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Quaternion{1, 2, 0, 0});
  CHECK(v[1] == Quaternion{0, 0, 0, -1});
  CHECK(v[2] == Quaternion{3.0});
  CHECK(io::parse_quaternion_lines("", "mem").empty());

  try {
    io::parse_quaternion_lines("1\n2\n1+2q\n", "pts.txt");
    FAIL("no throw");
  } catch (const FileFormatError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).rfind("pts.txt:3:", 0) == 0);
  }
}

TEST_CASE("real lines") {
  CHECK(io::parse_real_lines("1.5\n-2\n", "mem") == std::vector<double>{1.5, -2.0});
  CHECK_THROWS_AS(io::parse_real_lines("1\ni\n", "mem"), FileFormatError);
}

TEST_CASE("unreadable file") { CHECK_THROWS_AS(io::read_file("/nonexistent/file.txt"), IoError); }

TEST_CASE("quadruple serialization round trip") {
  qtest::Rng rng(101);
  QuadruplePoly p = qtest::random_quadruple(3, rng);
  p.component(2) = RPoly4::variable(1);
  std::ostringstream s;
  io::write_quadruple(s, p);
  const std::string text = s.str();
  CHECK(text.rfind("D 3\n", 0) == 0);
  const QuadruplePoly back = io::parse_quadruple(text, "mem");
  CHECK(max_difference(back, p) == 0.0);

  std::ostringstream z;
  io::write_quadruple(z, QuadruplePoly());
  CHECK(z.str() == "D 0\n");
  CHECK(io::parse_quadruple(z.str(), "mem").is_zero());

  CHECK_THROWS_AS(io::parse_quadruple("1 0 0 0 1 0 0 0\n", "mem"), FileFormatError);
  CHECK_THROWS_AS(io::parse_quadruple("D 1\n2 0 0 0 1 0 0 0\n", "mem"), FileFormatError);
  CHECK_THROWS_AS(io::parse_quadruple("D 1\n1 0 0 1 0 0\n", "mem"), FileFormatError);
}
