#include <doctest.h>

#include <cmath>
#include <random>

#include "hochkit/cyclotomic.hpp"
#include "hochkit/error.hpp"

using namespace hochkit;

namespace {

CycScalar z(unsigned n, long k = 1) { return CycScalar::root_of_unity(n, k); }

CycScalar random_scalar(std::mt19937& rng) {
  static const unsigned orders[] = {1, 3, 4, 5, 6, 8, 12};
  std::uniform_int_distribution<int> small(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  const unsigned n = orders[rng() % std::size(orders)];
  CycScalar s;
  for (unsigned k = 0; k < n; ++k) {
    s += CycScalar(Rational(small(rng), den(rng))) * z(n, k);
  }
  return s;
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-10) {
  return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("cyclotomic basics") {
  CHECK(z(3) + z(3, 2) == CycScalar(-1));
  CHECK(CycScalar() + z(7, 3) == z(7, 3));
  CHECK(z(4) * z(4) == CycScalar(-1));
  CHECK(CycScalar(2).inverse() == CycScalar(Rational(1, 2)));
  CHECK(z(4).inverse() == -z(4));
  CHECK((1 + z(3)).inverse() == -z(3));
  CHECK((1 + z(5)) * (1 + z(5)).inverse() == CycScalar(1));
  CHECK(z(3).conj() == z(3, 2));
  CHECK(CycScalar(Rational(3, 7)).conj() == CycScalar(Rational(3, 7)));
  CHECK(z(6, 6) == CycScalar(1));
  CHECK(z(6, 2) == z(3));
  CHECK(z(12, -1) * z(12) == CycScalar(1));
  CHECK_THROWS_AS(CycScalar().inverse(), Error);
}

TEST_CASE("mixed orders against the complex embedding") {
  const CycScalar s = z(4) + z(6);
  CHECK(close(s.to_complex(), std::polar(1.0, M_PI / 2) + std::polar(1.0, M_PI / 3)));
  CHECK(s.order() == 12);
  const CycScalar sq2 = z(8) + z(8, 7);
  CHECK(sq2 * sq2 == CycScalar(2));
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    const CycScalar a = random_scalar(rng);
    const CycScalar b = random_scalar(rng);
    const CycScalar c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.conj().conj() == a);
    CHECK(a - a == CycScalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == CycScalar(1));
    CHECK(close((a * b + c).to_complex(), a.to_complex() * b.to_complex() + c.to_complex()));
    CHECK(close(a.conj().to_complex(), std::conj(a.to_complex())));
  }
}

TEST_CASE("scalar text round trip") {
  CHECK(parse_scalar("1/2 + 1/2*z3^1") == CycScalar(Rational(1, 2)) * (1 + z(3)));
  CHECK(parse_scalar("-z4") == -z(4));
  CHECK(parse_scalar("z6^-1") == z(6, 5));
  CHECK(parse_scalar("(1 + z3)*(1 + z3^2)") == CycScalar(1));
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const CycScalar a = random_scalar(rng);
    CHECK(parse_scalar(a.to_string()) == a);
  }
  const auto rows = parse_scalar_rows("[[1, 0], [z3, -1/2]]");
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][0] == z(3));
  CHECK(rows[1][1] == CycScalar(Rational(-1, 2)));
}

TEST_CASE("scalar parse errors carry a column") {
  try {
    parse_scalar("1 + z3^");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("2 3"), ParseError);
  try {
    parse_scalar_list("[1, 2, z]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 9);
  }
}
