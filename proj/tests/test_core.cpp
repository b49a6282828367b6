#include <doctest.h>

#include <random>

#include "burchlab/errors.hpp"
#include "burchlab/parser.hpp"
#include "oracles.hpp"

using namespace burchlab;

namespace {

Polynomial P(const std::string& text, const Ring& ring) { return parse_polynomial(text, ring); }

bool canonical(const Polynomial& f) {
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    if (f.terms()[i].coef.is_zero()) return false;
    if (i && grevlex_compare(f.terms()[i - 1].mono, f.terms()[i].mono) <= 0) return false;
  }
  return true;
}

Polynomial random_poly(const Ring& ring, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  Polynomial f(ring);
  for (int k = 0; k < 3; ++k) f = f + oracle::random_form(ring, deg(rng), 3, rng);
  return f;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f101(101), f5(5);
  CHECK(f101.inv(f101.from_integer(2)).residue == 51);
  CHECK(f101.add(f101.from_integer(100), f101.one()).is_zero());
  CHECK(f5.inv(f5.from_integer(3)).residue == 2);
  CHECK(f101.from_integer(-1).residue == 100);
  CHECK(f101.symmetric(f101.from_integer(99)) == -2);
  CHECK_THROWS_AS(f101.inv(f101.zero()), ArithmeticError);
  CHECK_THROWS_AS(PrimeField(100), ArithmeticError);
  for (std::int64_t a = 1; a < 101; ++a) {
    auto e = f101.from_integer(a);
    CHECK(f101.mul(e, f101.inv(e)) == f101.one());
  }
}

TEST_CASE("grevlex comparisons") {
  CHECK(grevlex_compare(Monomial{2, 1, 0}, Monomial{1, 1, 1}) == 1);
  CHECK(grevlex_compare(Monomial{3, 0}, Monomial{0, 4}) == -1);
  CHECK(grevlex_compare(Monomial{1, 1}, Monomial{1, 1}) == 0);
  CHECK_THROWS_AS(grevlex_compare(Monomial{1, 1}, Monomial{1, 1, 0}), RingMismatch);
}

TEST_CASE("grevlex is a total order compatible with multiplication") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 4);
  auto random_mono = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
  for (int k = 0; k < 1000; ++k) {
    Monomial a = random_mono(), b = random_mono(), c = random_mono();
    int ab = grevlex_compare(a, b);
    CHECK(ab == -grevlex_compare(b, a));
    CHECK((ab == 0) == (a == b));
    if (ab > 0 && grevlex_compare(b, c) > 0) CHECK(grevlex_compare(a, c) > 0);
    if (ab > 0) CHECK(grevlex_compare(a * c, b * c) > 0);
  }
}

TEST_CASE("polynomial arithmetic examples") {
  Ring r = make_ring(101, {"x", "y"});
  CHECK(P("x+y", r) * P("x-y", r) == P("x^2-y^2", r));
  CHECK(P("x+y", r) + Polynomial(r) == P("x+y", r));
  CHECK(P("x+y", r) * P("x+y", r) == P("x^2+2*x*y+y^2", r));
  CHECK(P("x", r).scaled(r->field().from_integer(3)) == P("3*x", r));
  CHECK(P("x+y", r).times_monomial(r->field().one(), Monomial{0, 2}) == P("x*y^2+y^3", r));
  CHECK_THROWS_AS(P("x", r) + P("x", make_ring(7, {"x", "y"})), RingMismatch);
}

TEST_CASE("ring laws on random polynomials") {
  Ring r = make_ring(101, {"x", "y", "z"});
  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    Polynomial a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE((a - a).is_zero());
    REQUIRE(canonical(a * b + c));
    REQUIRE(canonical(a - b));
  }
}

TEST_CASE("parser") {
  Ring r = make_ring(101, {"x", "y", "z"});
  Polynomial f = P("x^3*y - 2*z", r);
  REQUIRE(f.size() == 2);
  CHECK(f.terms()[0].mono == Monomial{3, 1, 0});
  CHECK(f.terms()[1].coef.residue == 99);
  CHECK(P("0", r).is_zero());
  CHECK(P("x^2+x^2", r) == P("2*x^2", r));
  CHECK(P(" - x *y ", r) == -P("x*y", r));
  CHECK_THROWS_AS(P("x^", r), ParseError);
  CHECK_THROWS_AS(P("w", r), ParseError);
  CHECK_THROWS_AS(P("x + + y", r), ParseError);
  try {
    P("x + w", r);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(P("x^40", r), DegreeCapExceeded);
}

TEST_CASE("printing round-trips through the parser") {
  Ring r = make_ring(101, {"x", "y", "z"});
  std::mt19937_64 rng(9);
  for (int k = 0; k < 500; ++k) {
    Polynomial f = random_poly(r, rng);
    REQUIRE(P(f.to_string(), r) == f);
  }
  CHECK(P("x^3*y - 2*z", r).to_string() == "x^3*y - 2*z");
  CHECK(Polynomial(r).to_string() == "0");
}
