#include <doctest.h>

#include <random>

#include "polycomp/ratfunc.hpp"

using namespace polycomp;

namespace {

const Field Q = Field::rationals();

Poly P(std::initializer_list<long long> coeffs) { return Poly::from_ints(Q, coeffs); }

Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1));
  std::vector<long long> cs;
  for (int i = 0; i <= d; ++i) cs.push_back(static_cast<long long>(rng() % 7) - 3);
  return Poly::from_ints(f, cs);
}

}  // namespace

TEST_CASE("field descriptors") {
  CHECK(Field::rationals().is_rational());
  CHECK(Field::gf(2).modulus() == 2);
  CHECK(Field::gf(65521).modulus() == 65521);  // largest prime below 2^16
  CHECK_THROWS_AS(Field::gf(4), ValidationError);
  CHECK_THROWS_AS(Field::gf(1), ValidationError);
  CHECK_THROWS_AS(Field::gf(65537), ValidationError);
}

TEST_CASE("rational element parsing round-trips") {
  for (const char* s : {"0", "1", "-7", "3/4", "-22/7", "1000000000000000000000/13"}) {
    FieldElem e = FieldElem::parse(Q, s);
    CHECK(FieldElem::parse(Q, e.to_string()) == e);
  }
  CHECK(FieldElem::parse(Q, "2/4") == FieldElem::parse(Q, "1/2"));
  CHECK_THROWS_AS(FieldElem::parse(Q, "x"), ParseError);
  CHECK_THROWS_AS(FieldElem::parse(Q, ""), ParseError);
}

TEST_CASE("GF(p) arithmetic") {
  Field f5 = Field::gf(5);
  FieldElem two = FieldElem::from_int(f5, 2);
  CHECK(two.inverse() == FieldElem::from_int(f5, 3));
  CHECK((two * two).to_string() == "4");
  CHECK(FieldElem::from_int(f5, -1) == FieldElem::from_int(f5, 4));
  for (int v = 1; v < 5; ++v) {
    FieldElem e = FieldElem::from_int(f5, v);
    CHECK((e * e.inverse()).is_one());
  }
  CHECK_THROWS_AS(FieldElem::zero(f5).inverse(), DivisionByZeroError);
  CHECK_THROWS_AS(two + FieldElem::one(Q), FieldMismatchError);
}

TEST_CASE("zero polynomial degree is a marker, not an integer") {
  Poly z = Poly::zero(Q);
  CHECK(!z.degree().is_finite());
  CHECK_THROWS_AS(z.degree().value(), InternalError);
  CHECK(z.degree().to_string() == "-inf");
  CHECK(Degree::minus_infinity() < Degree::of(-100));
  CHECK(P({0, 1}).degree() == Degree::of(1));
}

TEST_CASE("poly_gcd hand-checked values") {
  // (s^2-1, s^2-2s+1) -> s-1
  CHECK(Poly::gcd(P({-1, 0, 1}), P({1, -2, 1})) == P({-1, 1}));
  // (0, s^3) -> s^3
  CHECK(Poly::gcd(Poly::zero(Q), P({0, 0, 0, 1})) == P({0, 0, 0, 1}));
  // (s, s+1) -> 1
  CHECK(Poly::gcd(P({0, 1}), P({1, 1})) == Poly::one(Q));
  CHECK(Poly::gcd(Poly::zero(Q), Poly::zero(Q)).is_zero());
}

TEST_CASE("poly_lcm hand-checked values") {
  CHECK(Poly::lcm(P({0, 1}), P({1, 1})) == P({0, 1, 1}));   // s^2+s
  CHECK(Poly::lcm(P({0, 0, 1}), P({0, 1})) == P({0, 0, 1}));
  CHECK(Poly::lcm(P({0, 2}), P({0, 3})) == P({0, 1}));      // monic normalization
  CHECK(Poly::lcm(Poly::zero(Q), P({1, 1})).is_zero());
}

TEST_CASE("poly_divrem hand-checked values") {
  auto [q1, r1] = Poly::divrem(P({1, 0, 1}), P({0, 1}));
  CHECK(q1 == P({0, 1}));
  CHECK(r1 == Poly::one(Q));
  auto [q2, r2] = Poly::divrem(P({0, 1}), P({0, 0, 1}));
  CHECK(q2.is_zero());
  CHECK(r2 == P({0, 1}));
  auto [q3, r3] = Poly::divrem(P({-1, 0, 1}), P({-1, 1}));
  CHECK(q3 == P({1, 1}));
  CHECK(r3.is_zero());
  CHECK_THROWS_AS(Poly::divrem(P({1}), Poly::zero(Q)), DivisionByZeroError);
}

TEST_CASE("ratfunc_make hand-checked values") {
  RatFunc a = RatFunc::make(P({0, 0, 2}), P({0, 2}));  // 2s^2 / 2s = s
  CHECK(a.num() == P({0, 1}));
  CHECK(a.den().is_one());
  RatFunc b = RatFunc::make(Poly::zero(Q), P({0, 0, 0, 1}));
  CHECK(b.is_zero());
  CHECK(b.den().is_one());
  RatFunc c = RatFunc::make(P({1, 1}), P({1, 1}));
  CHECK(c.num().is_one());
  CHECK(c.den().is_one());
  CHECK_THROWS_AS(RatFunc::make(P({1}), Poly::zero(Q)), DivisionByZeroError);
}

TEST_CASE("gcd and lcm properties on random polynomials") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Q, Field::gf(5)}) {
    for (int trial = 0; trial < 300; ++trial) {
      Poly a = random_poly(f, rng, 4);
      Poly b = random_poly(f, rng, 4);
      Poly g = Poly::gcd(a, b);
      CHECK((g.is_zero() || g.is_monic()));
      CHECK(Poly::divides(g, a));
      CHECK(Poly::divides(g, b));
      if (!a.is_zero() && !b.is_zero()) {
        // lcm * gcd = monic(a*b)
        CHECK(Poly::lcm(a, b) * g == (a * b).monic());
        auto [q, r] = Poly::divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
      }
    }
  }
}

TEST_CASE("ratfunc reduction is idempotent and reduced") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = random_poly(Q, rng, 4);
    Poly b = random_poly(Q, rng, 4);
    if (b.is_zero()) continue;
    RatFunc r = RatFunc::make(a, b);
    CHECK(Poly::gcd(r.num(), r.den()).is_one());
    CHECK(r.den().is_monic());
    CHECK(RatFunc::make(r.num(), r.den()) == r);
  }
}

TEST_CASE("ratfunc arithmetic stays reduced") {
  RatFunc inv_s = RatFunc::make(Poly::one(Q), P({0, 1}));
  RatFunc s = RatFunc::from_poly(P({0, 1}));
  CHECK((inv_s * s).num().is_one());
  CHECK((inv_s + inv_s) == RatFunc::make(P({2}), P({0, 1})));
  CHECK((s / s) == RatFunc::one(Q));
  CHECK_THROWS_AS(s / RatFunc::zero(Q), DivisionByZeroError);
}

TEST_CASE("substitution s -> 1/s on scalars") {
  RatFunc s = RatFunc::from_poly(P({0, 1}));
  CHECK(s.substitute_inverse() == RatFunc::make(Poly::one(Q), P({0, 1})));
  // 1/(s+1) -> s/(s+1)
  RatFunc f = RatFunc::make(Poly::one(Q), P({1, 1}));
  CHECK(f.substitute_inverse() == RatFunc::make(P({0, 1}), P({1, 1})));
  RatFunc c = RatFunc::from_poly(P({3}));
  CHECK(c.substitute_inverse() == c);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(Q, rng, 3);
    Poly b = random_poly(Q, rng, 3);
    if (b.is_zero()) continue;
    RatFunc f2 = RatFunc::make(a, b);
    CHECK(f2.substitute_inverse().substitute_inverse() == f2);
  }
}

TEST_CASE("poly textual display") {
  CHECK(P({0, 1}).to_display() == "s");
  CHECK(P({1, 0, 1}).to_display() == "s^2+1");
  CHECK(P({-1, -2}).to_display() == "-2*s-1");
  CHECK(Poly::zero(Q).to_display() == "0");
  CHECK(Poly::from_coeffs(Q, {FieldElem::parse(Q, "1/2"), FieldElem::one(Q)}).to_display() ==
        "s+1/2");
}

TEST_CASE("poly valuation and reversal") {
  CHECK(P({0, 0, 3, 1}).valuation_at_zero() == 2);
  CHECK(P({5}).valuation_at_zero() == 0);
  CHECK_THROWS_AS(Poly::zero(Q).valuation_at_zero(), InternalError);
  CHECK(P({0, 1}).reversal(1) == P({1}));
  CHECK(P({1, 0, 1}).reversal(2) == P({1, 0, 1}));
  CHECK(P({1, 1}).reversal(3) == P({0, 0, 1, 1}));
  CHECK_THROWS_AS(P({0, 0, 1}).reversal(1), ValidationError);
}
