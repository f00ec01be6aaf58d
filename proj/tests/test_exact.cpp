#include <doctest.h>

#include <random>

#include "hrap/exact.hpp"

using hrap::Exact;
using hrap::Rat;

TEST_SUITE("exact") {

TEST_CASE("conjugate product collapses to an integer") {
  const Exact r2 = Exact::sqrt2();
  CHECK((Exact(1) + r2) * (Exact(1) - r2) == Exact(-1));
  CHECK(r2 * r2 == Exact(2));
  const Exact x = (Exact(1) + r2) * (Exact(1) + r2);
  CHECK(x == Exact(Rat(3), Rat(2)));  // 3 + 2 r2
}

TEST_CASE("sign resolves opposing parts exactly") {
  // 5/4 vs (7/8) r2: squares are 25/16 = 50/32 against 2*49/64 = 49/32.
  const Exact tight(Rat(5, 4), Rat(-7, 8));
  CHECK(tight.sign() == 1);
  CHECK(Exact(Rat(-5, 4), Rat(7, 8)).sign() == -1);
  CHECK(Exact(Rat(3), Rat(-2)).sign() > 0);   // 3 - 2 r2 > 0
  CHECK(Exact(Rat(-3), Rat(2)).sign() < 0);   // 2 r2 - 3 < 0
  CHECK(Exact(0).sign() == 0);
  CHECK(Exact(Rat(0), Rat(-1)).sign() == -1);
}

TEST_CASE("ordering and abs agree with sign") {
  const Exact r2 = Exact::sqrt2();
  CHECK(Exact(1) < r2);
  CHECK(r2 < Exact(Rat(3, 2)));
  CHECK((Exact(1) - r2).abs() == r2 - Exact(1));
  CHECK(Exact(Rat(-7, 3)).abs() == Exact(Rat(7, 3)));
}

TEST_CASE("inverse is a field inverse") {
  const Exact r2 = Exact::sqrt2();
  CHECK((Exact(1) + r2).inverse() == r2 - Exact(1));
  CHECK(r2.inverse() == Exact(Rat(0), Rat(1, 2)));
  CHECK_THROWS_AS(Exact(0).inverse(), std::domain_error);
}

TEST_CASE("string round trip covers all four shapes") {
  for (const char* text :
       {"0", "-3", "5/7", "-5/7", "1*r2", "-2/3*r2", "1/2+3/4*r2",
        "-1+1*r2", "2-1*r2"}) {
    const Exact x = Exact::parse(text);
    CHECK(Exact::parse(x.str()) == x);
  }
  CHECK(Exact::parse("1/2+3/4*r2") == Exact(Rat(1, 2), Rat(3, 4)));
  CHECK_THROWS_AS(Exact::parse("sqrt2"), std::invalid_argument);
  CHECK_THROWS_AS(Exact::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Exact::parse("1 + 2"), std::invalid_argument);
}

TEST_CASE("to_double tracks the exact value") {
  CHECK(Exact::sqrt2().to_double() == doctest::Approx(1.41421356237309515));
  CHECK(Exact(Rat(-3, 4), Rat(1, 2)).to_double() ==
        doctest::Approx(-0.75 + 0.70710678118654757));
}

TEST_CASE("random algebra: products, inverses, parse round trips") {
  std::mt19937 rng(20260819);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  const auto draw = [&] {
    return Exact(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Exact x = draw(), y = draw();
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(Exact::parse(x.str()) == x);
    if (!x.is_zero()) CHECK(x * x.inverse() == Exact(1));
    CHECK((x - y).sign() == -(y - x).sign());
  }
}

}  // TEST_SUITE
