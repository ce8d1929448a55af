#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cf/fib.hpp"
#include "cf/format.hpp"
#include "cf/rational.hpp"
#include "cf/rng.hpp"

using namespace cf;

namespace {

Rational random_rational(SplitMix64& rng) {
  const long num = rng.range(-1000, 1000);
  const long den = rng.range(1, 1000);
  return Rational(BigInt(num), BigInt(den));
}

} // namespace

TEST_CASE("construction reduces to lowest terms with positive denominator") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-3), BigInt(-6)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
  CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
  CHECK(Rational(BigInt(3), BigInt(-6)).num() == -1);
  CHECK(Rational(BigInt(3), BigInt(-6)).den() == 2);
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), domain_error);
}

TEST_CASE("field arithmetic is exact") {
  SplitMix64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    CHECK((a + b) - b == a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK(b * b.reciprocal() == Rational(1));
    }
  }
}

TEST_CASE("comparison is a total transitive order") {
  SplitMix64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    // exactly one of <, ==, > holds
    const int rel = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
    CHECK(rel == 1);
    if (a <= b && b <= c)
      CHECK(a <= c);
    CHECK(abs(a).sign() >= 0);
  }
}

TEST_CASE("fibonacci by iteration") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(fib(10) == 55);
  CHECK(fib(70) == BigInt("190392490709135"));
  CHECK_THROWS_AS(fib(-1), domain_error);
}

TEST_CASE("floating-point cross-check agrees through n = 70") {
  CHECK(fib_binet_check(0));
  CHECK(fib_binet_check(12));
  CHECK(fib_binet_check(70));
  for (long n = 0; n <= 70; ++n)
    CHECK(fib_binet_check(n));
  CHECK_THROWS_WITH_AS(fib_binet_check(71), "depth exceeds float-safe range",
                       domain_error);
}

TEST_CASE("cassini identity (independent recurrence oracle)") {
  for (long n = 1; n <= 40; ++n) {
    const BigInt lhs = fib(n + 1) * fib(n - 1) - fib(n) * fib(n);
    CHECK(lhs == (n % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("fib sequence walker matches fib()") {
  FibSequence s;
  for (long n = 0; n <= 25; ++n) {
    const Fib f = s.next();
    CHECK(f.index == n);
    CHECK(f.value == fib(n));
  }
}

TEST_CASE("rational text form") {
  CHECK(Rational(BigInt(1), BigInt(2)).str() == "1/2");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(BigInt(-3), BigInt(6)).str() == "-1/2");
  CHECK(parse_rational("2/4") == Rational(BigInt(1), BigInt(2)));
  CHECK(parse_rational("-3/-6") == Rational(BigInt(1), BigInt(2)));
  CHECK(parse_rational("0.49") == Rational(BigInt(49), BigInt(100)));
  CHECK(parse_rational(".5") == Rational(BigInt(1), BigInt(2)));
  CHECK(parse_rational("-0.25") == Rational(BigInt(-1), BigInt(4)));
  CHECK(parse_rational("17") == Rational(17));
  CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
  CHECK_THROWS_AS(parse_rational("1e5"), parse_error);
  CHECK_THROWS_AS(parse_rational("1.2.3"), parse_error);
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), parse_error);

  SplitMix64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Rational r = random_rational(rng);
    CHECK(parse_rational(r.str()) == r);
  }
}
