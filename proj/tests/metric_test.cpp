#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cf/fib.hpp"
#include "cf/format.hpp"
#include "cf/metric.hpp"
#include "cf/rng.hpp"

using namespace cf;

namespace {

Rational rat(long long p, long long q) { return Rational(BigInt(p), BigInt(q)); }

Word random_word(SplitMix64& rng, long max_len, long max_digit) {
  std::vector<BigInt> block;
  const long len = rng.range(0, max_len);
  for (long i = 0; i < len; ++i)
    block.emplace_back(rng.range(1, max_digit));
  return Word(std::move(block));
}

} // namespace

TEST_CASE("digit metric") {
  CHECK(rho(ExtDigit(7), ExtDigit(7)) == Rational(0));
  CHECK(rho(ExtDigit(1), ExtDigit::infinity()) == Rational(1));
  CHECK(rho(ExtDigit(2), ExtDigit(3)) == rat(5, 6));
  CHECK(rho(ExtDigit::infinity(), ExtDigit::infinity()) == Rational(0));
  // bounded by 2, maximum at the pair (1, anything-else)
  CHECK(rho(ExtDigit(1), ExtDigit(2)) == rat(3, 2));
  for (long m = 1; m <= 30; ++m)
    for (long n = 1; n <= 30; ++n)
      CHECK(rho(ExtDigit(BigInt(m)), ExtDigit(BigInt(n))) <= Rational(2));
}

TEST_CASE("weighted distance on finitely supported pairs") {
  const DistResult d1 = dist(Seq(Word{1}), Seq(Word{2}));
  REQUIRE(d1.is_exact());
  CHECK(*d1.exact == rat(3, 2));
  CHECK(d1.str() == "exact 3/2");

  const DistResult d2 = dist(Seq(Word{1, 5}), Seq(Word{1}));
  REQUIRE(d2.is_exact());
  CHECK(*d2.exact == rat(1, 5));

  const Seq s(Word{4, 4, 4});
  const DistResult d3 = dist(s, s);
  REQUIRE(d3.is_exact());
  CHECK(d3.exact->is_zero());

  // identical streams compare exactly even though brackets would apply
  const DistResult d4 = dist(Seq(Stream({1}, {1}, 9)), Seq(Stream({}, {1}, 7)));
  REQUIRE(d4.is_exact());
  CHECK(d4.exact->is_zero());

  // general words measure their raw digits, not the forgotten ones
  std::vector<ExtDigit> e{ExtDigit(2), ExtDigit::infinity(), ExtDigit(2)};
  const DistResult d5 = dist(Seq(GeneralWord(e)), Seq(Word{2, 9, 2}));
  REQUIRE(d5.is_exact());
  CHECK(*d5.exact == rat(1, 9)); // only position 2 differs: rho(inf, 9)/F_2^2
}

TEST_CASE("metric axioms on random words") {
  SplitMix64 rng(41);
  for (int i = 0; i < 1500; ++i) {
    const Word a = random_word(rng, 8, 30);
    const Word b = random_word(rng, 8, 30);
    const Word c = random_word(rng, 8, 30);
    const Rational ab = finite_dist(Seq(a), Seq(b));
    const Rational bc = finite_dist(Seq(b), Seq(c));
    const Rational ac = finite_dist(Seq(a), Seq(c));
    CHECK(ab.sign() >= 0);
    CHECK(ab == finite_dist(Seq(b), Seq(a)));
    CHECK((a == b) == ab.is_zero());
    CHECK(ac <= ab + bc);
  }
}

TEST_CASE("tail bound values") {
  CHECK(tail_bound(4) == rat(18, 125));
  CHECK(tail_bound(10) == Rational(BigInt(18), BigInt(5) * 89 * 89));
  CHECK(tail_bound(20) < rat(1, 10000000));
  CHECK_THROWS_WITH_AS(tail_bound(3), "tail bound valid for K >= 4",
                       domain_error);
}

TEST_CASE("tail bound dominates long exact tails") {
  for (long K : {4L, 7L, 12L, 20L}) {
    FibSequence fibs;
    fibs.next();
    Rational tail(0);
    for (long k = 1; k <= K + 60; ++k) {
      const BigInt fk = fibs.next().value;
      if (k > K)
        tail += Rational(BigInt(2), fk * fk);
    }
    CHECK(tail <= tail_bound(K));
  }
}

TEST_CASE("stream comparisons return nested brackets") {
  const Seq w(Word{1, 2, 3});
  Rational prev_lo(-1);
  Rational prev_hi(100);
  for (long budget = 5; budget <= 25; budget += 5) {
    const DistResult d = dist(w, Seq(Stream({}, {1, 2}, budget)));
    REQUIRE_FALSE(d.is_exact());
    const auto& [lo, hi] = *d.bracket;
    CHECK(lo <= hi);
    CHECK(d.depth_used == budget);
    CHECK(prev_lo <= lo);
    CHECK(hi <= prev_hi);
    prev_lo = lo;
    prev_hi = hi;
  }
  // width shrinks with depth
  const auto narrow = *dist(w, Seq(Stream({}, {1, 2}, 25))).bracket;
  const auto wide = *dist(w, Seq(Stream({}, {1, 2}, 5))).bracket;
  CHECK(narrow.second - narrow.first < wide.second - wide.first);
}

TEST_CASE("explicit depth caps and budget errors") {
  const Seq a(Stream({}, {1}, 20));
  const Seq b(Stream({}, {2}, 12));
  const DistResult d = dist(a, b);
  CHECK(d.depth_used == 12); // min available depth
  const DistResult d8 = dist(a, b, 8);
  CHECK(d8.depth_used == 8);
  CHECK(d8.str().find("depth=8") != std::string::npos);
  CHECK_THROWS_WITH_AS(dist(a, b, 15), "depth budget exceeded", domain_error);
  // tail bound needs K >= 4
  CHECK_THROWS_AS(dist(Seq(Word{1}), Seq(Stream({}, {7}, 3))), domain_error);
}

TEST_CASE("brackets really contain the limit distance") {
  // against a word, the true distance is the partial sum plus the exact
  // stream tail; check containment at a deeper partial sum
  const Seq w(Word{2, 2});
  const Stream s({}, {2, 1}, 40);
  const auto bracket = *dist(w, Seq(s.with_budget(10))).bracket;
  const auto deeper = *dist(w, Seq(s)).bracket;
  CHECK(bracket.first <= deeper.first);
  CHECK(deeper.second <= bracket.second);
}

TEST_CASE("total diameter stays under the cap") {
  SplitMix64 rng(43);
  FibSequence fibs;
  fibs.next();
  Rational cap(0);
  for (long k = 1; k <= 20; ++k) {
    const BigInt fk = fibs.next().value;
    cap += Rational(BigInt(2), fk * fk);
  }
  cap += tail_bound(20);
  for (int i = 0; i < 300; ++i) {
    const Word a = random_word(rng, 10, 50);
    const Word b = random_word(rng, 10, 50);
    CHECK(finite_dist(Seq(a), Seq(b)) <= cap);
  }
}

TEST_CASE("forget-class distance truncates at the shorter support") {
  CHECK(quotient_dist(Word{2, 24, 2}, Word{2}) == rat(1, 24));
  CHECK(quotient_dist(Word{2}, Word{2, 24, 2}) == rat(1, 24));
  CHECK(quotient_dist(Word{2}, Word{2}) == Rational(0));
  CHECK(quotient_dist(Word{3}, Word{}) == rat(1, 3));
  // positions 1..min+1 all count: rho(2,1) + rho(9,1) + rho(9,inf)/F_3^2
  CHECK(quotient_dist(Word{2, 9, 9}, Word{1, 1}) ==
        rat(3, 2) + rat(10, 9) + rat(1, 36));
  // never exceeds the raw distance
  SplitMix64 rng(47);
  for (int i = 0; i < 500; ++i) {
    const Word a = random_word(rng, 6, 20);
    const Word b = random_word(rng, 6, 20);
    CHECK(quotient_dist(a, b) <= finite_dist(Seq(a), Seq(b)));
  }
}
