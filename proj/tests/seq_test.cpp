#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cf/format.hpp"
#include "cf/rng.hpp"
#include "cf/seq.hpp"

using namespace cf;

namespace {

GeneralWord gw(std::initializer_list<long long> digits) {
  // -1 stands for the infinity digit
  std::vector<ExtDigit> entries;
  for (long long d : digits)
    entries.push_back(d < 0 ? ExtDigit::infinity() : ExtDigit(BigInt(d)));
  return GeneralWord(std::move(entries));
}

Seq random_seq(SplitMix64& rng) {
  switch (rng.below(3)) {
  case 0: {
    std::vector<BigInt> block;
    const long len = rng.range(0, 6);
    for (long i = 0; i < len; ++i)
      block.emplace_back(rng.range(1, 9));
    return Seq(Word(std::move(block)));
  }
  case 1: {
    std::vector<ExtDigit> entries;
    const long len = rng.range(0, 6);
    for (long i = 0; i < len; ++i) {
      if (rng.below(3) == 0)
        entries.push_back(ExtDigit::infinity());
      else
        entries.push_back(ExtDigit(BigInt(rng.range(1, 9))));
    }
    return Seq(GeneralWord(std::move(entries)));
  }
  default: {
    std::vector<BigInt> pre, per;
    const long plen = rng.range(0, 3);
    for (long i = 0; i < plen; ++i)
      pre.emplace_back(rng.range(1, 9));
    const long mlen = rng.range(1, 3);
    for (long i = 0; i < mlen; ++i)
      per.emplace_back(rng.range(1, 9));
    return Seq(Stream(std::move(pre), std::move(per), 20));
  }
  }
}

} // namespace

TEST_CASE("digit validation") {
  CHECK_THROWS_AS(Word({0}), domain_error);
  CHECK_THROWS_AS(ExtDigit(BigInt(0)), domain_error);
  CHECK_THROWS_AS(Stream({}, {}, 5), domain_error);
  CHECK_THROWS_AS(Stream({1}, {0}, 5), domain_error);
  CHECK_THROWS_AS(Stream({}, {1}, 0), domain_error);
}

TEST_CASE("stratum") {
  CHECK(stratum(Seq(Word{})) == Stratum::finite(0));
  CHECK(stratum(Seq(Word{3, 5})) == Stratum::finite(2));
  CHECK(stratum(Seq(gw({3, -1, 4}))) == Stratum::outside());
  CHECK(stratum(Seq(Stream({}, {1}))) == Stratum::infinite());
  // trailing infinity entries collapse into the tail
  CHECK(stratum(Seq(gw({3, -1, -1}))) == Stratum::finite(1));
  CHECK(stratum(Seq(gw({3, 5}))) == Stratum::finite(2));
}

TEST_CASE("general words normalize when wrapped") {
  CHECK(Seq(gw({3, -1})) == Seq(Word{3}));
  CHECK(Seq(gw({})) == Seq(Word{}));
  CHECK(Seq(gw({-1, -1})) == Seq(Word{}));
  CHECK(Seq(gw({3, -1, 4})) != Seq(Word{3}));
}

TEST_CASE("truncate") {
  CHECK(truncate(Seq(Word{3, 5}), 3) == Seq(Word{3, 5}));
  CHECK(truncate(Seq(Word{3, 5}), 1) == Seq(Word{3}));
  CHECK(truncate(Seq(Word{3, 5}), 0) == Seq(Word{}));
  CHECK(truncate(Seq(Stream({}, {1}, 10)), 4) == Seq(Word{1, 1, 1, 1}));
  CHECK(truncate(Seq(gw({3, -1, 4})), 2) == Seq(Word{3}));
  CHECK(truncate(Seq(gw({3, -1, 4})), 3) == Seq(gw({3, -1, 4})));
  CHECK_THROWS_WITH_AS(truncate(Seq(Stream({}, {1}, 10)), 11),
                       "depth budget exceeded", domain_error);
}

TEST_CASE("forget") {
  CHECK(forget(Seq(gw({3, -1, 4}))) == Seq(Word{3}));
  CHECK(forget(Seq(Word{})) == Seq(Word{}));
  const Seq s(Stream({2}, {3}));
  CHECK(forget(s) == s);
}

TEST_CASE("equivalence under forgetting") {
  CHECK(equivalent(Seq(gw({3, -1, 4})), Seq(gw({3, -1, 9}))));
  CHECK_FALSE(equivalent(Seq(Word{3}), Seq(Word{4})));
  CHECK(equivalent(Seq(Word{}), Seq(Word{})));

  SplitMix64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Seq a = random_seq(rng);
    const Seq b = random_seq(rng);
    const Seq c = random_seq(rng);
    CHECK(equivalent(a, a));
    CHECK(equivalent(a, b) == equivalent(b, a));
    if (equivalent(a, b) && equivalent(b, c))
      CHECK(equivalent(a, c));
  }
}

TEST_CASE("forget is idempotent and lands in the stratified space") {
  SplitMix64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Seq s = random_seq(rng);
    const Seq g = forget(s);
    CHECK(stratum(g).in_sigma());
    CHECK(forget(g) == g);
    if (stratum(s).in_sigma())
      CHECK(g == s);
  }
}

TEST_CASE("cylinder membership") {
  CHECK(in_cylinder(Seq(Word{2, 7}), Word{2}));
  CHECK(in_cylinder(Seq(Word{2}), Word{2}));
  CHECK_FALSE(in_cylinder(Seq(Stream({}, {1})), Word{2}));
  CHECK(in_cylinder(Seq(Stream({2}, {5})), Word{2, 5}));
  CHECK_FALSE(in_cylinder(Seq(Word{2}), Word{2, 7}));
  CHECK_THROWS_WITH_AS(in_cylinder(Seq(Word{2}), Word{}),
                       "cylinder base must lie in Sigma_n, n >= 1",
                       domain_error);
  CHECK_THROWS_AS(in_cylinder(Seq(gw({3, -1, 4})), Word{3}), domain_error);
}

TEST_CASE("cylinder membership is the prefix condition") {
  SplitMix64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const Seq u = random_seq(rng);
    if (!stratum(u).in_sigma())
      continue;
    std::vector<BigInt> base;
    const long n = rng.range(1, 4);
    for (long k = 0; k < n; ++k)
      base.emplace_back(rng.range(1, 9));
    const Word sigma(base);
    bool prefix = true;
    for (long k = 1; k <= n; ++k)
      prefix = prefix && u.digit(k) == sigma.digit(k);
    CHECK(in_cylinder(u, sigma) == prefix);
  }
}

TEST_CASE("stream representation is normalized") {
  CHECK(Seq(Stream({1}, {1})) == Seq(Stream({}, {1})));
  CHECK(Seq(Stream({}, {1, 1})) == Seq(Stream({}, {1})));
  CHECK(Seq(Stream({3}, {3})) == Seq(Stream({}, {3})));
  CHECK(Seq(Stream({}, {2, 3, 2, 3})) == Seq(Stream({}, {2, 3})));
  CHECK(Seq(Stream({1, 2}, {3, 1, 2})) == Seq(Stream({1}, {2, 3, 1})));
  CHECK(Seq(Stream({2}, {3})) != Seq(Stream({}, {3})));
  // budgets do not participate in equality
  CHECK(Seq(Stream({}, {1}, 5)) == Seq(Stream({}, {1}, 50)));

  // normalized forms denote the same digits
  const Stream a({1, 2}, {3, 1, 2}, 30);
  const Stream b({1}, {2, 3, 1}, 30);
  for (long k = 1; k <= 30; ++k)
    CHECK(a.digit(k) == b.digit(k));
}

TEST_CASE("kinds never alias") {
  CHECK(Seq(Word{1}) != Seq(Stream({}, {1})));
  CHECK(Seq(gw({1, -1, 2})) != Seq(Word{1}));
  CHECK(Seq(gw({1, -1, 2})) != Seq(Stream({1}, {2})));
}
