#include "cf/checks.hpp"

#include <numeric>

#include "cf/evaluator.hpp"
#include "cf/fib.hpp"
#include "cf/format.hpp"
#include "cf/metric.hpp"
#include "cf/rng.hpp"
#include "cf/topology.hpp"

namespace cf {

namespace {

CheckResult fail(std::string name, long long cases, std::string detail) {
  return CheckResult{std::move(name), false, cases, std::move(detail)};
}

CheckResult pass(std::string name, long long cases) {
  return CheckResult{std::move(name), true, cases, ""};
}

Seq random_block_seq(SplitMix64& rng, long max_len, long max_digit,
                     int inf_percent) {
  const long len = static_cast<long>(rng.below(static_cast<std::uint64_t>(max_len + 1)));
  std::vector<ExtDigit> entries;
  entries.reserve(static_cast<size_t>(len));
  for (long i = 0; i < len; ++i) {
    if (static_cast<int>(rng.below(100)) < inf_percent)
      entries.push_back(ExtDigit::infinity());
    else
      entries.push_back(ExtDigit(BigInt(rng.range(1, max_digit))));
  }
  return Seq(GeneralWord(std::move(entries)));
}

Word random_word(SplitMix64& rng, long min_len, long max_len, long max_digit) {
  const long len = rng.range(min_len, max_len);
  std::vector<BigInt> block;
  block.reserve(static_cast<size_t>(len));
  for (long i = 0; i < len; ++i)
    block.emplace_back(rng.range(1, max_digit));
  return Word(std::move(block));
}

Rational random_unit_rational(SplitMix64& rng, long max_den) {
  while (true) {
    const long q = rng.range(2, max_den);
    const long p = rng.range(1, q - 1);
    if (std::gcd(p, q) == 1)
      return Rational(BigInt(p), BigInt(q));
  }
}

// Strictly decreasing over the last min(4, size) samples and final below
// the threshold: the computable reading of "eventually strictly decreasing
// toward the limit".
bool converges(const std::vector<ProbeSample>& samples,
               const Rational& threshold, std::string* why) {
  const size_t n = samples.size();
  const size_t tail = std::min<size_t>(4, n);
  for (size_t i = n - tail; i + 1 < n; ++i) {
    if (!(samples[i + 1].distance < samples[i].distance)) {
      *why = "distance not strictly decreasing at sample " + std::to_string(i + 1);
      return false;
    }
  }
  if (!(samples.back().distance < threshold)) {
    *why = "final distance " + samples.back().distance.str() + " not below " +
           threshold.str();
    return false;
  }
  return true;
}

// Weighted mismatch term at the first position where the two words differ.
Rational first_mismatch_bound(const Word& a, const Word& b) {
  FibSequence fibs;
  fibs.next(); // F_0
  const long K = std::max(a.size(), b.size());
  for (long k = 1; k <= K; ++k) {
    const BigInt fk = fibs.next().value;
    if (a.digit(k) != b.digit(k))
      return rho(a.digit(k), b.digit(k)) / Rational(fk * fk);
  }
  return Rational(0);
}

} // namespace

CheckSizes check_sizes(std::string_view preset) {
  if (preset == "small")
    return CheckSizes{60, 2000, 20, 1000, 500, 25, 40, 5, 6, 6, 1000};
  if (preset == "medium")
    return CheckSizes{200, 20000, 20, 3000, 2000, 25, 100, 15, 8, 8, 3000};
  if (preset == "large")
    return CheckSizes{500, 100000, 20, 10000, 10000, 25, 200, 30, 8, 10, 10000};
  throw domain_error("unknown size preset (use small, medium or large)");
}

CheckResult check_roundtrip(int qmax) {
  const std::string name = "roundtrip";
  long long cases = 0;
  for (long q = 1; q <= qmax; ++q) {
    for (long p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1)
        continue;
      const Rational x{BigInt(p), BigInt(q)};
      const Word w = expand(x);
      if (eval_exact(Seq(w)) != x)
        return fail(name, cases,
                    "eval(expand(" + x.str() + ")) != " + x.str());
      if (p > 0 && p < q && w.block().back() < 2)
        return fail(name, cases,
                    "expand(" + x.str() + ") = " + to_text(w) +
                        " has final digit < 2");
      ++cases;
    }
  }
  return pass(name, cases);
}

CheckResult check_lipschitz(std::uint64_t seed, long pairs) {
  const std::string name = "lipschitz";
  SplitMix64 rng(seed);
  for (long i = 0; i < pairs; ++i) {
    const Seq s = random_block_seq(rng, 12, 50, 10);
    const Seq t = random_block_seq(rng, 12, 50, 10);
    const Rational lhs = abs(eval_exact(s) - eval_exact(t));
    const Rational rhs = finite_dist(s, t);
    if (rhs < lhs)
      return fail(name, i,
                  "|eval(s) - eval(t)| > dist(s, t) for s=" + to_text(s) +
                      " t=" + to_text(t) + " (" + lhs.str() + " > " +
                      rhs.str() + ")");
  }
  return pass(name, pairs);
}

CheckResult check_metric(int rho_max, std::uint64_t seed, long triples) {
  const std::string name = "metric";
  long long cases = 0;

  std::vector<ExtDigit> digits;
  for (int m = 1; m <= rho_max; ++m)
    digits.push_back(ExtDigit(BigInt(m)));
  digits.push_back(ExtDigit::infinity());
  const Rational two(2);

  auto show = [](const ExtDigit& d) {
    return d.is_inf() ? std::string("inf") : d.value().str();
  };

  for (const ExtDigit& m : digits) {
    for (const ExtDigit& n : digits) {
      const Rational d = rho(m, n);
      if (d.sign() < 0 || two < d)
        return fail(name, cases, "rho out of [0,2] at (" + show(m) + "," + show(n) + ")");
      if ((m == n) != d.is_zero())
        return fail(name, cases,
                    "rho identity failure at (" + show(m) + "," + show(n) + ")");
      if (d != rho(n, m))
        return fail(name, cases,
                    "rho asymmetric at (" + show(m) + "," + show(n) + ")");
      for (const ExtDigit& p : digits) {
        if (rho(m, n) + rho(n, p) < rho(m, p))
          return fail(name, cases,
                      "rho triangle failure at (" + show(m) + "," + show(n) +
                          "," + show(p) + ")");
        ++cases;
      }
    }
  }

  SplitMix64 rng(seed);
  for (long i = 0; i < triples; ++i) {
    const Word a = random_word(rng, 0, 12, 50);
    const Word b = random_word(rng, 0, 12, 50);
    const Word c = random_word(rng, 0, 12, 50);
    const Rational ab = finite_dist(Seq(a), Seq(b));
    const Rational bc = finite_dist(Seq(b), Seq(c));
    const Rational ac = finite_dist(Seq(a), Seq(c));
    if (ab + bc < ac)
      return fail(name, cases,
                  "distance triangle failure at a=" + to_text(a) +
                      " b=" + to_text(b) + " c=" + to_text(c));
    if (ab != finite_dist(Seq(b), Seq(a)))
      return fail(name, cases, "distance asymmetric at a=" + to_text(a) +
                                   " b=" + to_text(b));
    if ((a == b) != ab.is_zero())
      return fail(name, cases, "distance identity failure at a=" + to_text(a) +
                                   " b=" + to_text(b));
    ++cases;
  }
  return pass(name, cases);
}

CheckResult check_convergents(std::uint64_t seed, long words,
                              int stream_depth) {
  const std::string name = "convergents";
  long long cases = 0;

  std::vector<BigInt> fibs; // fibs[k] = F(k)
  for (long k = 0; k <= 32; ++k)
    fibs.push_back(fib(k));

  SplitMix64 rng(seed);
  for (long i = 0; i < words; ++i) {
    const Word w = random_word(rng, 1, 15, 30);
    const Convergents c(Seq(w), w.size());
    bool all_ones = true;
    for (long k = 1; k <= w.size(); ++k) {
      all_ones = all_ones && w.block()[static_cast<size_t>(k - 1)] == 1;
      const BigInt& qk = c.q(k);
      if (qk < fibs[static_cast<size_t>(k + 1)])
        return fail(name, cases,
                    "q(" + std::to_string(k) + ") < F(" + std::to_string(k + 1) +
                        ") for " + to_text(w));
      if (all_ones != (qk == fibs[static_cast<size_t>(k + 1)]))
        return fail(name, cases,
                    "q(k) = F(k+1) exactly on all-ones prefixes violated for " +
                        to_text(w) + " at k=" + std::to_string(k));
      if (gcd(c.p(k), qk) != 1)
        return fail(name, cases,
                    "p(k), q(k) not coprime for " + to_text(w) +
                        " at k=" + std::to_string(k));
    }
    ++cases;
  }

  // All-ones stream: q(k) hits the Fibonacci floor, and each enclosure
  // traps the golden value (the positive root of x^2 + x - 1) with width
  // exactly 1/(q(k) q(k+1)).
  const Stream ones({}, {1}, stream_depth);
  const Convergents c(Seq(ones), stream_depth);
  auto golden_sign = [](const Rational& x) {
    return (x * x + x - Rational(1)).sign();
  };
  for (long k = 1; k <= stream_depth; ++k) {
    if (c.q(k) != fibs[static_cast<size_t>(k + 1)])
      return fail(name, cases, "all-ones stream q(k) != F(k+1) at k=" +
                                   std::to_string(k));
    if (k < stream_depth) {
      Rational lo = c.value(k);
      Rational hi = c.value(k + 1);
      if (hi < lo)
        std::swap(lo, hi);
      if (!(golden_sign(lo) < 0 && golden_sign(hi) > 0))
        return fail(name, cases,
                    "enclosure misses the golden value at k=" + std::to_string(k));
      if (hi - lo != Rational(BigInt(1), c.q(k) * c.q(k + 1)))
        return fail(name, cases,
                    "enclosure width != 1/(q(k) q(k+1)) at k=" + std::to_string(k));
    }
    ++cases;
  }
  return pass(name, cases);
}

CheckResult check_preimage(int qmax) {
  const std::string name = "preimage";
  long long cases = 0;
  for (long q = 2; q <= qmax; ++q) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1)
        continue;
      const Rational x{BigInt(p), BigInt(q)};
      const auto pre = std::get<PreimagePair>(preimage(x));
      const Word& can = pre.canonical;
      const Word& alt = pre.alternate;
      if (eval_exact(Seq(can)) != x || eval_exact(Seq(alt)) != x)
        return fail(name, cases, "preimage of " + x.str() + " does not evaluate back");
      if (can != expand(x))
        return fail(name, cases, "canonical word is not expand(" + x.str() + ")");
      // Alternate = canonical with final digit decremented, then a 1.
      if (alt.size() != can.size() + 1 || alt.block().back() != 1 ||
          alt.block()[static_cast<size_t>(can.size() - 1)] !=
              can.block().back() - 1 ||
          !std::equal(can.block().begin(), can.block().end() - 1,
                      alt.block().begin()))
        return fail(name, cases, "alternate word malformed for " + x.str());
      if (!alternate_is_noncanonical(pre))
        return fail(name, cases,
                    "expand returned the alternate word for " + x.str());
      const std::vector<Word> found =
          preimage_search(x, can.size() + 1, BigInt(2 * q));
      if (found.size() != 2 ||
          !((found[0] == can && found[1] == alt) ||
            (found[0] == alt && found[1] == can)))
        return fail(name, cases,
                    "bounded search found " + std::to_string(found.size()) +
                        " preimages of " + x.str());
      ++cases;
    }
  }
  return pass(name, cases);
}

CheckResult check_probe_rational(std::uint64_t seed, int randoms, int count) {
  const std::string name = "probe";
  long long cases = 0;
  const Rational small(BigInt(1), BigInt(100));

  std::vector<Rational> targets;
  targets.emplace_back(BigInt(1), BigInt(2));
  SplitMix64 rng(seed);
  for (int i = 0; i < randoms; ++i)
    targets.push_back(random_unit_rational(rng, 50));

  for (const Rational& x : targets) {
    const auto pre = std::get<PreimagePair>(preimage(x));
    const Rational bound = first_mismatch_bound(pre.canonical, pre.alternate);
    std::string why;

    const ProbeReport inside = continuity_probe(x, Side::inside, count);
    if (!converges(inside.samples, small, &why))
      return fail(name, cases, "inside probe at " + x.str() + ": " + why);

    const ProbeReport outside = continuity_probe(x, Side::outside, count);
    if (!converges(outside.samples, small, &why))
      return fail(name, cases, "outside probe at " + x.str() + ": " + why);

    // Against the wrong limit the first-position mismatch keeps the
    // distance bounded away from zero.
    const Rational floor_bound = bound / Rational(2);
    for (const ProbeSample& s : inside.samples) {
      if (quotient_dist(s.word, pre.alternate) < floor_bound)
        return fail(name, cases,
                    "inside sample " + s.t.str() + " at " + x.str() +
                        " got closer than " + floor_bound.str() +
                        " to the wrong limit");
    }
    ++cases;
  }
  return pass(name, cases);
}

CheckResult check_probe_limits(int count) {
  const std::string name = "probe-limits";
  long long cases = 0;

  const ProbeReport zero = endpoint_probe(0, count);
  for (int j = 1; j <= count; ++j) {
    const ProbeSample& s = zero.samples[static_cast<size_t>(j - 1)];
    if (s.distance != Rational(BigInt(1), BigInt(j)))
      return fail(name, cases,
                  "probe toward 0: distance at t=" + s.t.str() + " is " +
                      s.distance.str() + ", expected 1/" + std::to_string(j));
    ++cases;
  }

  const ProbeReport one = endpoint_probe(1, count);
  for (size_t i = 1; i + 1 < one.samples.size(); ++i) {
    if (!(one.samples[i + 1].distance < one.samples[i].distance))
      return fail(name, cases, "probe toward 1: distances not decreasing");
  }
  if (one.samples.back().distance != Rational(BigInt(1), BigInt(count)))
    return fail(name, cases, "probe toward 1: final distance is " +
                                 one.samples.back().distance.str());
  ++cases;

  const Stream ones({}, {1}, count + 2);
  const ProbeReport irr = irrational_probe(ones, count);
  for (size_t i = 0; i + 1 < irr.samples.size(); ++i) {
    if (!(irr.samples[i + 1].distance < irr.samples[i].distance))
      return fail(name, cases, "all-ones probe: distances not decreasing");
  }
  const BigInt f = fib(count - 1);
  if (!(irr.samples.back().distance < Rational(BigInt(1), f * f)))
    return fail(name, cases,
                "all-ones probe: final distance " +
                    irr.samples.back().distance.str() + " not below 1/F(" +
                    std::to_string(count - 1) + ")^2");
  ++cases;

  return pass(name, cases);
}

CheckResult check_gcomp(std::uint64_t seed, long words) {
  const std::string name = "gcomp";
  SplitMix64 rng(seed);
  for (long i = 0; i < words; ++i) {
    const Seq s = random_block_seq(rng, 12, 50, 30);
    const Seq g = forget(s);
    if (!stratum(g).in_sigma())
      return fail(name, i, "forget(" + to_text(s) + ") left the stratified space");
    if (forget(g) != g)
      return fail(name, i, "forget not idempotent on " + to_text(s));
    if (eval_exact(s) != eval_exact(g))
      return fail(name, i, "eval changed under forget on " + to_text(s));
    if (stratum(s).in_sigma() && g != s)
      return fail(name, i, "forget moved a stratified sequence " + to_text(s));
  }
  return pass(name, words);
}

CheckResult check_fib_binet() {
  const std::string name = "fib";
  long long cases = 0;
  for (long n = 0; n <= 70; ++n) {
    if (!fib_binet_check(n))
      return fail(name, cases, "Binet cross-check failed at n=" + std::to_string(n));
    ++cases;
  }
  for (long n = 1; n <= 40; ++n) {
    const BigInt cassini = fib(n + 1) * fib(n - 1) - fib(n) * fib(n);
    if (cassini != (n % 2 == 0 ? BigInt(1) : BigInt(-1)))
      return fail(name, cases, "Cassini identity failed at n=" + std::to_string(n));
    ++cases;
  }
  return pass(name, cases);
}

CheckResult check_tail_bound() {
  const std::string name = "tailbound";
  long long cases = 0;
  for (long K = 4; K <= 30; ++K) {
    // Exact partial tail sum_{k=K+1}^{K+60} 2/F_k^2.
    FibSequence fibs;
    fibs.next();
    Rational tail(0);
    for (long k = 1; k <= K + 60; ++k) {
      const BigInt fk = fibs.next().value;
      if (k > K)
        tail += Rational(BigInt(2), fk * fk);
    }
    if (tail_bound(K) < tail)
      return fail(name, cases,
                  "tail_bound(" + std::to_string(K) + ") below the exact tail");
    ++cases;
  }
  return pass(name, cases);
}

bool known_suite(std::string_view suite) {
  return suite == "roundtrip" || suite == "lipschitz" || suite == "metric" ||
         suite == "convergents" || suite == "preimage" || suite == "probe" ||
         suite == "gcomp" || suite == "fib" || suite == "tailbound" ||
         suite == "all";
}

std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed,
                                   const CheckSizes& sz) {
  if (!known_suite(suite))
    throw domain_error("unknown suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "roundtrip")
    out.push_back(check_roundtrip(sz.roundtrip_qmax));
  if (all || suite == "lipschitz")
    out.push_back(check_lipschitz(seed, sz.lipschitz_pairs));
  if (all || suite == "metric")
    out.push_back(check_metric(sz.rho_exhaustive_max, seed, sz.triangle_triples));
  if (all || suite == "convergents")
    out.push_back(check_convergents(seed, sz.convergent_words, sz.stream_depth));
  if (all || suite == "preimage")
    out.push_back(check_preimage(sz.preimage_qmax));
  if (all || suite == "probe") {
    out.push_back(check_probe_rational(seed, sz.probe_randoms, sz.probe_count));
    out.push_back(check_probe_limits(sz.limit_probe_count));
  }
  if (all || suite == "gcomp")
    out.push_back(check_gcomp(seed, sz.gcomp_words));
  if (all || suite == "fib")
    out.push_back(check_fib_binet());
  if (all || suite == "tailbound")
    out.push_back(check_tail_bound());
  return out;
}

} // namespace cf
