#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cf/evaluator.hpp"
#include "cf/rational.hpp"
#include "cf/seq.hpp"

namespace cf {

// Rational interval with per-endpoint inclusion flags; membership is exact.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed;
  bool hi_closed;

  bool contains(const Rational& x) const {
    if (x < lo || hi < x)
      return false;
    if (x == lo && !lo_closed)
      return false;
    if (x == hi && !hi_closed)
      return false;
    return true;
  }

  std::string str() const;
};

// All x in [0,1] whose first n partial quotients match sigma (n = len(sigma)
// >= 1). Endpoints are the n-th convergent of sigma and the mediant with the
// previous one; each endpoint is included exactly when its own expansion
// starts with sigma, which is decided by running the digit test rather than
// a parity rule.
Interval fundamental_interval(const Word& sigma);

// The two expansions of a rational in (0,1): the canonical one produced by
// the digit map (final digit >= 2) and the alternate with the final digit
// decremented and a trailing 1 appended. Both evaluate to x exactly.
struct PreimagePair {
  Word canonical;
  Word alternate;
  Rational x;
};

using Preimage = std::variant<Word, PreimagePair>;

// Everything that evaluates to x: a single word for x = 0 or x = 1, the
// two-expansion pair for rational x in (0,1).
Preimage preimage(const Rational& x);

// True iff the digit map never produces the alternate word.
bool alternate_is_noncanonical(const PreimagePair& p);

// All words w with len(w) <= max_len, digits <= max_digit and value exactly
// x. Complete bounded search: for a word [d | rest] the value lies in
// [1/(d+1), 1/d], so at each level only the one or two integers in
// [1/y - 1, 1/y] can extend the prefix.
std::vector<Word> preimage_search(const Rational& x, long max_len,
                                  const BigInt& max_digit);

enum class Side { inside, outside };

struct ProbeSample {
  Rational t;
  Word word;        // expansion of t
  Rational distance; // exact distance to the sample's reference word
};

struct ProbeReport {
  std::string kind; // "inside", "outside", "endpoint-0", "endpoint-1", "stream"
  std::optional<Rational> x;
  std::optional<Word> limit_word;
  std::string subject; // serialized probe target (rational or stream)
  std::vector<ProbeSample> samples; // ordered by decreasing |t - x|
};

// Samples t_j = x -+ 10^{-j} * delta approaching a rational x in (0,1) from
// within the fundamental interval of its canonical word (side = inside) or
// from the other side of x (side = outside), and reports the forget-class
// distance of expand(t_j) to the corresponding limit word. count >= 3.
ProbeReport continuity_probe(const Rational& x, Side side, int count);

// Samples the convergent values t_k = eval_k(s, k) for k = 3..count+2 and
// reports the exact distance of expand(t_k) to the stream's (k-1)-digit
// prefix; the stream's budget must be at least count + 2.
ProbeReport irrational_probe(const Stream& s, int count);

// The probes at the two rational points where the digit map is two-sided
// continuous: t_j = 1/j toward 0 (distances are exactly 1/j), and
// t_j = 1 - 1/j toward 1. endpoint must be 0 or 1.
ProbeReport endpoint_probe(int endpoint, int count);

} // namespace cf
