#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cf/rational.hpp"
#include "cf/seq.hpp"

namespace cf {

// The one-point-compactification metric on extended digits and the
// Fibonacci-weighted product metric on digit sequences. Exact on finitely
// supported pairs; stream pairs get a rigorous bracket.

// rho(m, n) = 1/m + 1/n for m != n (1/inf = 0), and 0 on the diagonal.
// Bounded by 2.
Rational rho(const ExtDigit& m, const ExtDigit& n);

// Rational upper bound on the series tail: sum_{k > K} (1/F_k^2) * rho_max
// with rho_max = 2. Since F_{k+1} >= (3/2) F_k for k >= 3, the terms decay
// at ratio <= 4/9, giving (18/5) / F_{K+1}^2. Valid for K >= 4.
Rational tail_bound(long K);

// Either an exact distance or a bracket [lo, hi] that contains it; exactly
// one of the two is present. depth_used is the number of leading terms
// summed explicitly.
struct DistResult {
  std::optional<Rational> exact;
  std::optional<std::pair<Rational, Rational>> bracket;
  long depth_used = 0;

  bool is_exact() const { return exact.has_value(); }
  // Serialized as "exact p/q" or "bracket p1/q1 p2/q2 depth=K".
  std::string str() const;

  // Value equality: the depth is part of a bracket (it scopes the tail
  // bound) but only bookkeeping for an exact distance.
  friend bool operator==(const DistResult& a, const DistResult& b) {
    if (a.exact && b.exact)
      return *a.exact == *b.exact;
    if (a.bracket && b.bracket)
      return *a.bracket == *b.bracket && a.depth_used == b.depth_used;
    return false;
  }
};

// Weighted distance sum_{k>=1} (1/F_k^2) rho(s_k, t_k) on the denoted
// sequences. Finitely supported pairs are exact (past both blocks every
// term is 0); any comparison involving a stream returns the bracket
// [partial, partial + tail_bound(K)] at K = min available depth, unless the
// two sides denote the same sequence (exact 0). An explicit depth may cap K.
DistResult dist(const Seq& s, const Seq& t,
                std::optional<long> depth = std::nullopt);

// Exact distance between finitely supported sequences.
Rational finite_dist(const Seq& s, const Seq& t);

// Distance between the forget-classes of two words: the minimum of the
// weighted distance over representatives, which is the sum truncated at
// position min(len(a), len(b)) + 1. This is the number that witnesses
// convergence in the identified space, where digits hidden behind the first
// infinity cannot separate points.
Rational quotient_dist(const Word& a, const Word& b);

} // namespace cf
