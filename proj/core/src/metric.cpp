#include "cf/metric.hpp"

#include <algorithm>
#include <limits>

#include "cf/fib.hpp"

namespace cf {

namespace {

Rational reciprocal_or_zero(const ExtDigit& d) {
  return d.is_inf() ? Rational(0) : Rational(BigInt(1), d.value());
}

long support_len(const Seq& s) {
  return s.is_word() ? s.word().size() : s.general().size();
}

// sum_{k=1}^{K} (1/F_k^2) rho(s_k, t_k), walking the Fibonacci pair along.
Rational partial_sum(const Seq& s, const Seq& t, long K) {
  Rational acc(0);
  FibSequence fibs;
  fibs.next(); // skip F_0
  for (long k = 1; k <= K; ++k) {
    const BigInt fk = fibs.next().value;
    const Rational r = rho(s.digit(k), t.digit(k));
    if (!r.is_zero())
      acc += r / Rational(fk * fk);
  }
  return acc;
}

} // namespace

Rational rho(const ExtDigit& m, const ExtDigit& n) {
  if (m == n)
    return Rational(0);
  return reciprocal_or_zero(m) + reciprocal_or_zero(n);
}

Rational tail_bound(long K) {
  if (K < 4)
    throw domain_error("tail bound valid for K >= 4");
  const BigInt f = fib(K + 1);
  return Rational(BigInt(18), BigInt(5) * f * f);
}

std::string DistResult::str() const {
  if (exact)
    return "exact " + exact->str();
  return "bracket " + bracket->first.str() + " " + bracket->second.str() +
         " depth=" + std::to_string(depth_used);
}

DistResult dist(const Seq& s, const Seq& t, std::optional<long> depth) {
  if (s == t)
    return DistResult{Rational(0), std::nullopt, 0};

  const bool stream_involved = s.is_stream() || t.is_stream();
  if (!stream_involved) {
    const long K = std::max(support_len(s), support_len(t));
    return DistResult{partial_sum(s, t, K), std::nullopt, K};
  }

  long K;
  if (depth) {
    K = *depth;
    if ((s.is_stream() && K > s.stream().depth_budget()) ||
        (t.is_stream() && K > t.stream().depth_budget()))
      throw domain_error("depth budget exceeded");
  } else {
    K = std::numeric_limits<long>::max();
    if (s.is_stream())
      K = std::min(K, s.stream().depth_budget());
    if (t.is_stream())
      K = std::min(K, t.stream().depth_budget());
  }
  const Rational partial = partial_sum(s, t, K);
  return DistResult{std::nullopt,
                    std::make_pair(partial, partial + tail_bound(K)), K};
}

Rational finite_dist(const Seq& s, const Seq& t) {
  if (s.is_stream() || t.is_stream())
    throw domain_error("exact distance requires finitely supported sequences");
  return partial_sum(s, t, std::max(support_len(s), support_len(t)));
}

Rational quotient_dist(const Word& a, const Word& b) {
  const long K = std::min(a.size(), b.size()) + 1;
  return partial_sum(Seq(a), Seq(b), K);
}

} // namespace cf
