#include "cf/evaluator.hpp"

#include <cassert>

namespace cf {

namespace {

void check_unit_interval(const Rational& x) {
  if (x.sign() < 0 || Rational(1) < x)
    throw domain_error("domain is [0,1]");
}

// Number of leading finite digits among the first limit positions (the
// whole support for words, entries before the first infinity for general
// words). Streams have no infinity digits.
long finite_prefix(const Seq& s, long limit) {
  switch (s.kind()) {
  case SeqKind::word:
    return std::min(limit, s.word().size());
  case SeqKind::general: {
    const auto& entries = s.general().entries();
    long n = 0;
    while (n < limit && n < static_cast<long>(entries.size()) &&
           !entries[static_cast<size_t>(n)].is_inf())
      ++n;
    return n;
  }
  default:
    return limit;
  }
}

} // namespace

ExtDigit gauss_digit(const Rational& x) {
  check_unit_interval(x);
  if (x.is_zero())
    return ExtDigit::infinity();
  // x = p/q in lowest terms, 0 < p <= q: floor(1/x) = q div p.
  return ExtDigit(BigInt(x.den() / x.num()));
}

Rational gauss_step(const Rational& x) {
  check_unit_interval(x);
  if (x.is_zero())
    return Rational(0);
  return Rational(x.den() % x.num(), x.num());
}

Word expand(const Rational& x) {
  check_unit_interval(x);
  std::vector<BigInt> digits;
  BigInt p = x.num();
  BigInt q = x.den();
  while (p != 0) {
    digits.push_back(q / p);
    BigInt r = q % p;
    q = p;
    p = r;
  }
  // Canonical form: x in (0,1) always ends with a digit >= 2; [1] only at x=1.
  assert(digits.empty() || digits.back() >= 2 ||
         (digits.size() == 1 && digits[0] == 1));
  return Word(std::move(digits));
}

Convergents::Convergents(const Seq& s, long n) : n_(n) {
  if (n < 0)
    throw domain_error("convergents require n >= 0");
  if (finite_prefix(s, n) < n)
    throw domain_error("convergents require finite digits");
  p_.reserve(static_cast<size_t>(n + 2));
  q_.reserve(static_cast<size_t>(n + 2));
  p_.push_back(1); // k = -1
  q_.push_back(0);
  p_.push_back(0); // k = 0
  q_.push_back(1);
  for (long k = 1; k <= n; ++k) {
    const BigInt d = s.digit(k).value(); // stream budget enforced here
    p_.push_back(d * p_[static_cast<size_t>(k)] +
                 p_[static_cast<size_t>(k - 1)]);
    q_.push_back(d * q_[static_cast<size_t>(k)] +
                 q_[static_cast<size_t>(k - 1)]);
  }
}

Rational eval_k(const Seq& s, long k) {
  if (k < 0)
    throw domain_error("evaluation depth must be non-negative");
  Rational v(0);
  for (long j = k; j >= 1; --j) {
    const ExtDigit d = s.digit(j);
    if (d.is_inf())
      v = Rational(0);
    else
      v = (Rational(d.value()) + v).reciprocal();
  }
  return v;
}

EvalResult eval(const Seq& s) {
  if (s.is_stream()) {
    const long budget = s.stream().depth_budget();
    if (budget < 2)
      throw domain_error("depth budget exceeded");
    const long depth = budget - 1;
    Convergents c(s, budget);
    Rational a = c.value(depth);
    Rational b = c.value(depth + 1);
    if (b < a)
      std::swap(a, b);
    return Enclosure{a, b, depth};
  }
  return eval_exact(s);
}

Rational eval_exact(const Seq& s) {
  if (s.is_stream())
    throw domain_error("stream values are irrational; evaluate to an enclosure");
  const long n = finite_prefix(s, s.is_word() ? s.word().size()
                                              : s.general().size());
  return eval_k(s, n);
}

} // namespace cf
