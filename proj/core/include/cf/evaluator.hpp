#pragma once

#include <variant>
#include <vector>

#include "cf/rational.hpp"
#include "cf/seq.hpp"

namespace cf {

// Digit extraction, the extended Gauss map step, and evaluation of digit
// sequences back to numbers. Everything here is exact.

// First partial quotient of x: floor(1/x) for x != 0, infinity for x == 0.
// Domain [0,1].
ExtDigit gauss_digit(const Rational& x);

// Fractional part of 1/x; 0 at x == 0. Domain [0,1].
Rational gauss_step(const Rational& x);

// Full expansion of a rational in [0,1]: iterate digit/step until the
// infinity digit appears. expand(0) = [], expand(1) = [1]; for x in (0,1)
// the final digit is >= 2. Terminates because each step strictly shrinks
// the denominator.
Word expand(const Rational& x);

// The table p(k)/q(k), k = -1..n, built by the standard paired recurrences
// p(k) = d_k p(k-1) + p(k-2), q(k) = d_k q(k-1) + q(k-2) from p(-1)=1,
// q(-1)=0, p(0)=0, q(0)=1. For k >= 0, value(k) is the evaluation of the
// first k digits.
class Convergents {
public:
  Convergents(const Seq& s, long n);

  long max_index() const { return n_; }
  const BigInt& p(long k) const { return p_[idx(k)]; }
  const BigInt& q(long k) const { return q_[idx(k)]; }
  Rational value(long k) const {
    if (k < 0)
      throw domain_error("convergent value defined for k >= 0");
    return Rational(p(k), q(k));
  }

private:
  size_t idx(long k) const {
    if (k < -1 || k > n_)
      throw domain_error("convergent index out of range");
    return static_cast<size_t>(k + 1);
  }
  long n_;
  std::vector<BigInt> p_;
  std::vector<BigInt> q_;
};

inline Convergents convergents(const Seq& s, long n) {
  return Convergents(s, n);
}

// Value of the finite continued fraction on the first k digits, evaluated
// innermost-first so an infinity digit zeroes out its whole level
// (1/inf = 0 regardless of what lies deeper). eval_k(s, 0) = 0.
Rational eval_k(const Seq& s, long k);

// Exact rational interval around a stream's value: the two convergents at
// depth and depth+1, whose gap is exactly 1/(q(depth) q(depth+1)).
struct Enclosure {
  Rational lo;
  Rational hi;
  long depth;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

using EvalResult = std::variant<Rational, Enclosure>;

// Value of a sequence. Words and general words evaluate exactly (the digits
// after the first infinity cannot matter); a stream yields the Enclosure at
// depth = depth_budget - 1, so its budget must be at least 2.
EvalResult eval(const Seq& s);

// eval for finitely supported sequences only.
Rational eval_exact(const Seq& s);

} // namespace cf
