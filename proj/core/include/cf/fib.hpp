#pragma once

#include "cf/bigint.hpp"

namespace cf {

// One Fibonacci number together with its index. F(0) = 0, F(1) = 1,
// F(n+2) = F(n+1) + F(n).
struct Fib {
  long index;
  BigInt value;
};

// F(n) by iteration with unbounded integers.
BigInt fib(long n);

// Cross-checks fib(n) against the closed floating-point form
// (phi^n - psi^n)/sqrt(5) rounded to the nearest integer. Only valid while
// doubles still resolve integers: n <= 70.
bool fib_binet_check(long n);

// Emits (0, F0), (1, F1), ... one step at a time; O(1) big-int additions per
// step. Used by the metric to walk the weights 1/F_k^2 without recomputing.
class FibSequence {
public:
  Fib next() {
    Fib out{idx_, a_};
    BigInt c = a_ + b_;
    a_ = b_;
    b_ = c;
    ++idx_;
    return out;
  }

private:
  long idx_ = 0;
  BigInt a_ = 0;
  BigInt b_ = 1;
};

} // namespace cf
