#include "cf/fib.hpp"

#include <cmath>

#include "cf/error.hpp"

namespace cf {

BigInt fib(long n) {
  if (n < 0)
    throw domain_error("fibonacci index must be non-negative");
  BigInt a = 0, b = 1;
  for (long i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

bool fib_binet_check(long n) {
  if (n < 0 || n > 70)
    throw domain_error("depth exceeds float-safe range");
  const double sqrt5 = std::sqrt(5.0);
  const double phi = (1.0 + sqrt5) / 2.0;
  const double psi = (1.0 - sqrt5) / 2.0;
  const double binet = (std::pow(phi, double(n)) - std::pow(psi, double(n))) / sqrt5;
  return BigInt(std::llround(binet)) == fib(n);
}

} // namespace cf
