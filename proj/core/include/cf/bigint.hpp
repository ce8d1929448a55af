#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cf {

// Unbounded signed integer. Everything downstream (digits, convergents,
// metric weights) is exact on top of this.
using BigInt = boost::multiprecision::cpp_int;

} // namespace cf
