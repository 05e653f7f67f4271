#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace flatavoid {

// Arbitrary-precision integers and rationals. Set sizes, weight-enumerator
// values and flat counts overflow 64 bits long before the enumeration caps
// are reached, so every counting interface traffics in these.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

}  // namespace flatavoid
