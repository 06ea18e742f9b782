#pragma once

// Arbitrary-precision integers/rationals used by the exact combinatorics and
// the finite-graph trace computations.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace dualtube {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline std::string to_decimal(const BigRat& v) {
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

inline double to_double(const BigRat& v) { return v.convert_to<double>(); }

} // namespace dualtube
