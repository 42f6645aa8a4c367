#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tzeta {

// Exact arbitrary-precision integers and rationals. Powers of hyperbolic
// matrices grow exponentially, so fixed-width integers are not an option
// anywhere in the exact layer.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Int& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rational& x) {
  if (boost::multiprecision::denominator(x) == 1)
    return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

}  // namespace tzeta
