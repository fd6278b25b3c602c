#ifndef ODELIM_RATIONAL_HPP
#define ODELIM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace odelim {

// Arbitrary-precision integers and rationals. All coefficient arithmetic in
// the library is exact; floating point only appears in the numeric
// validation layer.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int int_lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    Int num = boost::multiprecision::numerator(v);
    Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline long double to_long_double(const Rat& v) {
    return v.convert_to<long double>();
}

}  // namespace odelim

#endif  // ODELIM_RATIONAL_HPP
