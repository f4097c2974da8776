#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eqsc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline bool is_integral(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

} // namespace eqsc
