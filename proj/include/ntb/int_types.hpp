#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ntb {

// Exact arithmetic everywhere: arbitrary-precision integers for exponents and
// coefficients, rationals for the fixed-point solver.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Int& x) { return x.sign(); }

// Floor division and the matching non-negative remainder (C++ '/' truncates).
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("floor_div by zero");
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline long long to_ll(const Int& x) { return x.convert_to<long long>(); }

inline Int rat_floor(const Rat& r) {
    return floor_div(Int(boost::multiprecision::numerator(r)),
                     Int(boost::multiprecision::denominator(r)));
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

} // namespace ntb
