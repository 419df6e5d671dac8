#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace monopoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::int64_t to_int64(const Int& n) {
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer too large for 64-bit conversion: " + n.str());
    return n.convert_to<std::int64_t>();
}

inline std::int64_t to_int64(const Rational& r) {
    if (!is_integer(r)) throw std::invalid_argument("rational " + r.str() + " is not an integer");
    return to_int64(numerator(r));
}

// "4/3" or "4" when the denominator is 1.
inline std::string rational_str(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace monopoly
