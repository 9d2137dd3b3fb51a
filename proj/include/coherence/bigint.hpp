#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace coherence {

// Exact integer type used for all degree arithmetic. Generator degrees grow
// like 2p^i - 2, so fixed-width arithmetic is not an option.
using Int = boost::multiprecision::cpp_int;

inline std::int64_t to_int64(const Int& v, const char* what = "integer") {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max()) {
        throw std::overflow_error(std::string(what) + " out of int64 range: " + v.str());
    }
    return static_cast<std::int64_t>(v);
}

inline Int int_pow(const Int& base, unsigned exp) {
    Int r = 1;
    Int b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace coherence
