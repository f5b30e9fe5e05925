#pragma once
// exact rationals; everything downstream uses Q, never floating point

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace klrwb {

using Q = mpq_class;
using Vec = std::vector<Q>;

// "p/q", "-3", " 2/6 " (normalized)
Q parse_rational(const std::string& s);
std::string to_string(const Q& q);

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace klrwb
