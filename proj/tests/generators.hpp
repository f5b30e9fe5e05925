#pragma once
// hand-rolled generators for the property tests; fixed seeds keep runs reproducible

#include "klrwb/cartan.hpp"
#include "klrwb/rational.hpp"
#include "klrwb/tableaux.hpp"

#include <random>

namespace gen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 r(987654321);
    return r;
}

inline long range(long lo, long hi) { return lo + static_cast<long>(rng()() % static_cast<unsigned long>(hi - lo + 1)); }

inline klrwb::Weight weight(int ell) {
    klrwb::Weight w;
    w.level = range(-3, 3);
    for (int i = 0; i <= ell; ++i) w.alpha.push_back(range(-5, 5));
    return w;
}

inline std::vector<int> word(int ell, int maxlen) {
    std::vector<int> w(range(0, maxlen));
    for (auto& x : w) x = static_cast<int>(range(0, ell));
    return w;
}

inline klrwb::Partition partition(int maxn) {
    auto ps = klrwb::partitions(static_cast<int>(range(0, maxn)));
    return ps[range(0, static_cast<long>(ps.size()) - 1)];
}

// nonzero rationals drawn from {+-1, 2, 1/3} and a few more
inline klrwb::Q nonzero_rational() {
    static const klrwb::Q pool[] = {1, -1, 2, klrwb::Q(1, 3), klrwb::Q(-3, 2), 5, klrwb::Q(2, 7)};
    return pool[range(0, 6)];
}

}  // namespace gen
