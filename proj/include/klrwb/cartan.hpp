#pragma once
// affine Cartan datum of type A_l^(1), weights in the basis {Lambda_0, alpha_0..alpha_l}

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrwb {

using IntMatrix = std::vector<std::vector<int>>;

struct InvalidRank : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

IntMatrix cartan_matrix(int ell);

struct CartanDatum {
    int ell;
    IntMatrix a;
    explicit CartanDatum(int l) : ell(l), a(cartan_matrix(l)) {}
    int size() const { return ell + 1; }
};

struct Weight {
    long level = 0;           // coefficient of Lambda_0
    std::vector<long> alpha;  // coefficients of alpha_0..alpha_l

    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(long k) const;
};

// Lambda_0, alpha_i, delta for rank ell
Weight lambda0(int ell);
Weight simple_root(int ell, int i);
Weight null_root(int ell);

struct RootVector {
    std::vector<long> coeffs;
    long height() const;
    Weight as_weight() const;
};

long pair_h(const CartanDatum& c, int i, const Weight& w);
long pair_d(const Weight& w);
Weight simple_reflection(const CartanDatum& c, int i, const Weight& w);

// [0,1] means r_1 r_0, i.e. word[0] acts first
Weight apply_word(const CartanDatum& c, const std::vector<int>& word, const Weight& w);

struct OrbitWitness {
    std::vector<int> word;
    long k = 0;
};

// mu = w(Lambda_0) - k delta, breadth-first over words of length <= depth
std::optional<OrbitWitness> orbit_search(const CartanDatum& c, const Weight& mu, int depth = 20);

std::string format_weight(const Weight& w);

}  // namespace klrwb
