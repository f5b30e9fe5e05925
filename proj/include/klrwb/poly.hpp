#pragma once
// sparse multivariate polynomials over Q in a fixed number of variables

#include "klrwb/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace klrwb {

class Poly {
public:
    using Mono = std::vector<int>;

    explicit Poly(int nvars = 0) : nv_(nvars) {}
    static Poly constant(int nvars, const Q& c);
    static Poly var(int nvars, int i);

    int nvars() const { return nv_; }
    const std::map<Mono, Q>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int total_degree() const;
    Q coeff(const Mono& m) const;
    void add_term(const Mono& m, const Q& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Q& s) const;
    bool operator==(const Poly& o) const { return nv_ == o.nv_ && t_ == o.t_; }

    // substitute variable i -> c_i * (variable perm[i]) in a polynomial with `target_nvars` variables
    Poly substitute(const std::vector<int>& perm, const std::vector<Q>& scale, int target_nvars) const;
    // exact quotient by (x_a - x_b); throws MathError if not divisible
    Poly divide_by_difference(int a, int b) const;
    // evaluate at pairwise commuting matrices (monomial factors applied in variable order)
    Mat eval(const std::vector<Mat>& xs, int dim) const;
    Q eval(const std::vector<Q>& xs) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    int nv_;
    std::map<Mono, Q> t_;
};

}  // namespace klrwb
