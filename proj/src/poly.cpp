#include "klrwb/poly.hpp"

#include <sstream>

namespace klrwb {

Poly Poly::constant(int nvars, const Q& c) {
    Poly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
}

Poly Poly::var(int nvars, int i) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.add_term(m, 1);
    return p;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

Q Poly::coeff(const Mono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Q(0) : it->second;
}

void Poly::add_term(const Mono& m, const Q& c) {
    if (static_cast<int>(m.size()) != nv_) throw std::invalid_argument("monomial arity mismatch");
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::scaled(const Q& s) const {
    Poly r(nv_);
    if (s == 0) return r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (nv_ != o.nv_) throw std::invalid_argument("polynomial arity mismatch");
    Poly r(nv_);
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) {
            Mono m(nv_);
            for (int i = 0; i < nv_; ++i) m[i] = m1[i] + m2[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Poly Poly::substitute(const std::vector<int>& perm, const std::vector<Q>& scale, int target_nvars) const {
    Poly r(target_nvars);
    for (const auto& [m, c] : t_) {
        Mono mm(target_nvars, 0);
        Q cc = c;
        for (int i = 0; i < nv_; ++i) {
            if (m[i] == 0) continue;
            mm[perm[i]] += m[i];
            Q s = scale[i];
            for (int e = 0; e < m[i]; ++e) cc *= s;
        }
        r.add_term(mm, cc);
    }
    return r;
}

Poly Poly::divide_by_difference(int a, int b) const {
    // repeatedly cancel the term with the highest power of x_a
    Poly rem = *this, quot(nv_);
    while (!rem.is_zero()) {
        const Mono* best = nullptr;
        for (const auto& [m, c] : rem.t_)
            if (!best || m[a] > (*best)[a]) best = &m;
        if ((*best)[a] == 0) break;
        Mono m = *best;
        Q c = rem.coeff(m);
        Mono qm = m;
        --qm[a];
        Poly step(nv_);
        step.add_term(qm, c);
        quot = quot + step;
        Poly diff = var(nv_, a) - var(nv_, b);
        rem = rem - step * diff;
    }
    if (!rem.is_zero()) throw MathError("polynomial not divisible by the variable difference");
    return quot;
}

Mat Poly::eval(const std::vector<Mat>& xs, int dim) const {
    Mat out(dim, dim);
    for (const auto& [m, c] : t_) {
        Mat term = Mat::identity(dim);
        for (int i = 0; i < nv_; ++i)
            for (int e = 0; e < m[i]; ++e) term = term * xs[i];
        out += term.scaled(c);
    }
    return out;
}

Q Poly::eval(const std::vector<Q>& xs) const {
    Q out = 0;
    for (const auto& [m, c] : t_) {
        Q t = c;
        for (int i = 0; i < nv_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= xs[i];
        out += t;
    }
    return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest total degree first for readability
    std::vector<std::pair<Mono, Q>> items(t_.rbegin(), t_.rend());
    for (const auto& [m, c] : items) {
        bool is_const = true;
        for (int e : m)
            if (e) is_const = false;
        Q a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        if (is_const || a != 1) os << a.get_str();
        for (int i = 0; i < nv_; ++i) {
            if (m[i] == 0) continue;
            os << names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace klrwb
