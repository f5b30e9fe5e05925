#include "klrwb/cartan.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

namespace klrwb {

IntMatrix cartan_matrix(int ell) {
    if (ell < 1) throw InvalidRank("rank ell must be >= 1, got " + std::to_string(ell));
    int n = ell + 1;
    IntMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    if (ell == 1) {
        a[0][1] = a[1][0] = -2;
        return a;
    }
    for (int i = 0; i < n; ++i) {
        a[i][(i + 1) % n] = -1;
        a[(i + 1) % n][i] = -1;
    }
    return a;
}

Weight Weight::operator+(const Weight& o) const {
    if (alpha.size() != o.alpha.size()) throw std::invalid_argument("weight rank mismatch");
    Weight w = *this;
    w.level += o.level;
    for (size_t i = 0; i < alpha.size(); ++i) w.alpha[i] += o.alpha[i];
    return w;
}

Weight Weight::operator-(const Weight& o) const { return *this + o.scaled(-1); }

Weight Weight::scaled(long k) const {
    Weight w = *this;
    w.level *= k;
    for (auto& x : w.alpha) x *= k;
    return w;
}

Weight lambda0(int ell) { return Weight{1, std::vector<long>(ell + 1, 0)}; }

Weight simple_root(int ell, int i) {
    if (i < 0 || i > ell) throw std::out_of_range("simple root index out of range");
    Weight w{0, std::vector<long>(ell + 1, 0)};
    w.alpha[i] = 1;
    return w;
}

Weight null_root(int ell) { return Weight{0, std::vector<long>(ell + 1, 1)}; }

long RootVector::height() const {
    long h = 0;
    for (long c : coeffs) h += c;
    return h;
}

Weight RootVector::as_weight() const { return Weight{0, coeffs}; }

static void check_index(const CartanDatum& c, int i, const Weight& w) {
    if (i < 0 || i > c.ell) throw std::out_of_range("index " + std::to_string(i) + " outside I");
    if (static_cast<int>(w.alpha.size()) != c.size()) throw std::invalid_argument("weight rank mismatch");
}

long pair_h(const CartanDatum& c, int i, const Weight& w) {
    check_index(c, i, w);
    long s = (i == 0) ? w.level : 0;
    for (int j = 0; j < c.size(); ++j) s += c.a[i][j] * w.alpha[j];
    return s;
}

long pair_d(const Weight& w) {
    if (w.alpha.empty()) throw std::invalid_argument("empty weight");
    return w.alpha[0];
}

Weight simple_reflection(const CartanDatum& c, int i, const Weight& w) {
    long h = pair_h(c, i, w);
    Weight r = w;
    r.alpha[i] -= h;
    return r;
}

Weight apply_word(const CartanDatum& c, const std::vector<int>& word, const Weight& w) {
    Weight r = w;
    for (int i : word) r = simple_reflection(c, i, r);
    return r;
}

namespace {
struct WeightHash {
    size_t operator()(const Weight& w) const {
        size_t h = std::hash<long>()(w.level);
        for (long x : w.alpha) h = h * 1000003u ^ std::hash<long>()(x);
        return h;
    }
};

std::optional<long> delta_multiple(const Weight& kappa, const Weight& mu) {
    if (kappa.level != mu.level) return std::nullopt;
    long k = kappa.alpha[0] - mu.alpha[0];
    for (size_t i = 1; i < mu.alpha.size(); ++i)
        if (kappa.alpha[i] - mu.alpha[i] != k) return std::nullopt;
    if (k < 0) return std::nullopt;
    return k;
}
}  // namespace

std::optional<OrbitWitness> orbit_search(const CartanDatum& c, const Weight& mu, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    if (static_cast<int>(mu.alpha.size()) != c.size()) throw std::invalid_argument("weight rank mismatch");
    std::unordered_map<Weight, std::vector<int>, WeightHash> seen;
    std::deque<Weight> queue;
    Weight start = lambda0(c.ell);
    seen.emplace(start, std::vector<int>{});
    queue.push_back(start);
    while (!queue.empty()) {
        Weight kappa = queue.front();
        queue.pop_front();
        const auto word = seen.at(kappa);
        if (auto k = delta_multiple(kappa, mu)) return OrbitWitness{word, *k};
        if (static_cast<int>(word.size()) == depth) continue;
        for (int i = 0; i <= c.ell; ++i) {
            if (pair_h(c, i, kappa) == 0) continue;  // r_i fixes kappa
            Weight next = simple_reflection(c, i, kappa);
            if (seen.count(next)) continue;
            auto w2 = word;
            w2.push_back(i);
            seen.emplace(next, std::move(w2));
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

std::string format_weight(const Weight& w) {
    std::ostringstream os;
    os << w.level << "L0";
    for (size_t i = 0; i < w.alpha.size(); ++i) {
        long x = w.alpha[i];
        if (x == 0) continue;
        os << (x > 0 ? " + " : " - ");
        if (std::abs(x) != 1) os << std::abs(x);
        os << "a" << i;
    }
    return os.str();
}

}  // namespace klrwb
