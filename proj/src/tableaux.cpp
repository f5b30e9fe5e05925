#include "klrwb/tableaux.hpp"

#include "klrwb/rational.hpp"

#include <map>
#include <sstream>

namespace klrwb {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i && p[i] > p[i - 1]) return false;
    }
    return true;
}

int size_of(const Partition& p) {
    int n = 0;
    for (int x : p) n += x;
    return n;
}

int residue(int ell, int i, int j) {
    int m = ell + 1;
    return (((j - i) % m) + m) % m;
}

namespace {

void gen_partitions(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

void check_shape(const Partition& p) {
    if (!is_partition(p)) throw std::invalid_argument("not a partition");
}

// entries placed in increasing order: entry m goes to an addable corner of the current filling
void fill(const Partition& shape, std::vector<int>& rowlen, int next, int n, StandardTableau& cur,
          std::vector<StandardTableau>& out) {
    if (next > n) {
        out.push_back(cur);
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        if (rowlen[r] >= shape[r]) continue;
        if (r > 0 && rowlen[r - 1] <= rowlen[r]) continue;
        cur.rows[r].push_back(next);
        ++rowlen[r];
        fill(shape, rowlen, next + 1, n, cur, out);
        --rowlen[r];
        cur.rows[r].pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, cur, out);
    return out;
}

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    check_shape(shape);
    std::vector<StandardTableau> out;
    StandardTableau cur{shape, std::vector<std::vector<int>>(shape.size())};
    std::vector<int> rowlen(shape.size(), 0);
    fill(shape, rowlen, 1, size_of(shape), cur, out);
    return out;
}

std::uint64_t count_standard_tableaux(const Partition& shape) {
    // counted by the same recursion, memoized on the remaining shape
    check_shape(shape);
    static thread_local std::map<Partition, std::uint64_t> memo;
    if (shape.empty()) return 1;
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (size_t r = 0; r < shape.size(); ++r) {
        bool removable = (r + 1 == shape.size()) || shape[r + 1] < shape[r];
        if (!removable) continue;
        Partition smaller = shape;
        if (--smaller[r] == 0) smaller.pop_back();
        total += count_standard_tableaux(smaller);
    }
    memo.emplace(shape, total);
    return total;
}

ResidueSeq residue_sequence(int ell, const StandardTableau& t) {
    int n = size_of(t.shape);
    ResidueSeq nu(n, -1);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c) nu[t.rows[r][c] - 1] = residue(ell, r + 1, c + 1);
    return nu;
}

long k_number(int ell, const Partition& shape, const ResidueSeq& nu) {
    check_shape(shape);
    if (static_cast<int>(nu.size()) != size_of(shape))
        throw std::invalid_argument("residue word length differs from shape size");
    // fill entries 1..n in order; entry m must land on an addable cell of residue nu[m-1]
    std::map<Partition, long> layer{{Partition{}, 1}};
    for (int m = 0; m < static_cast<int>(nu.size()); ++m) {
        std::map<Partition, long> next;
        for (const auto& [p, cnt] : layer) {
            for (size_t r = 0; r <= p.size(); ++r) {
                int len = r < p.size() ? p[r] : 0;
                if (r > 0 && p[r - 1] <= len) continue;
                if (r >= shape.size() || len + 1 > shape[r]) continue;
                if (residue(ell, r + 1, len + 1) != nu[m]) continue;
                Partition q = p;
                if (r < q.size())
                    ++q[r];
                else
                    q.push_back(1);
                next[q] += cnt;
            }
        }
        layer = std::move(next);
    }
    auto it = layer.find(shape);
    return it == layer.end() ? 0 : it->second;
}

Weight weight_of(const Partition& shape, int ell) {
    check_shape(shape);
    Weight w = lambda0(ell);
    for (size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) w.alpha[residue(ell, r + 1, c + 1)] -= 1;
    return w;
}

std::uint64_t dim_idempotent_hom(int ell, const ResidueSeq& nu1, const ResidueSeq& nu2) {
    if (nu1.size() != nu2.size()) throw std::invalid_argument("residue words of different length");
    for (int x : nu1)
        if (x < 0 || x > ell) throw std::invalid_argument("residue outside I");
    for (int x : nu2)
        if (x < 0 || x > ell) throw std::invalid_argument("residue outside I");
    std::uint64_t total = 0;
    for (const auto& p : partitions(static_cast<int>(nu1.size()))) {
        long a = k_number(ell, p, nu1);
        if (a == 0) continue;
        total += static_cast<std::uint64_t>(a) * k_number(ell, p, nu2);
    }
    return total;
}

std::uint64_t dim_block(int ell, const std::vector<long>& beta) {
    if (static_cast<int>(beta.size()) != ell + 1) throw std::invalid_argument("beta has wrong length");
    long n = 0;
    for (long b : beta) {
        if (b < 0) throw std::invalid_argument("beta must be in Q+");
        n += b;
    }
    std::uint64_t total = 0;
    for (const auto& p : partitions(static_cast<int>(n))) {
        Weight w = weight_of(p, ell);
        bool match = true;
        for (int i = 0; i <= ell; ++i)
            if (-w.alpha[i] != beta[i]) match = false;
        if (!match) continue;
        std::uint64_t f = count_standard_tableaux(p);
        total += f * f;
    }
    return total;
}

std::uint64_t dim_full_by_blocks(int ell, int n) {
    // group partitions by content; each content is one block
    std::map<std::vector<long>, std::uint64_t> blocks;
    for (const auto& p : partitions(n)) {
        Weight w = weight_of(p, ell);
        std::vector<long> beta(ell + 1);
        for (int i = 0; i <= ell; ++i) beta[i] = -w.alpha[i];
        blocks.emplace(beta, 0);
    }
    std::uint64_t total = 0;
    for (auto& [beta, d] : blocks) total += dim_block(ell, beta);
    return total;
}

std::uint64_t dim_full(int ell, int n) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    std::uint64_t fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    std::uint64_t sum = dim_full_by_blocks(ell, n);
    if (sum != fact)
        throw MathError("dimension formula mismatch: n! = " + std::to_string(fact) +
                        " but block sum = " + std::to_string(sum));
    return fact;
}

std::vector<Partition> fock_e(int ell, int i, const Partition& shape) {
    check_shape(shape);
    std::vector<Partition> out;
    for (size_t r = 0; r < shape.size(); ++r) {
        bool removable = (r + 1 == shape.size()) || shape[r + 1] < shape[r];
        if (!removable || residue(ell, r + 1, shape[r]) != i) continue;
        Partition q = shape;
        if (--q[r] == 0) q.pop_back();
        out.push_back(q);
    }
    return out;
}

std::vector<Partition> fock_f(int ell, int i, const Partition& shape) {
    check_shape(shape);
    std::vector<Partition> out;
    for (size_t r = 0; r <= shape.size(); ++r) {
        int len = r < shape.size() ? shape[r] : 0;
        if (r > 0 && shape[r - 1] <= len) continue;
        if (residue(ell, r + 1, len + 1) != i) continue;
        Partition q = shape;
        if (r < q.size())
            ++q[r];
        else
            q.push_back(1);
        out.push_back(q);
    }
    return out;
}

ResidueSeq parse_residues(const std::string& s) {
    ResidueSeq nu;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) nu.push_back(std::stoi(tok));
        return nu;
    }
    for (char ch : s) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("bad residue word: " + s);
        nu.push_back(ch - '0');
    }
    return nu;
}

std::string format_residues(const ResidueSeq& nu) {
    std::string s;
    bool wide = false;
    for (int x : nu)
        if (x > 9) wide = true;
    for (size_t k = 0; k < nu.size(); ++k) {
        if (wide && k) s += ",";
        s += std::to_string(nu[k]);
    }
    return s;
}

}  // namespace klrwb
