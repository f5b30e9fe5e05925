#include "klrwb/klr.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace klrwb {

namespace {

std::vector<Vec> apply_all(const Mat& g, const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(g * v);
    return out;
}

std::vector<Vec> all_units(int d) {
    std::vector<Vec> out;
    for (int i = 0; i < d; ++i) {
        Vec v(d);
        v[i] = 1;
        out.push_back(v);
    }
    return out;
}

// basis adapted to the idempotent decomposition; requires invariance under every e(nu)
std::vector<std::pair<ResidueSeq, std::vector<Vec>>> homogeneous_parts(const MatrixRep& rep,
                                                                      const std::vector<Vec>& basis) {
    std::vector<std::pair<ResidueSeq, std::vector<Vec>>> parts;
    for (const auto& [nu, e] : rep.e) {
        auto part = span_basis(apply_all(e, basis), rep.dim);
        if (!part.empty()) parts.emplace_back(nu, std::move(part));
    }
    return parts;
}

MatrixRep restrict_to(const MatrixRep& rep, const std::vector<std::pair<ResidueSeq, std::vector<Vec>>>& parts,
                      int new_n) {
    std::vector<Vec> cols;
    for (const auto& [nu, p] : parts) cols.insert(cols.end(), p.begin(), p.end());
    int k = static_cast<int>(cols.size());
    MatrixRep out = MatrixRep::zero(rep.ell, new_n, rep.lam, k);
    out.name = rep.name;
    if (k == 0) return out;
    Mat s = Mat::from_columns(cols, rep.dim);
    int pos = 0;
    for (const auto& [nu, p] : parts) {
        ResidueSeq key(nu.begin(), nu.begin() + new_n);
        Mat m(k, k);
        for (size_t a = 0; a < p.size(); ++a, ++pos) m(pos, pos) = 1;
        auto it = out.e.find(key);
        if (it == out.e.end())
            out.e.emplace(key, m);
        else
            it->second += m;
    }
    for (int j = 0; j < new_n; ++j) out.x[j] = restrict_op(rep.x[j], s);
    for (int j = 0; j + 1 < new_n; ++j) out.psi[j] = restrict_op(rep.psi[j], s);
    return out;
}

int subspace_dim(const std::vector<Vec>& vs, int d) { return static_cast<int>(span_basis(vs, d).size()); }

}  // namespace

bool is_invariant(const MatrixRep& rep, const std::vector<Vec>& basis) {
    RowReducer rr(rep.dim);
    for (const auto& b : basis) rr.add(b);
    for (const auto& g : rep.generators())
        for (const auto& b : basis)
            if (!rr.in_span(g * b)) return false;
    return true;
}

MatrixRep subrep(const MatrixRep& rep, const std::vector<Vec>& basis) {
    if (!is_invariant(rep, basis)) throw MathError("subspace is not a subrepresentation");
    return restrict_to(rep, homogeneous_parts(rep, basis), rep.n);
}

MatrixRep quotient_rep(const MatrixRep& rep, const std::vector<Vec>& basis) {
    if (!is_invariant(rep, basis)) throw MathError("subspace is not a subrepresentation");
    const int d = rep.dim;
    auto sub = homogeneous_parts(rep, basis);
    RowReducer rr(d);
    std::vector<Vec> full;
    for (const auto& [nu, p] : sub)
        for (const auto& v : p) {
            rr.add(v);
            full.push_back(v);
        }
    int ks = static_cast<int>(full.size());
    // complement inside each e(nu) M, taken from images of unit vectors
    std::vector<std::pair<ResidueSeq, int>> comp_sizes;
    for (const auto& [nu, e] : rep.e) {
        int added = 0;
        for (int j = 0; j < d; ++j) {
            Vec c = e.column(j);
            if (is_zero(c)) continue;
            if (rr.add(c)) {
                full.push_back(c);
                ++added;
            }
        }
        if (added) comp_sizes.emplace_back(nu, added);
    }
    if (static_cast<int>(full.size()) != d) throw MathError("idempotents do not span the module");
    int k = d - ks;
    MatrixRep out = MatrixRep::zero(rep.ell, rep.n, rep.lam, k);
    out.name = rep.name;
    if (k == 0) return out;
    Mat b = Mat::from_columns(full, d);
    auto binv = inverse(b);
    if (!binv) throw MathError("adapted basis is singular");
    auto induced = [&](const Mat& g) { return (*binv * g * b).block(ks, ks, k, k); };
    int pos = 0;
    for (const auto& [nu, sz] : comp_sizes) {
        Mat m(k, k);
        for (int a = 0; a < sz; ++a, ++pos) m(pos, pos) = 1;
        out.e[nu] = m;
    }
    for (int j = 0; j < rep.n; ++j) out.x[j] = induced(rep.x[j]);
    for (int j = 0; j + 1 < rep.n; ++j) out.psi[j] = induced(rep.psi[j]);
    return out;
}

MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b) {
    if (a.ell != b.ell || a.n != b.n || a.lam != b.lam) throw std::invalid_argument("direct sum of incompatible representations");
    int d = a.dim + b.dim;
    MatrixRep r = MatrixRep::zero(a.ell, a.n, a.lam, d);
    auto put = [&](const Mat& ma, const Mat& mb) {
        Mat m(d, d);
        if (a.dim) m.set_block(0, 0, ma);
        if (b.dim) m.set_block(a.dim, a.dim, mb);
        return m;
    };
    std::set<ResidueSeq> keys;
    for (const auto& [nu, m] : a.e) keys.insert(nu);
    for (const auto& [nu, m] : b.e) keys.insert(nu);
    for (const auto& nu : keys) r.e[nu] = put(a.idem(nu), b.idem(nu));
    for (int j = 0; j < a.n; ++j) r.x[j] = put(a.x[j], b.x[j]);
    for (int j = 0; j + 1 < a.n; ++j) r.psi[j] = put(a.psi[j], b.psi[j]);
    r.name = a.name + "+" + b.name;
    return r;
}

MatrixRep restrict_E(const MatrixRep& rep, int i) {
    if (rep.n < 1) throw std::invalid_argument("cannot restrict a representation with n = 0");
    std::vector<std::pair<ResidueSeq, std::vector<Vec>>> parts;
    for (const auto& [nu, e] : rep.e) {
        if (nu.back() != i) continue;
        std::vector<Vec> cols;
        for (int j = 0; j < rep.dim; ++j) cols.push_back(e.column(j));
        auto p = span_basis(cols, rep.dim);
        if (!p.empty()) parts.emplace_back(nu, std::move(p));
    }
    MatrixRep out = restrict_to(rep, parts, rep.n - 1);
    out.name = "E" + std::to_string(i) + "(" + rep.name + ")";
    return out;
}

int epsilon(const MatrixRep& rep, int i) {
    int k = 0;
    MatrixRep cur = rep;
    while (cur.dim > 0 && cur.n > 0) {
        cur = restrict_E(cur, i);
        if (cur.dim == 0) break;
        ++k;
    }
    return k;
}

MatrixAlgebra algebra_closure(const MatrixRep& rep) {
    MatrixAlgebra alg;
    alg.d = rep.dim;
    if (rep.dim == 0) return alg;
    auto gens = rep.generators();
    RowReducer rr(rep.dim * rep.dim);
    std::deque<Mat> queue;
    Mat one = Mat::identity(rep.dim);
    rr.add(one.flatten());
    alg.basis.push_back(one);
    queue.push_back(one);
    while (!queue.empty()) {
        Mat m = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Mat p = g * m;
            if (rr.add(p.flatten())) {
                alg.basis.push_back(p);
                queue.push_back(p);
            }
        }
    }
    return alg;
}

bool is_absolutely_irreducible(const MatrixRep& rep) {
    if (rep.dim < 1) return false;
    return algebra_closure(rep).dim() == rep.dim * rep.dim;
}

std::vector<Mat> rep_radical(const MatrixRep& rep) {
    auto alg = algebra_closure(rep);
    int m = alg.dim();
    Mat gram(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            Q t = (alg.basis[a] * alg.basis[b]).trace();
            gram(a, b) = t;
            gram(b, a) = t;
        }
    std::vector<Mat> rad;
    for (const auto& c : kernel(gram)) {
        Mat x(rep.dim, rep.dim);
        for (int a = 0; a < m; ++a)
            if (c[a] != 0) x += alg.basis[a].scaled(c[a]);
        rad.push_back(x);
    }
    // J^d M must vanish
    auto sub = all_units(rep.dim);
    for (int k = 0; k < rep.dim && !sub.empty(); ++k) {
        std::vector<Vec> next;
        for (const auto& j : rad)
            for (const auto& v : sub) next.push_back(j * v);
        sub = span_basis(next, rep.dim);
    }
    if (!sub.empty() && !rad.empty()) throw MathError("trace-form radical is not nilpotent");
    return rad;
}

std::vector<Vec> radical_power(const MatrixRep& rep, int k) {
    auto rad = rep_radical(rep);
    auto sub = all_units(rep.dim);
    for (int s = 0; s < k && !sub.empty(); ++s) {
        std::vector<Vec> next;
        for (const auto& j : rad)
            for (const auto& v : sub) next.push_back(j * v);
        sub = span_basis(next, rep.dim);
    }
    return sub;
}

std::vector<Vec> socle_of_rep(const MatrixRep& rep) {
    auto rad = rep_radical(rep);
    if (rad.empty()) return all_units(rep.dim);
    Mat stacked(static_cast<int>(rad.size()) * rep.dim, rep.dim);
    for (size_t a = 0; a < rad.size(); ++a) stacked.set_block(static_cast<int>(a) * rep.dim, 0, rad[a]);
    return kernel(stacked);
}

std::vector<std::pair<std::string, int>> decompose_character(const std::map<ResidueSeq, int>& ch,
                                                             const std::vector<MatrixRep>& simples, bool& ok) {
    ok = false;
    std::vector<std::pair<std::string, int>> out;
    if (simples.empty()) return out;
    std::set<ResidueSeq> keys;
    for (const auto& [nu, c] : ch) keys.insert(nu);
    std::vector<std::map<ResidueSeq, int>> sc;
    for (const auto& s : simples) {
        sc.push_back(s.character());
        for (const auto& [nu, c] : sc.back()) keys.insert(nu);
    }
    std::vector<ResidueSeq> kv(keys.begin(), keys.end());
    int ns = static_cast<int>(simples.size());
    Mat a(static_cast<int>(kv.size()), ns);
    Vec rhs(kv.size());
    for (size_t r = 0; r < kv.size(); ++r) {
        auto it = ch.find(kv[r]);
        rhs[r] = it == ch.end() ? 0 : it->second;
        for (int s = 0; s < ns; ++s) {
            auto jt = sc[s].find(kv[r]);
            a(static_cast<int>(r), s) = jt == sc[s].end() ? 0 : jt->second;
        }
    }
    if (rank(a) != ns) return out;
    auto sol = solve(a, rhs);
    if (!sol) return out;
    for (int s = 0; s < ns; ++s) {
        const Q& c = (*sol)[s];
        if (c < 0 || c.get_den() != 1) return out;
        if (c != 0) out.emplace_back(simples[s].name, static_cast<int>(c.get_num().get_si()));
    }
    ok = true;
    return out;
}

std::string Layer::str() const {
    std::ostringstream os;
    if (!identified) {
        os << "dim " << dim;
        return os.str();
    }
    bool first = true;
    for (const auto& [name, mult] : factors) {
        if (!first) os << "+";
        first = false;
        if (mult != 1) os << mult;
        os << name;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Layer> radical_layers(const MatrixRep& rep, const std::vector<MatrixRep>& simples) {
    auto rad = rep_radical(rep);
    std::vector<std::vector<Vec>> powers{all_units(rep.dim)};
    if (rep.dim == 0) powers.back().clear();
    while (!powers.back().empty()) {
        std::vector<Vec> next;
        for (const auto& j : rad)
            for (const auto& v : powers.back()) next.push_back(j * v);
        powers.push_back(span_basis(next, rep.dim));
    }
    std::vector<Layer> layers;
    for (size_t k = 0; k + 1 < powers.size(); ++k) {
        Layer l;
        l.dim = static_cast<int>(powers[k].size() - powers[k + 1].size());
        for (const auto& [nu, e] : rep.e) {
            int c = subspace_dim(apply_all(e, powers[k]), rep.dim) - subspace_dim(apply_all(e, powers[k + 1]), rep.dim);
            if (c) l.character[nu] = c;
        }
        l.factors = decompose_character(l.character, simples, l.identified);
        layers.push_back(std::move(l));
    }
    return layers;
}

MatrixRep dual_rep(const MatrixRep& rep) {
    MatrixRep r = rep;
    for (auto& [nu, m] : r.e) m = m.transpose();
    for (auto& m : r.x) m = m.transpose();
    for (auto& m : r.psi) m = m.transpose();
    r.name = rep.name + "^v";
    return r;
}

std::vector<Mat> intertwiners(const MatrixRep& a, const MatrixRep& b) {
    if (a.ell != b.ell || a.n != b.n) throw std::invalid_argument("intertwiners between different algebras");
    const int da = a.dim, db = b.dim;
    if (da == 0 || db == 0) return {};
    std::vector<std::pair<Mat, Mat>> pairs;
    std::set<ResidueSeq> keys;
    for (const auto& [nu, m] : a.e) keys.insert(nu);
    for (const auto& [nu, m] : b.e) keys.insert(nu);
    for (const auto& nu : keys) pairs.emplace_back(a.idem(nu), b.idem(nu));
    for (int j = 0; j < a.n; ++j) pairs.emplace_back(a.x[j], b.x[j]);
    for (int j = 0; j + 1 < a.n; ++j) pairs.emplace_back(a.psi[j], b.psi[j]);
    // unknown F(i,k) at index i*da + k; equations F ga - gb F = 0
    RowReducer rr(da * db);
    for (const auto& [ga, gb] : pairs)
        for (int i = 0; i < db; ++i)
            for (int j = 0; j < da; ++j) {
                std::map<int, Q> row;
                for (int k = 0; k < da; ++k)
                    if (ga(k, j) != 0) row[i * da + k] += ga(k, j);
                for (int k = 0; k < db; ++k)
                    if (gb(i, k) != 0) row[k * da + j] -= gb(i, k);
                SVec sv;
                for (auto& [idx, c] : row)
                    if (c != 0) sv.emplace_back(idx, c);
                if (!sv.empty()) rr.add(std::move(sv));
            }
    std::vector<Mat> out;
    for (const auto& v : rr.nullspace()) {
        Mat f(db, da);
        for (int i = 0; i < db; ++i)
            for (int k = 0; k < da; ++k) f(i, k) = v[i * da + k];
        out.push_back(f);
    }
    return out;
}

std::optional<Mat> modules_isomorphic(const MatrixRep& a, const MatrixRep& b) {
    if (a.ell != b.ell || a.n != b.n || a.dim != b.dim) return std::nullopt;
    if (a.dim == 0) return Mat(0, 0);
    if (a.character() != b.character()) return std::nullopt;
    return find_invertible(intertwiners(a, b));
}

}  // namespace klrwb
