#include "klrwb/klr_path.hpp"

#include "klrwb/cartan.hpp"

#include <algorithm>
#include <map>

namespace klrwb {

int KLRQuiver::vertex_of(const ResidueSeq& nu) const {
    auto it = std::find(words.begin(), words.end(), nu);
    return it == words.end() ? -1 : static_cast<int>(it - words.begin());
}

namespace {

std::vector<ResidueSeq> all_words(int nres, int n, const std::vector<int>& content) {
    std::vector<ResidueSeq> out;
    ResidueSeq w(n, 0);
    while (true) {
        bool keep = true;
        if (!content.empty()) {
            std::vector<int> c(nres, 0);
            for (int r : w) ++c[r];
            keep = c == content;
        }
        if (keep) out.push_back(w);
        int k = n - 1;
        while (k >= 0 && w[k] == nres - 1) w[k--] = 0;
        if (k < 0) break;
        ++w[k];
    }
    return out;
}

ResidueSeq swap_at(ResidueSeq nu, int k) {
    std::swap(nu[k - 1], nu[k]);
    return nu;
}

struct Builder {
    KLRQuiver& q;
    Relation rel;

    Path x(int v, int k) const { return make_path(q.pres.quiver, {q.x[v][k - 1]}); }
    // operator word w_1 ... w_m applied to e(nu): letters ('p', k) or ('x', k), rightmost acts first
    Path word(const std::vector<std::pair<char, int>>& w, int v) const {
        std::vector<int> arrows(w.size());
        int cur = v;
        for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
            auto [t, k] = w[i];
            if (t == 'x') {
                arrows[i] = q.x[cur][k - 1];
            } else {
                arrows[i] = q.psi[cur][k - 1];
                cur = q.vertex_of(swap_at(q.words[cur], k));
            }
        }
        if (arrows.empty()) return trivial_path(v);
        return make_path(q.pres.quiver, arrows);
    }
    void add(const Q& c, const Path& p) { rel.push_back({c, p}); }
    // polynomial in x_{k}, x_{k+1}, ... at vertex v
    void add_poly(const Q& c, const Poly& f, int v, int k) {
        for (const auto& [mono, coef] : f.terms()) {
            std::vector<std::pair<char, int>> w;
            for (size_t i = 0; i < mono.size(); ++i)
                for (int e = 0; e < mono[i]; ++e) w.push_back({'x', k + static_cast<int>(i)});
            add(c * coef, word(w, v));
        }
    }
    void flush() {
        if (!rel.empty()) q.pres.relations.push_back(rel);
        rel.clear();
    }
};

}  // namespace

KLRQuiver klr_as_presentation(int ell, int n, const Q& lam, const std::vector<int>& content) {
    if (ell < 1) throw InvalidRank("rank ell must be >= 1");
    if (n < 1) throw std::invalid_argument("klr_as_presentation needs n >= 1");
    if (!content.empty() && static_cast<int>(content.size()) != ell + 1)
        throw std::invalid_argument("block content needs one entry per residue");
    KLRQuiver q;
    q.ell = ell;
    q.n = n;
    q.lam = lam;
    q.words = all_words(ell + 1, n, content);
    if (q.words.empty()) throw std::invalid_argument("block has no residue words");
    auto pres = KLRPresentation::normalized(ell, n, lam);
    Quiver& Q0 = q.pres.quiver;
    q.pres.name = "R(" + std::to_string(n) + ")";
    q.pres.strict = false;
    int nvert = static_cast<int>(q.words.size());
    for (const auto& nu : q.words) Q0.add_vertex(format_residues(nu));
    q.x.assign(nvert, std::vector<int>(n, -1));
    q.psi.assign(nvert, std::vector<int>(n - 1, -1));
    // x arrows rank below psi arrows
    for (int k = 1; k <= n; ++k)
        for (int v = 0; v < nvert; ++v)
            q.x[v][k - 1] = Q0.add_arrow("x" + std::to_string(k) + "@" + Q0.vertices[v], v, v);
    for (int k = 1; k < n; ++k)
        for (int v = 0; v < nvert; ++v) {
            int s = q.vertex_of(swap_at(q.words[v], k));
            q.psi[v][k - 1] = Q0.add_arrow("psi" + std::to_string(k) + "@" + Q0.vertices[v], s, v);
        }

    Builder b{q, {}};
    for (int v = 0; v < nvert; ++v) {
        const ResidueSeq& nu = q.words[v];
        if (nu[0] != 0) {
            b.add(1, trivial_path(v));
            b.flush();
            continue;
        }
        b.add(1, b.x(v, 1));
        b.flush();
        for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                b.add(1, b.word({{'x', k}, {'x', l}}, v));
                b.add(-1, b.word({{'x', l}, {'x', k}}, v));
                b.flush();
            }
        for (int k = 1; k < n; ++k) {
            bool same = nu[k - 1] == nu[k];
            for (int l = 1; l <= n; ++l) {
                int sl = l == k ? k + 1 : (l == k + 1 ? k : l);
                b.add(1, b.word({{'p', k}, {'x', l}}, v));
                b.add(-1, b.word({{'x', sl}, {'p', k}}, v));
                if (same && l == k) b.add(1, trivial_path(v));
                if (same && l == k + 1) b.add(-1, trivial_path(v));
                b.flush();
            }
            b.add(1, b.word({{'p', k}, {'p', k}}, v));
            b.add_poly(-1, q_poly(pres, nu[k - 1], nu[k]), v, k);
            b.flush();
            for (int l = k + 2; l < n; ++l) {
                b.add(1, b.word({{'p', k}, {'p', l}}, v));
                b.add(-1, b.word({{'p', l}, {'p', k}}, v));
                b.flush();
            }
            if (k + 1 < n) {
                b.add(1, b.word({{'p', k + 1}, {'p', k}, {'p', k + 1}}, v));
                b.add(-1, b.word({{'p', k}, {'p', k + 1}, {'p', k}}, v));
                if (nu[k - 1] == nu[k + 1]) b.add_poly(-1, braid_correction(pres, nu[k - 1], nu[k]), v, k);
                b.flush();
            }
        }
    }
    // drop cancelled terms
    for (auto& r : q.pres.relations) {
        std::vector<Term> merged;
        for (const auto& t : r) {
            auto it = std::find_if(merged.begin(), merged.end(), [&](const Term& m) { return m.path == t.path; });
            if (it == merged.end())
                merged.push_back(t);
            else
                it->coef += t.coef;
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Term& t) { return t.coef == 0; }),
                     merged.end());
        r = merged;
    }
    q.pres.relations.erase(std::remove_if(q.pres.relations.begin(), q.pres.relations.end(),
                                          [](const Relation& r) { return r.empty(); }),
                           q.pres.relations.end());
    // psi above x in the deglex letter order (declaration order already does this)
    return q;
}

KLRAlgebra klr_algebra(int ell, int n, const Q& lam, const std::vector<int>& content) {
    KLRAlgebra k;
    k.q = klr_as_presentation(ell, n, lam, content);
    k.a = normalize(k.q.pres);
    return k;
}

int idempotent_dim(const KLRAlgebra& k, const ResidueSeq& nu2, const ResidueSeq& nu1) {
    int a = k.q.vertex_of(nu2), b = k.q.vertex_of(nu1);
    if (a < 0 || b < 0) return 0;
    int c = 0;
    for (const auto& p : k.a.basis)
        if (p.src == a && p.tgt == b) ++c;
    return c;
}

AModule to_amodule(const KLRAlgebra& k, const MatrixRep& rep) {
    if (rep.ell != k.q.ell || rep.n != k.q.n) throw std::invalid_argument("to_amodule: rank or n mismatch");
    // basis adapted to the idempotents
    std::vector<Vec> cols;
    AModule m;
    m.name = rep.name;
    for (const auto& [nu, e] : rep.e) {
        int v = k.q.vertex_of(nu);
        std::vector<Vec> img;
        for (int j = 0; j < rep.dim; ++j) img.push_back(e.column(j));
        auto basis = span_basis(img, rep.dim);
        if (!basis.empty() && v < 0) throw std::invalid_argument("to_amodule: word outside the block: " + format_residues(nu));
        for (auto& c : basis) {
            cols.push_back(std::move(c));
            m.vert.push_back(v);
        }
    }
    m.dim = static_cast<int>(cols.size());
    if (m.dim != rep.dim) throw MathError("to_amodule: idempotents do not decompose the module");
    Mat B = Mat::from_columns(cols, rep.dim);
    Mat Binv = *inverse(B);
    auto proj = [&](int v) {
        Mat p(m.dim, m.dim);
        for (int i = 0; i < m.dim; ++i)
            if (m.vert[i] == v) p(i, i) = 1;
        return p;
    };
    m.arrows.assign(k.a.quiver.na(), Mat(m.dim, m.dim));
    for (size_t v = 0; v < k.q.words.size(); ++v) {
        Mat pv = proj(static_cast<int>(v));
        for (int kk = 1; kk <= k.q.n; ++kk) m.arrows[k.q.x[v][kk - 1]] = pv * (Binv * rep.x[kk - 1] * B) * pv;
        for (int kk = 1; kk < k.q.n; ++kk) {
            int a = k.q.psi[v][kk - 1];
            Mat ps = proj(k.a.quiver.arrows[a].src);
            m.arrows[a] = ps * (Binv * rep.psi[kk - 1] * B) * pv;
        }
    }
    return m;
}

MatrixRep to_matrix_rep(const KLRAlgebra& k, const AModule& m) {
    MatrixRep r = MatrixRep::zero(k.q.ell, k.q.n, k.q.lam, m.dim);
    r.name = m.name;
    for (size_t v = 0; v < k.q.words.size(); ++v) {
        Mat p(m.dim, m.dim);
        bool any = false;
        for (int i = 0; i < m.dim; ++i)
            if (m.vert[i] == static_cast<int>(v)) {
                p(i, i) = 1;
                any = true;
            }
        if (any) r.e[k.q.words[v]] = p;
        for (int kk = 1; kk <= k.q.n; ++kk) r.x[kk - 1] += m.arrows[k.q.x[v][kk - 1]];
        for (int kk = 1; kk < k.q.n; ++kk) r.psi[kk - 1] += m.arrows[k.q.psi[v][kk - 1]];
    }
    return r;
}

AModule induce(const KLRAlgebra& big, const KLRAlgebra& small, int i, const AModule& m) {
    if (big.q.ell != small.q.ell || big.q.n != small.q.n + 1 || big.q.lam != small.q.lam)
        throw std::invalid_argument("induce: incompatible algebras");
    if (i < 0 || i > big.q.ell) throw std::out_of_range("induce: residue out of range");
    const FDAlgebra& A = big.a;
    const FDAlgebra& S = small.a;
    int ns = small.q.n;
    // phi on vertices
    std::vector<int> phi(small.q.words.size());
    for (size_t v = 0; v < phi.size(); ++v) {
        ResidueSeq w = small.q.words[v];
        w.push_back(i);
        phi[v] = big.q.vertex_of(w);
        if (phi[v] < 0) throw std::invalid_argument("induce: word " + format_residues(w) + " missing from the big block");
    }
    // phi on arrows
    std::vector<int> phia(S.quiver.na(), -1);
    for (size_t v = 0; v < phi.size(); ++v) {
        for (int k = 1; k <= ns; ++k) phia[small.q.x[v][k - 1]] = big.q.x[phi[v]][k - 1];
        for (int k = 1; k < ns; ++k) phia[small.q.psi[v][k - 1]] = big.q.psi[phi[v]][k - 1];
    }
    // T = sum over pairs (b, m_j) with tgt(b) = phi(vert m_j)
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> index;
    for (int j = 0; j < m.dim; ++j)
        for (int b = 0; b < A.dim(); ++b)
            if (A.tgt(b) == phi[m.vert[j]]) {
                index[{b, j}] = static_cast<int>(pairs.size());
                pairs.emplace_back(b, j);
            }
    AModule T;
    T.name = "T";
    T.dim = static_cast<int>(pairs.size());
    for (auto [b, j] : pairs) T.vert.push_back(A.src(b));
    for (int a = 0; a < A.quiver.na(); ++a) {
        Mat x(T.dim, T.dim);
        for (int c = 0; c < T.dim; ++c) {
            auto [b, j] = pairs[c];
            Vec p = A.mul(A.arrow_value[a], A.unit(b));
            for (int k = 0; k < A.dim(); ++k)
                if (p[k] != 0) x(index.at({k, j}), c) = p[k];
        }
        T.arrows.push_back(std::move(x));
    }
    // b phi(s) ⊗ m - b ⊗ s m for arrows s of the small algebra
    std::vector<Vec> rel;
    for (int s = 0; s < S.quiver.na(); ++s) {
        if (S.idem_index[S.quiver.arrows[s].src] < 0) continue;
        int ssrc = S.quiver.arrows[s].src, stgt = S.quiver.arrows[s].tgt;
        Vec phis = A.arrow_value[phia[s]];
        for (int j = 0; j < m.dim; ++j) {
            if (m.vert[j] != stgt) continue;
            Vec sm = m.arrows[s].column(j);
            for (int b = 0; b < A.dim(); ++b) {
                if (A.tgt(b) != phi[ssrc]) continue;
                Vec r(T.dim);
                Vec bp = A.mul(A.unit(b), phis);
                for (int k = 0; k < A.dim(); ++k)
                    if (bp[k] != 0) r[index.at({k, j})] += bp[k];
                for (int jj = 0; jj < m.dim; ++jj)
                    if (sm[jj] != 0) r[index.at({b, jj})] -= sm[jj];
                if (!is_zero(r)) rel.push_back(std::move(r));
            }
        }
    }
    AModule f = quotient(A, T, generated_submodule(A, T, rel));
    f.name = "F" + std::to_string(i) + "(" + m.name + ")";
    return f;
}

}  // namespace klrwb
