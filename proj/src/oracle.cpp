#include "klrwb/oracle.hpp"

#include <set>

namespace klrwb {

namespace {

using Word = std::vector<int>;

bool contains(const Word& w, const Word& pat) {
    if (pat.size() > w.size()) return false;
    for (size_t i = 0; i + pat.size() <= w.size(); ++i)
        if (std::equal(pat.begin(), pat.end(), w.begin() + i)) return true;
    return false;
}

struct Enumerated {
    std::vector<Path> paths;
    std::map<Path, int> index;
};

Enumerated surviving_paths(const Presentation& p, const std::vector<Word>& zeros, int len) {
    const Quiver& q = p.quiver;
    Enumerated e;
    std::vector<Path> layer;
    for (int v = 0; v < q.nv(); ++v) layer.push_back(trivial_path(v));
    for (int l = 0; l <= len; ++l) {
        std::vector<Path> next;
        for (const auto& path : layer) {
            e.index[path] = static_cast<int>(e.paths.size());
            e.paths.push_back(path);
            if (l == len) continue;
            for (int ar = 0; ar < q.na(); ++ar) {
                if (q.arrows[ar].src != path.tgt) continue;
                Path ext = path;
                ext.arrows.push_back(ar);
                ext.tgt = q.arrows[ar].tgt;
                bool dead = false;
                for (const auto& z : zeros) {
                    // only suffixes are new
                    if (z.size() <= ext.arrows.size() &&
                        std::equal(z.begin(), z.end(), ext.arrows.end() - static_cast<long>(z.size()))) {
                        dead = true;
                        break;
                    }
                }
                if (!dead) next.push_back(std::move(ext));
            }
        }
        layer = std::move(next);
    }
    return e;
}

OracleDims count_at(const Presentation& p, const std::vector<Word>& zeros, const std::vector<Relation>& rels, int len) {
    Enumerated e = surviving_paths(p, zeros, len);
    std::map<std::pair<int, int>, std::vector<int>> by_block;
    for (size_t i = 0; i < e.paths.size(); ++i) by_block[{e.paths[i].src, e.paths[i].tgt}].push_back(static_cast<int>(i));

    std::map<std::pair<int, int>, RowReducer> w;
    for (const auto& r : rels) {
        int s = r.front().path.src, t = r.front().path.tgt;
        int shortest = len + 1;
        for (const auto& term : r) shortest = std::min(shortest, term.path.length());
        for (const auto& u : e.paths) {
            if (u.tgt != s || u.length() + shortest > len) continue;
            for (const auto& v : e.paths) {
                if (v.src != t || u.length() + shortest + v.length() > len) continue;
                std::map<int, Q> row;
                for (const auto& term : r) {
                    Path full = concat(concat(u, term.path), v);
                    bool zero = false;
                    for (const auto& z : zeros)
                        if (contains(full.arrows, z)) {
                            zero = true;
                            break;
                        }
                    if (zero) continue;
                    // longer than the horizon: zero in A / J^(len+1)
                    auto it = e.index.find(full);
                    if (it == e.index.end()) continue;
                    row[it->second] += term.coef;
                }
                SVec sv;
                for (auto& [k, c] : row)
                    if (c != 0) sv.push_back({k, c});
                if (sv.empty()) continue;
                auto key = std::make_pair(u.src, v.tgt);
                auto [it, fresh] = w.try_emplace(key, static_cast<int>(e.paths.size()));
                it->second.add(std::move(sv));
            }
        }
    }
    OracleDims d;
    d.horizon = len;
    for (auto& [key, idx] : by_block) {
        int r = w.count(key) ? w.at(key).rank() : 0;
        int dim = static_cast<int>(idx.size()) - r;
        if (dim) d.block[key] = dim;
        d.total += dim;
    }
    return d;
}

}  // namespace

OracleDims brute_force_dims(const Presentation& p, int max_horizon) {
    std::vector<Word> zeros;
    std::vector<Relation> rels;
    int longest = 1;
    for (const auto& r : p.relations) {
        Relation nz;
        for (const auto& t : r)
            if (t.coef != 0) nz.push_back(t);
        if (nz.empty()) continue;
        for (const auto& t : nz) longest = std::max(longest, t.path.length());
        if (nz.size() == 1 && !nz[0].path.trivial())
            zeros.push_back(nz[0].path.arrows);
        else
            rels.push_back(std::move(nz));
    }
    // stable over three consecutive horizons past twice the longest relation
    OracleDims prev;
    int same = 0;
    for (int len = longest; len <= max_horizon; ++len) {
        OracleDims d = count_at(p, zeros, rels, len);
        if (len > longest && d.total == prev.total && d.block == prev.block) {
            if (++same >= 2 && len >= 2 * longest) return prev;
        } else {
            same = 0;
        }
        prev = std::move(d);
    }
    throw MathError("brute-force count did not stabilise by length " + std::to_string(max_horizon));
}

namespace {

// params: concatenated e_{v_j} N coordinates (as full N vectors restricted to vertex v_j)
struct HomParam {
    std::vector<int> tops;
    std::vector<std::vector<int>> coords;  // per summand, indices of N basis at v_j
    int size = 0;
};

HomParam hom_param(const std::vector<int>& tops, const AModule& n) {
    HomParam h;
    h.tops = tops;
    for (int v : tops) {
        std::vector<int> c;
        for (int i = 0; i < n.dim; ++i)
            if (n.vert[i] == v) c.push_back(i);
        h.size += static_cast<int>(c.size());
        h.coords.push_back(std::move(c));
    }
    return h;
}

// matrix dim N x dim P of the map sending the j-th generator to the chosen vector
Mat hom_matrix(const FDAlgebra& a, const HomParam& h, const AModule& n, const Vec& param) {
    std::vector<Vec> cols;
    int off = 0;
    for (size_t j = 0; j < h.tops.size(); ++j) {
        Vec nj(n.dim);
        for (int i : h.coords[j]) nj[i] = param[off++];
        for (int b = 0; b < a.dim(); ++b)
            if (a.tgt(b) == h.tops[j]) cols.push_back(act_basis(a, n, b) * nj);
    }
    if (cols.empty()) return Mat(n.dim, 0);
    return Mat::from_columns(cols, n.dim);
}

std::vector<int> generator_columns(const FDAlgebra& a, const std::vector<int>& tops) {
    std::vector<int> g;
    int off = 0;
    for (int v : tops) {
        int k = 0;
        for (int b = 0; b < a.dim(); ++b) {
            if (a.tgt(b) != v) continue;
            if (b == a.idem_index[v]) g.push_back(off + k);
            ++k;
        }
        off += k;
    }
    return g;
}

}  // namespace

int ext1_by_resolution(const FDAlgebra& a, const AModule& m, const AModule& n) {
    auto pc0 = projective_cover(a, m);
    Mat inc1;
    AModule k1 = submodule(a, pc0.cover, kernel(pc0.pi), &inc1);
    auto pc1 = projective_cover(a, k1);
    Mat d1 = inc1 * pc1.pi;
    Mat inc2;
    AModule k2 = submodule(a, pc1.cover, kernel(pc1.pi), &inc2);
    auto pc2 = projective_cover(a, k2);
    Mat d2 = inc2 * pc2.pi;

    HomParam h0 = hom_param(pc0.tops, n), h1 = hom_param(pc1.tops, n);
    std::vector<int> gen1 = generator_columns(a, pc1.tops);

    // image of Hom(P0,N) in the coordinates of Hom(P1,N)
    RowReducer img(h1.size);
    for (int k = 0; k < h0.size; ++k) {
        Vec e(h0.size);
        e[k] = 1;
        Mat g = hom_matrix(a, h0, n, e) * d1;
        Vec coord;
        for (size_t l = 0; l < gen1.size(); ++l)
            for (int i : h1.coords[l]) coord.push_back(g(i, gen1[l]));
        img.add(coord);
    }
    // kernel of Hom(P1,N) -> Hom(P2,N)
    std::vector<Vec> cols;
    for (int k = 0; k < h1.size; ++k) {
        Vec e(h1.size);
        e[k] = 1;
        cols.push_back((hom_matrix(a, h1, n, e) * d2).flatten());
    }
    int ker = h1.size;
    if (!cols.empty() && !cols[0].empty()) ker = h1.size - rank(Mat::from_columns(cols, static_cast<int>(cols[0].size())));
    return ker - img.rank();
}

}  // namespace klrwb
