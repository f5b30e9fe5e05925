#include "klrwb/module.hpp"

#include <algorithm>
#include <map>

namespace klrwb {

std::vector<int> AModule::dim_vector(int nv) const {
    std::vector<int> d(nv, 0);
    for (int v : vert) ++d[v];
    return d;
}

AModule zero_module(const FDAlgebra& a) {
    AModule m;
    m.name = "0";
    m.arrows.assign(a.quiver.na(), Mat(0, 0));
    return m;
}

AModule simple_module(const FDAlgebra& a, int v) {
    AModule m;
    m.name = "S" + a.quiver.vertices[v];
    m.dim = 1;
    m.vert = {v};
    m.arrows.assign(a.quiver.na(), Mat(1, 1));
    return m;
}

AModule projective(const FDAlgebra& a, int v) {
    AModule m;
    m.name = "P" + a.quiver.vertices[v];
    std::vector<int> idx, pos(a.dim(), -1);
    for (int i = 0; i < a.dim(); ++i)
        if (a.tgt(i) == v) {
            pos[i] = static_cast<int>(idx.size());
            idx.push_back(i);
            m.vert.push_back(a.src(i));
        }
    m.dim = static_cast<int>(idx.size());
    for (int ar = 0; ar < a.quiver.na(); ++ar) {
        Mat x(m.dim, m.dim);
        for (int c = 0; c < m.dim; ++c) {
            Vec p = a.mul(a.arrow_value[ar], a.unit(idx[c]));
            for (int k = 0; k < a.dim(); ++k)
                if (p[k] != 0) x(pos[k], c) = p[k];
        }
        m.arrows.push_back(std::move(x));
    }
    return m;
}

AModule dual_module(const AModule& m) {
    AModule d = m;
    d.name = "D(" + m.name + ")";
    for (auto& x : d.arrows) x = x.transpose();
    return d;
}

AModule injective(const FDAlgebra& a, int v) {
    AModule i = dual_module(projective(a.opposite(), v));
    i.name = "I" + a.quiver.vertices[v];
    return i;
}

AModule direct_sum(const AModule& m, const AModule& n) {
    AModule s;
    s.name = m.name + "+" + n.name;
    s.dim = m.dim + n.dim;
    s.vert = m.vert;
    s.vert.insert(s.vert.end(), n.vert.begin(), n.vert.end());
    for (size_t k = 0; k < m.arrows.size(); ++k) {
        Mat x(s.dim, s.dim);
        x.set_block(0, 0, m.arrows[k]);
        x.set_block(m.dim, m.dim, n.arrows[k]);
        s.arrows.push_back(std::move(x));
    }
    return s;
}

namespace {

Mat vertex_projector(const AModule& m, int v) {
    Mat p(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i)
        if (m.vert[i] == v) p(i, i) = 1;
    return p;
}

Vec vertex_part(const AModule& m, const Vec& x, int v) {
    Vec y(m.dim);
    for (int i = 0; i < m.dim; ++i)
        if (m.vert[i] == v) y[i] = x[i];
    return y;
}

// the matrices whose images together span Rad M
std::vector<Mat> radical_generators(const FDAlgebra& a, const AModule& m) {
    if (a.admissible) return m.arrows;
    std::vector<Mat> out;
    for (const auto& r : jacobson_radical(a)) out.push_back(act(a, m, r));
    return out;
}

// per-vertex basis of a submodule given by a spanning set
std::vector<Vec> adapted_basis(const FDAlgebra& a, const AModule& m, const std::vector<Vec>& span,
                               std::vector<int>& verts) {
    std::vector<Vec> out;
    verts.clear();
    for (int v = 0; v < a.nv(); ++v) {
        std::vector<Vec> parts;
        for (const auto& x : span) {
            Vec y = vertex_part(m, x, v);
            if (!is_zero(y)) parts.push_back(std::move(y));
        }
        for (auto& b : span_basis(parts, m.dim)) {
            out.push_back(std::move(b));
            verts.push_back(v);
        }
    }
    return out;
}

}  // namespace

Mat act_basis(const FDAlgebra& a, const AModule& m, int i) {
    const Path& p = a.basis[i];
    if (p.trivial()) return vertex_projector(m, p.src);
    Mat x = m.arrows[p.arrows[0]];
    for (size_t k = 1; k < p.arrows.size(); ++k) x = x * m.arrows[p.arrows[k]];
    return x;
}

Mat act(const FDAlgebra& a, const AModule& m, const Vec& x) {
    Mat out(m.dim, m.dim);
    for (int i = 0; i < a.dim(); ++i)
        if (x[i] != 0) out += act_basis(a, m, i).scaled(x[i]);
    return out;
}

std::string module_defect(const FDAlgebra& a, const AModule& m) {
    if (static_cast<int>(m.vert.size()) != m.dim) return "vertex labels do not match the dimension";
    if (static_cast<int>(m.arrows.size()) != a.quiver.na()) return "wrong number of arrow matrices";
    for (int k = 0; k < a.quiver.na(); ++k) {
        const auto& ar = a.quiver.arrows[k];
        const Mat& x = m.arrows[k];
        if (x.rows() != m.dim || x.cols() != m.dim) return "arrow " + ar.name + " has the wrong shape";
        for (int i = 0; i < m.dim; ++i)
            for (int j = 0; j < m.dim; ++j)
                if (x(i, j) != 0 && (m.vert[i] != ar.src || m.vert[j] != ar.tgt))
                    return "arrow " + ar.name + " does not respect the vertex grading";
    }
    for (const auto& rel : a.relations) {
        Mat s(m.dim, m.dim);
        for (const auto& t : rel) {
            Mat x;
            if (t.path.trivial())
                x = vertex_projector(m, t.path.src);
            else {
                x = m.arrows[t.path.arrows[0]];
                for (size_t k = 1; k < t.path.arrows.size(); ++k) x = x * m.arrows[t.path.arrows[k]];
            }
            s += x.scaled(t.coef);
        }
        if (!s.is_zero()) {
            std::string r;
            for (const auto& t : rel) r += (r.empty() ? "" : " + ") + to_string(t.coef) + "*(" + format_path(a.quiver, t.path) + ")";
            return "relation " + r + " does not vanish";
        }
    }
    return "";
}

std::vector<Vec> generated_submodule(const FDAlgebra& a, const AModule& m, const std::vector<Vec>& vs) {
    RowReducer rr(m.dim);
    std::vector<Vec> basis, todo;
    auto push = [&](const Vec& x) {
        if (!is_zero(x) && rr.add(x)) {
            basis.push_back(x);
            todo.push_back(x);
        }
    };
    for (const auto& x : vs)
        for (int v = 0; v < a.nv(); ++v) push(vertex_part(m, x, v));
    while (!todo.empty()) {
        Vec x = todo.back();
        todo.pop_back();
        for (const auto& g : m.arrows) push(g * x);
    }
    std::vector<int> verts;
    return adapted_basis(a, m, basis, verts);
}

AModule submodule(const FDAlgebra& a, const AModule& m, const std::vector<Vec>& span, Mat* inclusion) {
    std::vector<int> verts;
    auto basis = adapted_basis(a, m, span, verts);
    AModule s;
    s.name = "sub(" + m.name + ")";
    s.dim = static_cast<int>(basis.size());
    s.vert = verts;
    Mat S = Mat::from_columns(basis, m.dim);
    for (const auto& x : m.arrows) s.arrows.push_back(s.dim ? restrict_op(x, S) : Mat(0, 0));
    if (inclusion) *inclusion = S;
    return s;
}

AModule quotient(const FDAlgebra& a, const AModule& m, const std::vector<Vec>& span, Mat* projection) {
    std::vector<int> uverts;
    auto ub = adapted_basis(a, m, span, uverts);
    std::vector<Vec> cols = ub;
    std::vector<int> cverts;
    RowReducer rr(m.dim);
    for (const auto& u : ub) rr.add(u);
    for (int v = 0; v < a.nv(); ++v)
        for (int i = 0; i < m.dim; ++i) {
            if (m.vert[i] != v) continue;
            Vec e(m.dim);
            e[i] = 1;
            if (rr.add(e)) {
                cols.push_back(e);
                cverts.push_back(v);
            }
        }
    int du = static_cast<int>(ub.size()), dq = static_cast<int>(cverts.size());
    AModule q;
    q.name = m.name + "/sub";
    q.dim = dq;
    q.vert = cverts;
    Mat B = Mat::from_columns(cols, m.dim);
    auto Binv = inverse(B);
    if (!Binv) throw MathError("quotient: basis completion failed");
    for (const auto& x : m.arrows) {
        Mat y = (*Binv) * x * B;
        Mat low = y.block(du, 0, dq, du);
        if (!low.is_zero()) throw MathError("quotient: span is not a submodule");
        q.arrows.push_back(y.block(du, du, dq, dq));
    }
    if (projection) *projection = Binv->block(du, 0, dq, m.dim);
    return q;
}

AModule cyclic_quotient(const FDAlgebra& a, int v, const std::vector<Vec>& elements) {
    AModule p = projective(a, v);
    std::vector<Vec> coords;
    for (const auto& x : elements) {
        Vec c;
        for (int i = 0; i < a.dim(); ++i) {
            if (a.tgt(i) == v)
                c.push_back(x[i]);
            else if (x[i] != 0)
                throw std::invalid_argument("cyclic_quotient: element does not lie in A e_v");
        }
        coords.push_back(std::move(c));
    }
    return quotient(a, p, generated_submodule(a, p, coords));
}

std::vector<Vec> module_radical(const FDAlgebra& a, const AModule& m) {
    std::vector<Vec> cols;
    for (const auto& g : radical_generators(a, m))
        for (int j = 0; j < m.dim; ++j) {
            Vec c = g.column(j);
            if (!is_zero(c)) cols.push_back(std::move(c));
        }
    std::vector<int> verts;
    return adapted_basis(a, m, cols, verts);
}

std::vector<Vec> module_socle(const FDAlgebra& a, const AModule& m) {
    RowReducer rr(m.dim);
    for (const auto& g : radical_generators(a, m))
        for (int i = 0; i < g.rows(); ++i) {
            Vec row(m.dim);
            for (int j = 0; j < m.dim; ++j) row[j] = g(i, j);
            if (!is_zero(row)) rr.add(row);
        }
    std::vector<int> verts;
    return adapted_basis(a, m, rr.nullspace(), verts);
}

AModule top(const FDAlgebra& a, const AModule& m) {
    AModule t = quotient(a, m, module_radical(a, m));
    t.name = "top(" + m.name + ")";
    return t;
}

AModule socle(const FDAlgebra& a, const AModule& m) {
    AModule s = submodule(a, m, module_socle(a, m));
    s.name = "soc(" + m.name + ")";
    return s;
}

AModule radical(const FDAlgebra& a, const AModule& m) {
    AModule r = submodule(a, m, module_radical(a, m));
    r.name = "rad(" + m.name + ")";
    return r;
}

std::vector<std::vector<int>> radical_layers_mod(const FDAlgebra& a, const AModule& m) {
    std::vector<std::vector<int>> layers;
    AModule cur = m;
    while (cur.dim > 0) {
        Mat inc;
        auto rad = module_radical(a, cur);
        AModule next = submodule(a, cur, rad, &inc);
        auto dv = cur.dim_vector(a.nv());
        auto dn = next.dim_vector(a.nv());
        for (int v = 0; v < a.nv(); ++v) dv[v] -= dn[v];
        layers.push_back(dv);
        if (next.dim == cur.dim) throw MathError("radical series does not terminate");
        cur = next;
    }
    return layers;
}

std::vector<Mat> hom_space(const FDAlgebra& a, const AModule& m, const AModule& n) {
    (void)a;
    // unknowns F(i, j) with matching vertices
    std::map<std::pair<int, int>, int> var;
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            if (n.vert[i] == m.vert[j]) {
                var[{i, j}] = static_cast<int>(pos.size());
                pos.emplace_back(i, j);
            }
    int nv = static_cast<int>(pos.size());
    RowReducer rr(nv);
    for (size_t k = 0; k < m.arrows.size(); ++k) {
        const Mat& X = m.arrows[k];
        const Mat& Y = n.arrows[k];
        // (F X - Y F)(i, j)
        for (int i = 0; i < n.dim; ++i)
            for (int j = 0; j < m.dim; ++j) {
                std::map<int, Q> row;
                for (int l = 0; l < m.dim; ++l) {
                    if (X(l, j) == 0) continue;
                    auto it = var.find({i, l});
                    if (it != var.end()) row[it->second] += X(l, j);
                }
                for (int l = 0; l < n.dim; ++l) {
                    if (Y(i, l) == 0) continue;
                    auto it = var.find({l, j});
                    if (it != var.end()) row[it->second] -= Y(i, l);
                }
                SVec s;
                for (const auto& [c, v] : row)
                    if (v != 0) s.emplace_back(c, v);
                if (!s.empty()) rr.add(std::move(s));
            }
    }
    std::vector<Mat> out;
    for (const auto& sol : rr.nullspace()) {
        Mat f(n.dim, m.dim);
        for (int c = 0; c < nv; ++c) f(pos[c].first, pos[c].second) = sol[c];
        out.push_back(std::move(f));
    }
    return out;
}

bool is_homomorphism(const AModule& m, const AModule& n, const Mat& f) {
    if (f.rows() != n.dim || f.cols() != m.dim) return false;
    for (int i = 0; i < n.dim; ++i)
        for (int j = 0; j < m.dim; ++j)
            if (f(i, j) != 0 && n.vert[i] != m.vert[j]) return false;
    for (size_t k = 0; k < m.arrows.size(); ++k)
        if (f * m.arrows[k] != n.arrows[k] * f) return false;
    return true;
}

std::optional<Mat> find_isomorphism(const FDAlgebra& a, const AModule& m, const AModule& n) {
    if (m.dim != n.dim || m.dim_vector(a.nv()) != n.dim_vector(a.nv())) return std::nullopt;
    if (m.dim == 0) return Mat(0, 0);
    return find_invertible(hom_space(a, m, n));
}

bool is_isomorphic(const FDAlgebra& a, const AModule& m, const AModule& n) {
    return find_isomorphism(a, m, n).has_value();
}

bool is_indecomposable(const FDAlgebra& a, const AModule& m) {
    if (m.dim == 0) return false;
    auto end = hom_space(a, m, m);
    int d = static_cast<int>(end.size());
    // radical of End(M) = kernel of (X, Y) -> tr(XY)
    Mat g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = (end[i] * end[j]).trace();
    return d - static_cast<int>(kernel(g).size()) == 1;
}

ProjectiveCover projective_cover(const FDAlgebra& a, const AModule& m) {
    ProjectiveCover pc;
    RowReducer rr(m.dim);
    for (const auto& r : module_radical(a, m)) rr.add(r);
    for (int v = 0; v < a.nv(); ++v)
        for (int i = 0; i < m.dim; ++i) {
            if (m.vert[i] != v) continue;
            Vec e(m.dim);
            e[i] = 1;
            if (rr.add(e)) {
                pc.tops.push_back(v);
                pc.gens.push_back(e);
            }
        }
    pc.cover = zero_module(a);
    std::vector<Vec> cols;
    for (size_t j = 0; j < pc.tops.size(); ++j) {
        int v = pc.tops[j];
        AModule p = projective(a, v);
        pc.cover = j == 0 ? p : direct_sum(pc.cover, p);
        for (int i = 0; i < a.dim(); ++i)
            if (a.tgt(i) == v) cols.push_back(act_basis(a, m, i) * pc.gens[j]);
    }
    pc.cover.name = "P(" + m.name + ")";
    pc.pi = Mat::from_columns(cols, m.dim);
    if (cols.empty()) pc.pi = Mat(m.dim, 0);
    return pc;
}

bool is_projective_module(const FDAlgebra& a, const AModule& m) {
    return projective_cover(a, m).cover.dim == m.dim;
}

AModule syzygy(const FDAlgebra& a, const AModule& m, Mat* inclusion) {
    auto pc = projective_cover(a, m);
    AModule o = submodule(a, pc.cover, kernel(pc.pi), inclusion);
    o.name = "Omega(" + m.name + ")";
    return o;
}

namespace {

// basis indices of A e_v, in the order used by projective(a, v)
std::vector<int> column_of(const FDAlgebra& a, int v) {
    std::vector<int> idx;
    for (int i = 0; i < a.dim(); ++i)
        if (a.tgt(i) == v) idx.push_back(i);
    return idx;
}

}  // namespace

MinimalPresentation minimal_presentation(const FDAlgebra& a, const AModule& m) {
    MinimalPresentation mp;
    auto pc = projective_cover(a, m);
    mp.p0 = pc.tops;
    Mat inc;
    AModule omega = submodule(a, pc.cover, kernel(pc.pi), &inc);
    auto pc1 = projective_cover(a, omega);
    mp.p1 = pc1.tops;
    for (const auto& g : pc1.gens) {
        Vec x = inc * g;  // generator in P0 coordinates
        std::vector<Vec> row;
        int off = 0;
        for (int v : mp.p0) {
            auto idx = column_of(a, v);
            Vec y(a.dim());
            for (size_t k = 0; k < idx.size(); ++k) y[idx[k]] = x[off + k];
            off += static_cast<int>(idx.size());
            row.push_back(std::move(y));
        }
        mp.y.push_back(std::move(row));
    }
    return mp;
}

AModule transpose_mod(const FDAlgebra& a, const AModule& m) {
    auto mp = minimal_presentation(a, m);
    FDAlgebra op = a.opposite();
    // U = sum of e_u A over P1, W = sum of e_v A over P0, as modules over the opposite algebra
    AModule U = zero_module(op);
    std::vector<std::vector<int>> uidx;
    for (size_t l = 0; l < mp.p1.size(); ++l) {
        AModule p = projective(op, mp.p1[l]);
        U = l == 0 ? p : direct_sum(U, p);
        uidx.push_back(column_of(op, mp.p1[l]));
    }
    std::vector<Vec> image;
    for (size_t j = 0; j < mp.p0.size(); ++j)
        for (int k : column_of(op, mp.p0[j])) {
            // z = b_k in e_v A; its image is (y_lj z)_l
            Vec out;
            for (size_t l = 0; l < mp.p1.size(); ++l) {
                Vec p = a.mul(mp.y[l][j], a.unit(k));
                for (int i : uidx[l]) out.push_back(p[i]);
            }
            if (!is_zero(out)) image.push_back(std::move(out));
        }
    AModule t = quotient(op, U, generated_submodule(op, U, image));
    t.name = "Tr(" + m.name + ")";
    return t;
}

AModule ar_translate(const FDAlgebra& a, const AModule& m) {
    AModule t = dual_module(transpose_mod(a, m));
    t.name = "tau(" + m.name + ")";
    return t;
}

AModule ar_translate_inv(const FDAlgebra& a, const AModule& m) {
    AModule t = transpose_mod(a.opposite(), dual_module(m));
    t.name = "tau^-1(" + m.name + ")";
    return t;
}

std::vector<Mat> projective_factoring_maps(const FDAlgebra& a, const AModule& m, const AModule& n) {
    auto pc = projective_cover(a, n);
    std::vector<Mat> out;
    for (const auto& g : hom_space(a, m, pc.cover)) out.push_back(pc.pi * g);
    return out;
}

namespace {

int span_dim(const std::vector<Mat>& ms, int len) {
    RowReducer rr(len);
    for (const auto& x : ms) rr.add(x.flatten());
    return rr.rank();
}

}  // namespace

int stable_hom_dim(const FDAlgebra& a, const AModule& m, const AModule& n) {
    int len = m.dim * n.dim;
    if (len == 0) return 0;
    return static_cast<int>(hom_space(a, m, n).size()) - span_dim(projective_factoring_maps(a, m, n), len);
}

bool factors_through_projective(const FDAlgebra& a, const AModule& m, const AModule& n, const Mat& f) {
    if (!is_homomorphism(m, n, f)) throw std::invalid_argument("factors_through_projective: not a homomorphism");
    if (f.is_zero()) return true;
    RowReducer rr(m.dim * n.dim);
    for (const auto& x : projective_factoring_maps(a, m, n)) rr.add(x.flatten());
    return rr.in_span(f.flatten());
}

int ext1_dim(const FDAlgebra& a, const AModule& m, const AModule& n) {
    return stable_hom_dim(a, syzygy(a, m), n);
}

}  // namespace klrwb
