#include "klrwb/path_algebra.hpp"

#include <algorithm>
#include <map>

namespace klrwb {

TraceForm trace_from_paths(const FDAlgebra& a, const std::vector<std::pair<std::string, Q>>& values) {
    TraceForm t(a.dim());
    for (const auto& [path, val] : values) {
        Vec x = a.element(path);
        int hit = -1;
        for (int i = 0; i < a.dim(); ++i)
            if (x[i] != 0) {
                if (hit >= 0) throw std::invalid_argument("trace path is not a multiple of a basis path: " + path);
                hit = i;
            }
        if (hit < 0) throw std::invalid_argument("trace path is zero in the algebra: " + path);
        t[hit] = val / x[hit];
    }
    return t;
}

namespace {

Q trace_of(const TraceForm& t, const SVec& x) {
    Q s = 0;
    for (const auto& [k, c] : x) s += c * t[k];
    return s;
}

Mat gram(const FDAlgebra& a, const TraceForm& t) {
    int n = a.dim();
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = trace_of(t, a.product(i, j));
    return g;
}

std::vector<Vec> units(int n, const std::vector<int>& idx) {
    std::vector<Vec> out;
    for (int i : idx) {
        Vec v(n);
        v[i] = 1;
        out.push_back(v);
    }
    return out;
}

}  // namespace

bool check_trace_form(const FDAlgebra& a, const TraceForm& t, std::string* why) {
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (trace_of(t, a.product(i, j)) != trace_of(t, a.product(j, i))) {
                if (why) *why = "Tr(xy) != Tr(yx) for x = " + a.basis_name(i) + ", y = " + a.basis_name(j);
                return false;
            }
    if (rank(gram(a, t)) != n) {
        if (why) *why = "Gram matrix of Tr is singular";
        return false;
    }
    return true;
}

std::optional<TraceForm> is_symmetric(const FDAlgebra& a, const std::optional<TraceForm>& given) {
    if (given) {
        if (check_trace_form(a, *given)) return given;
        return std::nullopt;
    }
    int n = a.dim();
    // symmetric forms vanish on all commutators
    RowReducer rr(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec c = to_dense(a.product(i, j), n);
            for (const auto& [k, v] : a.product(j, i)) c[k] -= v;
            if (!is_zero(c)) rr.add(c);
        }
    auto forms = rr.nullspace();
    std::vector<Mat> grams;
    for (const auto& f : forms) grams.push_back(gram(a, f));
    auto g = find_invertible(grams);
    if (!g) return std::nullopt;
    // recover the form from the Gram matrix: Tr(b_i) = Tr(e_src b_i)
    TraceForm t(n);
    for (int i = 0; i < n; ++i) {
        int e = a.idem_index[a.src(i)];
        t[i] = (*g)(e, i);
    }
    return t;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) return is_zero(v);
    RowReducer rr(static_cast<int>(v.size()));
    for (const auto& b : basis) rr.add(b);
    return rr.in_span(v);
}

std::vector<std::vector<int>> cartan_matrix_of(const FDAlgebra& a) {
    std::vector<std::vector<int>> c(a.nv(), std::vector<int>(a.nv(), 0));
    for (const auto& p : a.basis) ++c[p.src][p.tgt];
    return c;
}

std::vector<Vec> ideal_product(const FDAlgebra& a, const std::vector<Vec>& x, const std::vector<Vec>& y) {
    std::vector<Vec> prods;
    for (const auto& u : x)
        for (const auto& v : y) {
            Vec p = a.mul(u, v);
            if (!is_zero(p)) prods.push_back(std::move(p));
        }
    return span_basis(prods, a.dim());
}

std::vector<Vec> arrow_ideal(const FDAlgebra& a) {
    std::vector<int> idx;
    for (int i = 0; i < a.dim(); ++i)
        if (!a.basis[i].trivial()) idx.push_back(i);
    return units(a.dim(), idx);
}

std::vector<Vec> jacobson_radical(const FDAlgebra& a) {
    int n = a.dim();
    // tr(L_x L_y) = tr(L_{xy}); in characteristic zero its kernel is the radical
    Vec tr(n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (const auto& [m, c] : a.product(k, j))
                if (m == j) tr[k] += c;
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = trace_of(tr, a.product(i, j));
    auto rad = span_basis(kernel(g), n);
    auto power = rad;
    for (int step = 0; step <= n && !power.empty(); ++step) power = ideal_product(a, power, rad);
    if (!power.empty()) throw MathError("trace-form radical is not nilpotent");
    return rad;
}

std::vector<Vec> socle_algebra(const FDAlgebra& a) {
    int n = a.dim();
    auto rad = a.admissible ? arrow_ideal(a) : jacobson_radical(a);
    RowReducer rr(n);
    for (const auto& r : rad) {
        // rows: coefficient k of r x and of x r as functions of x
        std::vector<Vec> left(n, Vec(n)), right(n, Vec(n));
        for (int i = 0; i < n; ++i) {
            if (r[i] == 0) continue;
            for (int j = 0; j < n; ++j) {
                for (const auto& [k, c] : a.product(i, j)) left[k][j] += r[i] * c;
                for (const auto& [k, c] : a.product(j, i)) right[k][j] += r[i] * c;
            }
        }
        for (auto& row : left)
            if (!is_zero(row)) rr.add(row);
        for (auto& row : right)
            if (!is_zero(row)) rr.add(row);
    }
    return rr.nullspace();
}

std::vector<Vec> center(const FDAlgebra& a) {
    int n = a.dim();
    std::vector<Vec> gens;
    for (int v = 0; v < a.nv(); ++v)
        if (a.idem_index[v] >= 0) gens.push_back(a.idem(v));
    for (const auto& x : a.arrow_value) gens.push_back(x);
    RowReducer rr(n);
    for (const auto& g : gens) {
        std::vector<Vec> rows(n, Vec(n));
        for (int j = 0; j < n; ++j) {
            Vec c = a.mul(a.unit(j), g);
            Vec d = a.mul(g, a.unit(j));
            for (int k = 0; k < n; ++k) rows[k][j] = c[k] - d[k];
        }
        for (auto& row : rows)
            if (!is_zero(row)) rr.add(row);
    }
    return rr.nullspace();
}

bool is_self_injective(const FDAlgebra& a) {
    // basic algebra: each projective has a simple socle and the socle vertices permute
    int n = a.dim();
    std::vector<int> nak_left, nak_right;
    for (int side = 0; side < 2; ++side) {
        for (int v = 0; v < a.nv(); ++v) {
            if (a.idem_index[v] < 0) continue;
            std::vector<int> idx;
            for (int i = 0; i < n; ++i)
                if ((side == 0 ? a.tgt(i) : a.src(i)) == v) idx.push_back(i);
            int d = static_cast<int>(idx.size());
            RowReducer eq(d);
            for (const auto& x : a.arrow_value) {
                std::vector<Vec> rows(n, Vec(d));
                for (int c = 0; c < d; ++c) {
                    Vec p = side == 0 ? a.mul(x, a.unit(idx[c])) : a.mul(a.unit(idx[c]), x);
                    for (int k = 0; k < n; ++k) rows[k][c] = p[k];
                }
                for (auto& r : rows)
                    if (!is_zero(r)) eq.add(r);
            }
            auto soc = eq.nullspace();
            if (soc.size() != 1) return false;
            int vert = -1;
            for (int c = 0; c < d; ++c)
                if (soc[0][c] != 0) {
                    int w = side == 0 ? a.src(idx[c]) : a.tgt(idx[c]);
                    if (vert >= 0 && vert != w) return false;
                    vert = w;
                }
            (side == 0 ? nak_left : nak_right).push_back(vert);
        }
    }
    auto perm = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    return perm(nak_left) && perm(nak_right);
}

namespace {

void arrow_counts(const FDAlgebra& a, BiserialReport& rep) {
    const Quiver& q = a.quiver;
    for (int v = 0; v < q.nv(); ++v) {
        int in = 0, out = 0;
        for (const auto& ar : q.arrows) {
            if (ar.src == v) ++out;
            if (ar.tgt == v) ++in;
        }
        if (in > 2 || out > 2) {
            rep.ok = false;
            rep.witnesses.push_back("vertex " + q.vertices[v] + " has " + std::to_string(in) + " incoming and " +
                                    std::to_string(out) + " outgoing arrows");
        }
    }
}

// for each arrow, the arrows composable after it (or before it) failing the given test
template <class Bad>
void composition_counts(const FDAlgebra& a, BiserialReport& rep, Bad bad) {
    const Quiver& q = a.quiver;
    for (int x = 0; x < q.na(); ++x) {
        std::vector<std::string> after, before;
        for (int y = 0; y < q.na(); ++y) {
            if (q.arrows[x].tgt == q.arrows[y].src && bad(x, y)) after.push_back(q.arrows[y].name);
            if (q.arrows[y].tgt == q.arrows[x].src && bad(y, x)) before.push_back(q.arrows[y].name);
        }
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (const auto& w : v) s += (s.empty() ? "" : ", ") + w;
            return s;
        };
        if (after.size() > 1) {
            rep.ok = false;
            rep.witnesses.push_back(q.arrows[x].name + " is followed nontrivially by " + join(after));
        }
        if (before.size() > 1) {
            rep.ok = false;
            rep.witnesses.push_back(q.arrows[x].name + " is preceded nontrivially by " + join(before));
        }
    }
}

}  // namespace

BiserialReport is_special_biserial(const FDAlgebra& a) {
    BiserialReport rep;
    if (!a.admissible) {
        rep.ok = false;
        rep.witnesses.push_back("presentation is not admissible");
    }
    arrow_counts(a, rep);
    composition_counts(a, rep, [&](int x, int y) { return !is_zero(a.mul(a.arrow_value[x], a.arrow_value[y])); });
    return rep;
}

BiserialReport is_stably_biserial(const FDAlgebra& a) {
    BiserialReport rep;
    if (!is_self_injective(a)) {
        rep.ok = false;
        rep.witnesses.push_back("algebra is not self-injective");
    }
    arrow_counts(a, rep);
    auto rad = a.admissible ? arrow_ideal(a) : jacobson_radical(a);
    auto soc = socle_algebra(a);
    composition_counts(a, rep, [&](int x, int y) {
        std::vector<Vec> span = soc;
        for (const auto& r : rad) {
            Vec p = a.mul(a.mul(a.arrow_value[x], r), a.arrow_value[y]);
            if (!is_zero(p)) span.push_back(std::move(p));
        }
        return !in_span(span, a.mul(a.arrow_value[x], a.arrow_value[y]));
    });
    return rep;
}

Quiver quiver_of_algebra(const FDAlgebra& a) {
    int n = a.dim();
    auto J = jacobson_radical(a);
    auto J2 = ideal_product(a, J, J);
    Quiver q;
    std::vector<int> vmap(a.nv(), -1);
    for (int v = 0; v < a.nv(); ++v)
        if (a.idem_index[v] >= 0) vmap[v] = q.add_vertex(a.quiver.vertices[v]);
    for (int i = 0; i < a.nv(); ++i)
        for (int j = 0; j < a.nv(); ++j) {
            if (vmap[i] < 0 || vmap[j] < 0) continue;
            std::vector<Vec> part;
            for (const auto& x : J) {
                Vec y = a.mul(a.mul(a.idem(i), x), a.idem(j));
                if (!is_zero(y)) part.push_back(std::move(y));
            }
            part = span_basis(part, n);
            if (part.empty()) continue;
            RowReducer known(n);
            for (const auto& x : J2) known.add(x);
            // prefer single basis paths as arrow representatives
            std::vector<Vec> cands;
            for (int k = 0; k < n; ++k)
                if (a.src(k) == i && a.tgt(k) == j && in_span(part, a.unit(k))) cands.push_back(a.unit(k));
            for (const auto& x : part) cands.push_back(x);
            for (const auto& c : cands) {
                if (!known.add(c)) continue;
                std::string name = a.format(c);
                std::replace(name.begin(), name.end(), ' ', '.');
                q.add_arrow(name, vmap[i], vmap[j]);
            }
        }
    return q;
}

std::optional<WildWitness> wild_configuration_witness(const Quiver& q) {
    for (int v = 0; v < q.nv(); ++v) {
        WildWitness w;
        w.vertex = v;
        for (const auto& a : q.arrows) {
            if (a.src == v && a.tgt == v)
                w.loops.push_back(a.name);
            else if ((a.src == v || a.tgt == v) && w.extra.empty())
                w.extra = a.name;
        }
        if (w.loops.size() >= 2 && !w.extra.empty()) return w;
    }
    return std::nullopt;
}

}  // namespace klrwb
