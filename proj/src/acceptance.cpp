#include "klrwb/acceptance.hpp"

#include "klrwb/catalog.hpp"
#include "klrwb/klr_path.hpp"
#include "klrwb/oracle.hpp"
#include "klrwb/string_ar.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace klrwb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Collector {
    std::vector<CheckResult>& out;
    int crit;
    bool all = true;
    void check(const std::string& label, bool pass, const std::string& detail = "") {
        out.push_back({crit, label, pass, detail});
        all = all && pass;
    }
    // an exception inside a sub-check is a failure of that sub-check
    void guarded(const std::string& label, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(label, false, std::string("exception: ") + e.what());
        }
    }
};

std::string str(const Q& q) { return to_string(q); }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::vector<Q> with_lam(std::vector<Q> base, const Q& lam) {
    for (const auto& x : base)
        if (x == lam) return base;
    base.push_back(lam);
    return base;
}

bool verify_ok(const MatrixRep& r, std::string* why = nullptr) {
    auto rep = verify_rep(KLRPresentation::normalized(r.ell, r.n, r.lam), r);
    if (why) *why = rep.ok() ? "" : rep.summary();
    return rep.ok();
}

std::string layer_string(const MatrixRep& r, const std::vector<MatrixRep>& simples) {
    std::vector<std::string> ls;
    for (const auto& l : radical_layers(r, simples)) ls.push_back(l.str());
    return "[" + join(ls, "; ") + "]";
}

// every exponent tuple with entries in 1..3 that the family accepts
void for_each_family(const std::function<void(const CatalogAlgebra&)>& fn) {
    for (const std::string name : {"1", "2a", "2b", "3a", "3b", "4a", "4b", "4c"}) {
        int k = catalog_arity(name);
        std::vector<int> e(k, 1);
        while (true) {
            std::optional<CatalogAlgebra> c;
            try {
                c = catalog(name, e);
            } catch (const std::invalid_argument&) {
            }
            if (c) fn(*c);
            int i = 0;
            while (i < k && e[i] == 3) e[i++] = 1;
            if (i == k) break;
            ++e[i];
        }
    }
}

// ---- criterion 1

void c1_dims(Collector& c) {
    auto t0 = Clock::now();
    for (int ell = 1; ell <= 3; ++ell)
        for (int n = 1; n <= 8; ++n) {
            std::string label = "sum of block dims = n!, ell=" + std::to_string(ell) + " n=" + std::to_string(n);
            c.guarded(label, [&] {
                auto s = dim_full_by_blocks(ell, n);
                c.check(label, s == factorial(n), std::to_string(s));
            });
        }
    auto block = [&](const std::string& what, std::vector<long> beta, std::uint64_t want) {
        auto d = dim_block(1, beta);
        c.check("dim R(" + what + ") = " + std::to_string(want) + " (ell=1)", d == want, std::to_string(d));
    };
    block("delta", {1, 1}, 2);
    block("2delta-alpha0", {1, 2}, 4);
    block("2delta-alpha1", {2, 1}, 2);

    ResidueSeq e1 = parse_residues("012012"), e2 = parse_residues("021021");
    auto d11 = dim_idempotent_hom(2, e1, e1), d22 = dim_idempotent_hom(2, e2, e2);
    auto d12 = dim_idempotent_hom(2, e1, e2), d21 = dim_idempotent_hom(2, e2, e1);
    c.check("dim e1 R(2delta) e1 = 4 (ell=2, e1=e(012012))", d11 == 4, std::to_string(d11));
    c.check("dim e2 R(2delta) e2 = 4 (ell=2, e2=e(021021))", d22 == 4, std::to_string(d22));
    c.check("dim eR(2delta)e = 10 for e=e1+e2", d11 + d12 + d21 + d22 == 10, std::to_string(d11 + d12 + d21 + d22));
    ResidueSeq w = parse_residues("0101"), v = parse_residues("01010");
    auto dw = dim_idempotent_hom(1, w, w), dv = dim_idempotent_hom(1, v, v);
    c.check("dim e(0101) R(2delta) e(0101) = 4", dw == 4, std::to_string(dw));
    c.check("dim e(01010) R(2delta+alpha0) e(01010) = 8", dv == 8, std::to_string(dv));
    c.check("runtime under 60 s", seconds_since(t0) < 60);
}

// ---- criterion 2

void c2_klr(Collector& c, const Q& lam) {
    auto t0 = Clock::now();
    for (const Q& l : with_lam({0, 1, Q(3, 2)}, lam))
        for (int n = 1; n <= 4; ++n) {
            std::string label = "KLR quiver presentation, ell=1 lambda=" + str(l) + " n=" + std::to_string(n);
            c.guarded(label, [&] {
                auto k = klr_algebra(1, n, l);
                int bad = 0;
                for (const auto& a : k.q.words)
                    for (const auto& b : k.q.words)
                        if (static_cast<std::uint64_t>(idempotent_dim(k, a, b)) != dim_idempotent_hom(1, a, b)) ++bad;
                c.check(label + ": total n!, per-idempotent dims match",
                        static_cast<std::uint64_t>(k.a.dim()) == factorial(n) && bad == 0,
                        "dim " + std::to_string(k.a.dim()) + ", mismatched pairs " + std::to_string(bad));
            });
        }
    c.check("runtime under 300 s", seconds_since(t0) < 300);
}

// ---- criterion 3

const std::vector<std::string> kIrreducible = {"M0", "M1", "N0", "N1", "O0", "O1"};
const std::vector<std::string> kReducible = {"M1hat", "N1hat", "O1hat", "T1", "T1hat"};

void c3_zoo(Collector& c, const Q& lam) {
    for (int ell = 1; ell <= 4; ++ell)
        for (int i = 1; i <= ell; ++i)
            for (bool s : {false, true}) {
                std::string nm = std::string(s ? "S" : "L") + std::to_string(i) + " (ell=" + std::to_string(ell) + ")";
                c.guarded(nm, [&] {
                    MatrixRep r = s ? build_S(ell, i) : build_L(ell, i);
                    std::string why;
                    bool ok = verify_ok(r, &why);
                    c.check(nm + " satisfies the relations and is irreducible", ok && is_absolutely_irreducible(r), why);
                });
            }
    for (const Q& l : with_lam({0, 1, -1, Q(2, 3)}, lam)) {
        std::string at = " at lambda=" + str(l);
        for (const auto& name : zoo_names()) {
            if (name == "L" || name == "S" || name == "T0") continue;
            c.guarded(name + at, [&] {
                std::string why;
                c.check(name + " satisfies the relations" + at, verify_ok(build_zoo(name, l), &why), why);
            });
        }
        c.guarded("T0" + at, [&] {
            auto t0 = build_T0(l);
            auto rep = verify_rep(KLRPresentation::normalized(1, t0.n, l), t0);
            if (l == 0) {
                c.check("T0 satisfies the relations" + at, rep.ok(), rep.summary());
                c.check("T0 is not irreducible" + at, !is_absolutely_irreducible(t0));
            } else {
                bool witness = false;
                for (const auto& f : rep.failures)
                    if (f.relation == "(psi3 x3 - x4 psi3) e(0110)") witness = true;
                c.check("T0 fails with witness (psi3 x3 - x4 psi3) e(0110)" + at, !rep.ok() && witness,
                        rep.ok() ? "no failure" : rep.failures.front().relation);
            }
        });
        for (const auto& name : kIrreducible)
            c.guarded(name + " irreducible" + at,
                      [&] { c.check(name + " is irreducible" + at, is_absolutely_irreducible(build_zoo(name, l))); });
        for (const auto& name : kReducible)
            c.guarded(name + " reducible" + at,
                      [&] { c.check(name + " is not irreducible" + at, !is_absolutely_irreducible(build_zoo(name, l))); });
    }
}

// ---- criterion 4

void c4_radical(Collector& c, const Q& lam) {
    for (const Q& l : with_lam({0, 1, -1, Q(2, 3)}, lam)) {
        std::string at = " at lambda=" + str(l);
        std::vector<MatrixRep> n = {build_N0(l), build_N1(l)}, o = {build_O0(l), build_O1(l)};
        c.guarded("radical series" + at, [&] {
            if (l != 0) {
                auto t1 = layer_string(build_T1(l), n), th = layer_string(build_T1hat(l), n);
                c.check("T1 = [N0; N1; N0]" + at, t1 == "[N0; N1; N0]", t1);
                c.check("T1hat = [N1; N0; N1; N0]" + at, th == "[N1; N0; N1; N0]", th);
                auto v = layer_string(build_V(l), o);
                c.check("radical series for 2delta+alpha0: V = [O1; O0]" + at, v == "[O1; O0]", v);
            } else {
                MatrixRep t1 = build_T1(l);
                auto rad = subrep(t1, radical_power(t1, 1));
                c.check("Rad T1 = N0" + at, modules_isomorphic(rad, n[0]).has_value(),
                        "layers " + layer_string(t1, n));
                auto u = layer_string(build_U(l), o);
                c.check("radical series for 2delta+alpha0: U = [O1; O0]" + at, u == "[O1; O0]", u);
            }
            auto oh = layer_string(build_O1hat(l), o);
            c.check("radical series for 2delta+alpha0: O1hat = [O1; O1]" + at, oh == "[O1; O1]", oh);
            int e0 = epsilon(o[0], 0), e1 = epsilon(o[1], 0);
            c.check("epsilon_0(O0) = 2, epsilon_0(O1) = 1" + at, e0 == 2 && e1 == 1,
                    std::to_string(e0) + ", " + std::to_string(e1));
        });
    }
}

// ---- criterion 5

void c5_induction(Collector& c, const Q& lam) {
    for (const Q& l : with_lam({0}, lam)) {
        std::string at = " at lambda=" + str(l);
        c.guarded("induction" + at, [&] {
            auto big = klr_algebra(1, 4, l, {2, 2});
            auto s0 = klr_algebra(1, 3, l, {1, 2});
            auto s1 = klr_algebra(1, 3, l, {2, 1});
            AModule q0 = induce(big, s0, 0, to_amodule(s0, build_M0(l)));
            AModule q1 = induce(big, s1, 1, to_amodule(s1, build_M1hat(l)));
            c.check("dim Q0 = dim Q1 = 8" + at, q0.dim == 8 && q1.dim == 8,
                    std::to_string(q0.dim) + ", " + std::to_string(q1.dim));
            std::vector<MatrixRep> n = {build_N0(l), build_N1(l)};
            auto r0 = to_matrix_rep(big, q0), r1 = to_matrix_rep(big, q1);
            bool ok0 = true, ok1 = true;
            auto f0 = decompose_character(r0.character(), n, ok0), f1 = decompose_character(r1.character(), n, ok1);
            using F = std::vector<std::pair<std::string, int>>;
            c.check("[Q0] = 3[N0] + 2[N1]" + at, ok0 && f0 == F{{"N0", 3}, {"N1", 2}});
            c.check("[Q1] = 2[N0] + 4[N1]" + at, ok1 && f1 == F{{"N0", 2}, {"N1", 4}});
            int h00 = static_cast<int>(hom_space(big.a, q0, q0).size());
            int h11 = static_cast<int>(hom_space(big.a, q1, q1).size());
            int h01 = static_cast<int>(hom_space(big.a, q0, q1).size());
            int h10 = static_cast<int>(hom_space(big.a, q1, q0).size());
            c.check("dim End Q0 = 3, End Q1 = 4, Hom(Q0,Q1) = Hom(Q1,Q0) = 2" + at,
                    h00 == 3 && h11 == 4 && h01 == 2 && h10 == 2,
                    std::to_string(h00) + " " + std::to_string(h11) + " " + std::to_string(h01) + " " +
                        std::to_string(h10));
            auto l0 = layer_string(r0, n), l1 = layer_string(r1, n);
            std::string w0 = l == 0 ? "[N0; N0+N1; N1; N0]" : "[N0; N1; N0; N1; N0]";
            std::string w1 = l == 0 ? "[N1; N0+N1; N0+N1; N1]" : "[N1; N0+N1; N1; N0; N1]";
            c.check("Q0 = " + w0 + at, l0 == w0, l0);
            c.check("Q1 = " + w1 + at, l1 == w1, l1);
        });
    }
}

// ---- criterion 6

void c6_catalog(Collector& c) {
    for_each_family([&](const CatalogAlgebra& cat) {
        const std::string& nm = cat.pres.name;
        c.guarded(nm, [&] {
            FDAlgebra a = cat.algebra();
            std::string why;
            bool sym = check_trace_form(a, cat.trace_form(a), &why);
            auto sb = is_special_biserial(a);
            c.check(nm + ": symmetric with the given trace, special biserial", sym && sb.ok,
                    why + join(sb.witnesses, "; "));
            auto o = brute_force_dims(cat.pres);
            auto cm = cartan_matrix_of(a);
            bool same = o.total == a.dim();
            for (int i = 0; i < a.nv(); ++i)
                for (int j = 0; j < a.nv(); ++j) {
                    auto it = o.block.find({i, j});
                    if ((it == o.block.end() ? 0 : it->second) != cm[i][j]) same = false;
                }
            c.check(nm + ": dim " + std::to_string(a.dim()) + " equals the brute-force count", same,
                    "oracle " + std::to_string(o.total));
        });
    }
    );
    c.guarded("appendix example", [&] {
        auto cat = appendix_example();
        FDAlgebra a = cat.algebra();
        bool sym = is_symmetric(a).has_value();
        bool stably = is_stably_biserial(a).ok, special = is_special_biserial(a).ok;
        c.check("Appendix example: symmetric, stably biserial, not special biserial", sym && stably && !special,
                std::string("symmetric ") + (sym ? "yes" : "no") + ", stably " + (stably ? "yes" : "no") +
                    ", special " + (special ? "yes" : "no"));
    });
}

// ---- criterion 7

Vec sum(const std::vector<Vec>& xs) {
    Vec s = xs.front();
    for (size_t i = 1; i < xs.size(); ++i)
        for (size_t k = 0; k < s.size(); ++k) s[k] += xs[i][k];
    return s;
}

void center_check(Collector& c, const std::string& label, const FDAlgebra& a, const std::vector<Vec>& listed) {
    auto z = center(a);
    int central = 0;
    for (const auto& x : listed)
        if (in_span(z, x)) ++central;
    int indep = static_cast<int>(span_basis(listed, a.dim()).size());
    bool ok = static_cast<int>(z.size()) == static_cast<int>(listed.size()) && central == static_cast<int>(listed.size()) &&
              indep == static_cast<int>(listed.size());
    c.check(label, ok,
            "dim Z = " + std::to_string(z.size()) + ", listed " + std::to_string(listed.size()) + " (central " +
                std::to_string(central) + ", independent " + std::to_string(indep) + ")");
}

void c7_centers(Collector& c) {
    c.guarded("center basic lambda!=0", [&] {
        FDAlgebra a = basic_R2delta(false).algebra();
        center_check(c, "basic algebra of R(2delta), lambda!=0: Z = <1, ab+ba, (ab)^2, g, g^2>", a,
                     {a.one(), sum({a.element("alpha beta"), a.element("beta alpha")}), a.element("alpha beta alpha beta"),
                      a.element("gamma"), a.element("gamma gamma")});
    });
    c.guarded("center basic lambda=0", [&] {
        FDAlgebra a = basic_R2delta(true).algebra();
        center_check(c, "basic algebra of R(2delta), lambda=0: Z = <1, g, ba, g^2, bad>", a,
                     {a.one(), a.element("gamma"), a.element("beta alpha"), a.element("gamma gamma"),
                      a.element("beta alpha delta")});
    });
    for (int m = 1; m <= 3; ++m)
        c.guarded("center 2b", [&] {
            FDAlgebra a = family_2b(m).algebra();
            center_check(c, "(2b) m=" + std::to_string(m) + ": Z = <1, ab(gab)^(m-1), (abg)^m, (bga)^m>", a,
                         {a.one(), a.element(join({"alpha beta", power("gamma alpha beta", m - 1)}, m > 1 ? " " : "")),
                          a.element(power("alpha beta gamma", m)), a.element(power("beta gamma alpha", m))});
        });
    for (int p = 1; p <= 3; ++p)
        for (int q = 2; q <= 3; ++q)
            c.guarded("center 4b", [&] {
                FDAlgebra a = family_4b(p, q).algebra();
                std::vector<Vec> listed = {a.one(),
                                           a.element(join({"alpha beta", power("gamma alpha beta", p - 1)}, p > 1 ? " " : "")),
                                           a.element(power("gamma alpha beta", p))};
                for (int k = 1; k <= q; ++k) listed.push_back(a.element(power("delta", k)));
                center_check(c,
                             "(4b) p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                 ": Z = <1, ab(gab)^(p-1), (gab)^p, d, ..., d^q>",
                             a, listed);
            });
    c.guarded("center 4a", [&] {
        FDAlgebra a = family_4a(2, 2, 2).algebra();
        center_check(c, "(4a) p=q=r=2: Z = <1, ab+ba, g, g^2, d, d^2>", a,
                     {a.one(), sum({a.element("alpha beta"), a.element("beta alpha")}), a.element("gamma"),
                      a.element("gamma gamma"), a.element("delta"), a.element("delta delta")});
    });
}

// ---- criterion 8

// "e1/alpha" = Ae1/A alpha, "e1/soc" = Ae1/Soc(Ae1), "rad e0" = Rad(Ae0)
AModule named_module(const FDAlgebra& a, const std::string& name) {
    if (name.rfind("rad e", 0) == 0) return radical(a, projective(a, a.quiver.vertex_index(name.substr(5))));
    auto slash = name.find('/');
    int v = a.quiver.vertex_index(name.substr(1, slash - 1));
    std::string rest = name.substr(slash + 1);
    if (rest == "soc") {
        AModule p = projective(a, v);
        return quotient(a, p, module_socle(a, p));
    }
    return cyclic_quotient(a, v, {a.element(rest)});
}

void tau_table(Collector& c, const std::string& where, const FDAlgebra& a,
               const std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [from, to] : rows) {
        std::string label = where + ": tau(" + from + ") = " + to;
        c.guarded(label, [&] {
            AModule x = named_module(a, from), y = named_module(a, to);
            AModule t = ar_translate(a, x);
            c.check(label, is_isomorphic(a, t, y), "dim " + std::to_string(t.dim) + " vs " + std::to_string(y.dim));
        });
    }
}

void c8_tau(Collector& c) {
    auto t0 = Clock::now();
    {
        FDAlgebra a = basic_R2delta(true).algebra();
        tau_table(c, "basic, lambda=0", a,
                  {{"e1/alpha", "e0/beta"}, {"e0/beta", "e0/gamma"}, {"e0/gamma", "e1/alpha"}, {"e1/delta", "e1/delta"}});
    }
    {
        FDAlgebra a = basic_R2delta(false).algebra();
        tau_table(c, "basic, lambda!=0", a,
                  {{"e1/alpha", "e0/beta"}, {"e0/beta", "e1/alpha"}, {"e1/gamma", "e0/soc"}, {"e0/soc", "rad e0"}});
        c.guarded("Rad(Ae0) = Ae1/Agamma", [&] {
            c.check("basic, lambda!=0: Rad(Ae0) = Ae1/Agamma",
                    is_isomorphic(a, named_module(a, "rad e0"), named_module(a, "e1/gamma")));
        });
    }
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> tables = {
        {"2a", {{"e1/alpha", "e0/beta"}, {"e0/beta", "e1/alpha"}, {"e0/gamma", "e1/soc"}, {"e1/soc", "e0/gamma"}}},
        {"2b", {{"e1/alpha", "e1/soc"}, {"e1/soc", "rad e1"}, {"rad e1", "e0/beta"}, {"e0/beta", "e1/alpha"},
                {"e0/gamma", "e0/gamma"}}},
        {"3a", {{"e1/alpha", "e1/alpha"}, {"e1/alpha'", "e1/alpha'"}, {"e0/beta", "e0/beta"}, {"e0/beta'", "e0/beta'"}}},
        {"3b", {{"e1/alpha", "e1/alpha'"}, {"e1/alpha'", "e1/alpha"}, {"e0/beta", "e0/beta'"}, {"e0/beta'", "e0/beta"}}},
        {"4a", {{"e1/alpha", "e0/beta"}, {"e0/beta", "e1/alpha"}, {"e0/gamma", "e1/delta"}, {"e1/delta", "e0/gamma"}}},
        {"4b", {{"e1/alpha", "e1/delta"}, {"e1/delta", "e0/beta"}, {"e0/beta", "e1/alpha"}, {"e0/gamma", "e0/gamma"}}},
        {"4c", {{"e1/alpha", "e1/alpha"}, {"e0/beta", "e0/beta"}, {"e0/gamma", "e0/gamma"}, {"e1/delta", "e1/delta"}}},
    };
    for_each_family([&](const CatalogAlgebra& cat) {
        std::string fam = cat.pres.name.substr(0, cat.pres.name.find('('));
        auto it = tables.find(fam);
        if (it == tables.end()) return;
        // the "rad e1" row is the isomorphism Rad(Ae1) = Ae0/Abeta, not a tau statement
        FDAlgebra a = cat.algebra();
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& r : it->second) {
            if (r.first == "rad e1") {
                c.guarded(cat.pres.name + ": Rad(Ae1) = Ae0/Abeta", [&] {
                    c.check(cat.pres.name + ": Rad(Ae1) = Ae0/Abeta",
                            is_isomorphic(a, named_module(a, "rad e1"), named_module(a, "e0/beta")));
                });
            } else {
                rows.push_back(r);
            }
        }
        tau_table(c, cat.pres.name, a, rows);
    });
    c.check("runtime under 120 s", seconds_since(t0) < 120);
}

// ---- criterion 9

std::pair<StringWord, StringWord> sorted_pair(const Quiver& q, const StringWord& x, const StringWord& y) {
    StringWord a = canonical_string(q, x), b = canonical_string(q, y);
    if (b < a) std::swap(a, b);
    return {a, b};
}

void c9_strings(Collector& c) {
    FDAlgebra a = basic_R2delta(false).algebra();
    const Quiver& q = a.quiver;
    auto mod = [&](const std::string& s) { return string_module(a, parse_string(q, s)); };
    c.guarded("unique band", [&] {
        auto bands = enumerate_bands(a, 6);
        std::vector<std::string> names;
        for (const auto& b : bands) names.push_back(format_string(q, b));
        bool ok = bands.size() == 1 && bands[0] == canonical_band(q, parse_string(q, "beta alpha ~gamma"));
        c.check("lambda!=0: the unique band is beta alpha ~gamma (length <= 6)", ok, join(names, ", "));
    });
    c.guarded("composite bands", [&] {
        FDAlgebra z = basic_R2delta(true).algebra();
        auto x = parse_string(z.quiver, "alpha ~delta beta ~gamma"), y = parse_string(z.quiver, "alpha ~delta beta");
        for (auto [qq, want] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{5, 6}}) {
            auto got = composite_bands(z, x, y, qq);
            c.check("lambda=0: (2^q-2)/q = " + std::to_string(want) + " band classes for q=" + std::to_string(qq),
                    static_cast<int>(got.size()) == want, std::to_string(got.size()));
        }
    });
    c.guarded("s.o.s.b.", [&] {
        auto pairs = sosb_pairs(a, 4);
        std::set<std::pair<StringWord, StringWord>> got, want;
        for (const auto& p : pairs) got.insert(sorted_pair(q, p.x0, p.x1));
        for (auto [x, y] : {std::pair{"e0", "e1"}, std::pair{"beta", "alpha beta alpha"}, std::pair{"beta alpha beta", "alpha"},
                            std::pair{"beta alpha beta", "alpha beta alpha"}})
            want.insert(sorted_pair(q, parse_string(q, x), parse_string(q, y)));
        bool contains = std::includes(got.begin(), got.end(), want.begin(), want.end());
        c.check("s.o.s.b.: exactly four pairs at maxlen 4", got == want,
                std::to_string(got.size()) + " pairs" + (contains ? ", the four listed ones among them" : ""));
    });
    auto ext = [&](const AModule& x, const AModule& y) { return ext1_dim(a, x, y); };
    c.guarded("Ext table", [&] {
        AModule s0 = simple_module(a, 0), s1 = simple_module(a, 1);
        AModule b = mod("beta"), aba = mod("alpha beta alpha"), bab = mod("beta alpha beta"), al = mod("alpha");
        auto row = [&](const std::string& label, int got, int want) {
            c.check(label + " = " + std::to_string(want), got == want, std::to_string(got));
        };
        row("case (1): Ext1(S0,S0)", ext(s0, s0), 0);
        row("case (1): Ext1(S1,S1)", ext(s1, s1), 1);
        row("case (1): Ext1(S0,S1)", ext(s0, s1), 1);
        row("case (1): Ext1(S1,S0)", ext(s1, s0), 1);
        row("case (2): Ext1(M(b),M(b))", ext(b, b), 1);
        row("case (2): Ext1(M(aba),M(aba))", ext(aba, aba), 0);
        row("case (2): Ext1(M(b),M(aba))", ext(b, aba), 1);
        row("case (2): Ext1(M(aba),M(b))", ext(aba, b), 1);
        row("case (3): Ext1(X1,X0) with X0=M(bab), X1=M(a)", ext(al, bab), 0);
        row("case (3): Ext1(X0,X1) with X0=M(bab), X1=M(a)", ext(bab, al), 1);
        row("case (4): Ext1(M(bab),M(bab))", ext(bab, bab), 0);
        row("case (4): Ext1(M(aba),M(aba))", ext(aba, aba), 0);
    });
    c.guarded("s-projectives", [&] {
        AModule m0 = s_projective(a, mod("beta")), m1 = s_projective(a, mod("alpha beta alpha"));
        AModule l0 = s_projective(a, mod("alpha")), l1 = s_projective(a, mod("beta alpha beta"));
        std::string literal = std::string("pair M(a), M(bab): M(a) -> ") +
                              (is_isomorphic(a, l0, mod("alpha beta")) ? "M(alpha beta)" : "dim " + std::to_string(l0.dim)) +
                              ", M(bab) -> " +
                              (is_isomorphic(a, l1, mod("gamma")) ? "M(gamma)" : "dim " + std::to_string(l1.dim));
        c.check("s-projective of X0=M(beta) is M(beta alpha ~gamma)",
                is_isomorphic(a, m0, mod("beta alpha ~gamma")), literal);
        c.check("s-projective of X1=M(alpha beta alpha) is S0", is_isomorphic(a, m1, simple_module(a, 0)), literal);
    });
    c.guarded("stable Hom with the s.o.s.b.", [&] {
        AModule x0 = mod("beta"), x1 = mod("alpha beta alpha");
        for (auto [s, w0, w1] : {std::tuple{"beta", 1, 0}, std::tuple{"alpha beta alpha ~gamma", 0, 1},
                                 std::tuple{"~beta gamma", 1, 0}}) {
            AModule n = mod(s);
            int a0 = stable_hom_dim(a, n, x0), b0 = stable_hom_dim(a, x0, n);
            int a1 = stable_hom_dim(a, n, x1), b1 = stable_hom_dim(a, x1, n);
            c.check(std::string("stable Hom of M(") + s + ") with M(beta), M(alpha beta alpha)",
                    a0 == w0 && b0 == w0 && a1 == w1 && b1 == w1,
                    std::to_string(a0) + " " + std::to_string(b0) + " " + std::to_string(a1) + " " + std::to_string(b1));
        }
    });
}

// ---- criterion 10

ScalingMatrix random_scaling(std::mt19937_64& rng, int ell) {
    ScalingMatrix c(ell + 1, std::vector<Q>(ell + 1));
    for (int i = 0; i <= ell; ++i)
        for (int j = i; j <= ell; ++j) {
            long num = static_cast<long>(rng() % 9) - 4;
            if (num == 0) num = 5;
            long den = static_cast<long>(rng() % 4) + 1;
            Q v(num, den);
            v.canonicalize();
            c[i][j] = c[j][i] = v;
        }
    return c;
}

std::vector<AModule> nonprojective_strings(const FDAlgebra& a, int maxlen) {
    std::vector<AModule> out;
    for (const auto& s : enumerate_strings(a, maxlen)) {
        AModule m = string_module(a, s);
        m.name = format_string(a.quiver, s);
        if (!is_projective_module(a, m)) out.push_back(std::move(m));
    }
    return out;
}

void c10_properties(Collector& c, const AcceptanceOptions& opts) {
    std::vector<CatalogAlgebra> cats;
    for_each_family([&](const CatalogAlgebra& x) { cats.push_back(x); });
    for (const auto& x : {basic_R2delta(true), basic_R2delta(false), appendix_example(), wild_eRe(), linear_quiver(3)})
        cats.push_back(x);
    int radical_bad = 0;
    std::vector<std::string> bad_names;
    for (const auto& cat : cats) {
        try {
            FDAlgebra a = cat.algebra();
            auto j = jacobson_radical(a), r = arrow_ideal(a);
            std::vector<Vec> both = j;
            both.insert(both.end(), r.begin(), r.end());
            bool same = span_basis(both, a.dim()).size() == j.size() && j.size() == r.size();
            std::vector<Vec> pw = r;
            int steps = 0;
            while (!pw.empty() && steps <= a.dim()) {
                pw = ideal_product(a, pw, r);
                ++steps;
            }
            if (!same || !pw.empty()) {
                ++radical_bad;
                bad_names.push_back(cat.pres.name);
            }
        } catch (const std::exception& e) {
            ++radical_bad;
            bad_names.push_back(cat.pres.name + " (" + e.what() + ")");
        }
    }
    c.check("trace-form radical = nilpotent arrow ideal on " + std::to_string(cats.size()) + " catalog algebras",
            radical_bad == 0, join(bad_names, ", "));

    for (bool zero : {false, true}) {
        std::string label = std::string("basic algebra, lambda") + (zero ? "=0" : "!=0");
        c.guarded(label + " Ext/tau", [&] {
            FDAlgebra a = basic_R2delta(zero).algebra();
            auto ms = nonprojective_strings(a, 3);
            std::vector<AModule> targets = ms;
            for (int v = 0; v < a.nv(); ++v) targets.push_back(projective(a, v));
            int pairs = 0, bad = 0;
            for (const auto& m : ms)
                for (const auto& n : targets) {
                    ++pairs;
                    if (ext1_dim(a, m, n) != ext1_by_resolution(a, m, n)) ++bad;
                }
            c.check(label + ": Ext1 via syzygy = Ext1 via resolution (" + std::to_string(pairs) + " pairs)", bad == 0,
                    std::to_string(bad) + " mismatches");
            int tbad = 0;
            for (const auto& m : ms) {
                if (!is_isomorphic(a, ar_translate_inv(a, ar_translate(a, m)), m)) ++tbad;
                if (!is_isomorphic(a, ar_translate(a, ar_translate_inv(a, m)), m)) ++tbad;
            }
            c.check(label + ": tau tau^-1 = tau^-1 tau = id on " + std::to_string(ms.size()) + " string modules",
                    tbad == 0, std::to_string(tbad) + " mismatches");
        });
    }

    c.guarded("rescaling", [&] {
        std::mt19937_64 rng(opts.seed);
        std::vector<std::string> names = zoo_names();
        std::vector<Q> lams = with_lam({0, 1, -1, Q(2, 3)}, opts.lam);
        int bad = 0;
        std::vector<std::string> seen;
        for (int t = 0; t < 20; ++t) {
            std::string name = names[t % names.size()];
            Q l = lams[rng() % lams.size()];
            int ell = 1, i = 1;
            if (name == "L" || name == "S") {
                ell = 1 + static_cast<int>(rng() % 4);
                i = 1 + static_cast<int>(rng() % ell);
            }
            MatrixRep r = build_zoo(name, l, ell, i);
            auto sc = random_scaling(rng, r.ell);
            auto p = KLRPresentation::normalized(r.ell, r.n, r.lam);
            bool before = verify_rep(p, r).ok();
            bool after = verify_rep(rescale_presentation(p, sc), rescale_rep(r, sc)).ok();
            if (before != after) {
                ++bad;
                seen.push_back(r.name);
            }
        }
        c.check("verify_rep invariant under 20 random rescalings", bad == 0, join(seen, ", "));
    });

    int fock_bad = 0, fock_n = 0;
    for (int ell = 1; ell <= 3; ++ell) {
        CartanDatum cd(ell);
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : partitions(n))
                for (int i = 0; i <= ell; ++i) {
                    ++fock_n;
                    long lhs = static_cast<long>(fock_f(ell, i, p).size()) - static_cast<long>(fock_e(ell, i, p).size());
                    if (lhs != pair_h(cd, i, weight_of(p, ell))) ++fock_bad;
                }
    }
    c.check("#addable - #removable i-nodes = <h_i, wt> (" + std::to_string(fock_n) + " cases, size <= 8)", fock_bad == 0,
            std::to_string(fock_bad) + " mismatches");
}

bool selected(const std::string& only, const CriterionSummary& s) {
    if (only.empty()) return true;
    std::stringstream ss(only);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (tok == s.group || tok == "c" + std::to_string(s.criterion)) return true;
    return false;
}

}  // namespace

bool AcceptanceRun::all_pass() const {
    for (const auto& s : criteria)
        if (s.ran && !s.pass) return false;
    return true;
}

bool AcceptanceRun::only_known_failures() const {
    for (const auto& s : criteria)
        if (s.ran && s.pass == s.known_unattainable) return false;
    return true;
}

std::vector<CriterionSummary> acceptance_criteria() {
    return {
        {1, "dims", "Dimension formula: block sums and idempotent truncations", false, false, false},
        {2, "klr", "KLR algebras as quivers with relations", false, false, false},
        {3, "zoo", "Module zoo: relations and irreducibility", false, false, false},
        {4, "radical", "Radical series of T1, T1hat, V, U, O1hat", false, false, false},
        {5, "induction", "Induced modules Q0, Q1 of R(2delta), ell=1", false, false, false},
        {6, "catalog", "Two-point symmetric families and the stably biserial example", false, false, false},
        {7, "centers", "Centers of the basic algebras and of (2b), (4a), (4b)", false, false, true},
        {8, "tau", "tau on standard modules of the basic algebras and families", false, false, false},
        {9, "strings", "Bands, stable bricks, Ext table, s-projectives", false, false, true},
        {10, "properties", "Property suites", false, false, false},
    };
}

AcceptanceRun run_acceptance(const AcceptanceOptions& opts) {
    if (opts.lam == 0) throw std::invalid_argument("the generic lambda must be nonzero");
    AcceptanceRun run;
    run.lam = opts.lam;
    run.criteria = acceptance_criteria();
    auto t0 = Clock::now();
    for (auto& s : run.criteria) {
        if (!selected(opts.only, s)) continue;
        Collector col{run.checks, s.criterion};
        col.guarded(s.title, [&] {
            switch (s.criterion) {
                case 1: c1_dims(col); break;
                case 2: c2_klr(col, opts.lam); break;
                case 3: c3_zoo(col, opts.lam); break;
                case 4: c4_radical(col, opts.lam); break;
                case 5: c5_induction(col, opts.lam); break;
                case 6: c6_catalog(col); break;
                case 7: c7_centers(col); break;
                case 8: c8_tau(col); break;
                case 9: c9_strings(col); break;
                case 10:
                    c10_properties(col, opts);
                    if (opts.only.empty()) col.check("whole suite under 600 s", seconds_since(t0) < 600);
                    break;
            }
        });
        s.ran = true;
        s.pass = col.all;
    }
    return run;
}

std::string acceptance_markdown(const AcceptanceRun& run) {
    std::ostringstream os;
    os << "# Reproduction report\n\n";
    os << "generic lambda: " << to_string(run.lam) << "\n\n";
    os << "| # | statement | result |\n|---|---|---|\n";
    for (const auto& s : run.criteria) {
        if (!s.ran) continue;
        os << "| " << s.criterion << " | " << s.title << " | " << (s.pass ? "PASS" : "FAIL")
           << (!s.pass && s.known_unattainable ? " (known)" : "") << " |\n";
    }
    for (const auto& s : run.criteria) {
        if (!s.ran) continue;
        os << "\n## " << s.criterion << ". " << s.title << "\n\n";
        for (const auto& r : run.checks) {
            if (r.criterion != s.criterion) continue;
            os << "- " << (r.pass ? "PASS" : "FAIL") << " " << r.label;
            if (!r.detail.empty()) os << " (" << r.detail << ")";
            os << "\n";
        }
    }
    return os.str();
}

std::string acceptance_csv(const AcceptanceRun& run) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        return q + "\"";
    };
    std::ostringstream os;
    os << "criterion,result,label,detail\n";
    for (const auto& r : run.checks)
        os << r.criterion << "," << (r.pass ? "PASS" : "FAIL") << "," << quote(r.label) << "," << quote(r.detail) << "\n";
    return os.str();
}

}  // namespace klrwb
