#include "klrwb/catalog.hpp"
#include "klrwb/klr_path.hpp"
#include "klrwb/module.hpp"
#include "klrwb/oracle.hpp"
#include "klrwb/path_algebra.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

using namespace klrwb;

namespace {

void each_family(const std::function<void(const CatalogAlgebra&)>& fn) {
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

Presentation semisimple2() {
    Presentation p;
    p.name = "k x k";
    p.quiver.add_vertex("0");
    p.quiver.add_vertex("1");
    return p;
}

std::set<std::string> basis_names(const FDAlgebra& a) {
    std::set<std::string> s;
    for (int i = 0; i < a.dim(); ++i) s.insert(a.basis_name(i));
    return s;
}

}  // namespace

TEST_SUITE("path_algebra") {
    TEST_CASE("paths parse and compose") {
        Quiver q = appendix_example().pres.quiver;
        Path p = parse_path(q, "alpha beta");
        CHECK(p.src == q.vertex_index("1"));
        CHECK(p.tgt == q.vertex_index("1"));
        CHECK(format_path(q, p) == "alpha beta");
        CHECK(parse_path(q, "e1").trivial());
        CHECK_THROWS(parse_path(q, "alpha alpha"));
        CHECK_THROWS(concat(parse_path(q, "alpha"), parse_path(q, "gamma")));
        CHECK(concat(parse_path(q, "gamma"), parse_path(q, "alpha")) == parse_path(q, "gamma alpha"));
    }

    TEST_CASE("normal forms and dimensions") {
        CHECK(normalize(semisimple2()).dim() == 2);
        Presentation one;
        one.quiver.add_vertex("0");
        CHECK(normalize(one).dim() == 1);

        FDAlgebra a22 = family_2a(2, 2).algebra();
        CHECK(a22.dim() == 11);
        CHECK(brute_force_dims(family_2a(2, 2).pres).total == 11);
        CHECK(cartan_matrix_of(a22) == std::vector<std::vector<int>>{{4, 2}, {2, 3}});

        FDAlgebra app = appendix_example().algebra();
        CHECK(app.dim() == 10);
        CHECK(basis_names(app) == std::set<std::string>{"e1", "e2", "alpha", "beta", "gamma", "alpha beta", "beta alpha",
                                                        "gamma gamma", "gamma alpha", "beta gamma"});
    }

    TEST_CASE("(2a) p=q=2 has dimension 12 as listed" * doctest::should_fail()) {
        CHECK(family_2a(2, 2).algebra().dim() == 12);
    }

    TEST_CASE("rewriting agrees with the brute-force oracle on every family") {
        each_family([](const CatalogAlgebra& c) {
            FDAlgebra a = c.algebra();
            auto o = brute_force_dims(c.pres);
            CAPTURE(c.pres.name);
            CHECK(o.total == a.dim());
            auto cm = cartan_matrix_of(a);
            for (const auto& [st, d] : o.block) CHECK(cm[st.first][st.second] == d);
        });
        for (const auto& c : {basic_R2delta(true), basic_R2delta(false), appendix_example(), linear_quiver(4)})
            CHECK(brute_force_dims(c.pres).total == c.algebra().dim());
    }

    TEST_CASE("horizon and admissibility guards") {
        Presentation p;
        p.quiver.add_vertex("0");
        p.quiver.add_arrow("x", 0, 0);
        p.max_len = 8;
        CHECK_THROWS_AS(normalize(p), HorizonExceeded);
        p.zero("x x x");
        CHECK(normalize(p).dim() == 3);

        Presentation bad;
        bad.quiver.add_vertex("0");
        bad.quiver.add_arrow("x", 0, 0);
        bad.relate({{Q(1), "x"}, {Q(-1), "x x"}});
        CHECK_THROWS_AS(check_relations(bad), InadmissibleRelation);
    }

    TEST_CASE("symmetric algebras") {
        FDAlgebra a = family_2a(2, 2).algebra();
        auto t = family_2a(2, 2).trace_form(a);
        CHECK(check_trace_form(a, t));
        CHECK(is_symmetric(a, t).has_value());
        FDAlgebra app = appendix_example().algebra();
        CHECK(is_symmetric(app, appendix_example().trace_form(app)).has_value());
        CHECK(is_symmetric(app).has_value());
        FDAlgebra lin = linear_quiver(2).algebra();
        CHECK_FALSE(is_self_injective(lin));
        CHECK_FALSE(is_symmetric(lin).has_value());
        CHECK(is_symmetric(normalize(catalog("4a", {1, 2, 2}).pres)).has_value());
    }

    TEST_CASE("every family is symmetric with its listed trace and self-injective") {
        each_family([](const CatalogAlgebra& c) {
            FDAlgebra a = c.algebra();
            std::string why;
            CAPTURE(c.pres.name);
            CHECK(check_trace_form(a, c.trace_form(a), &why));
            CHECK(is_self_injective(a));
        });
    }

    TEST_CASE("biserial tests") {
        CHECK(is_special_biserial(basic_R2delta(false).algebra()).ok);
        CHECK(is_special_biserial(basic_R2delta(true).algebra()).ok);
        FDAlgebra app = appendix_example().algebra();
        auto sb = is_special_biserial(app);
        CHECK_FALSE(sb.ok);
        CHECK_FALSE(sb.witnesses.empty());
        CHECK(is_stably_biserial(app).ok);
        CHECK(is_special_biserial(family_4c(1).algebra()).ok);
    }

    TEST_CASE("centers") {
        CHECK(center(basic_R2delta(true).algebra()).size() == 5);
        CHECK(center(basic_R2delta(false).algebra()).size() == 5);
        FDAlgebra a = family_4a(2, 2, 2).algebra();
        auto z = center(a);
        CHECK(z.size() == 6);
        Vec ab = a.element("alpha beta"), ba = a.element("beta alpha"), s(a.dim());
        for (int i = 0; i < a.dim(); ++i) s[i] = ab[i] + ba[i];
        for (const Vec& v : {a.one(), s, a.element("gamma"), a.element("gamma gamma"), a.element("delta"),
                             a.element("delta delta")})
            CHECK(in_span(z, v));
        CHECK(center(family_2b(1).algebra()).size() == 4);
    }

    // rotation sums (abc)^k + (bca)^k + (cab)^k, 1 <= k < m, are central as well
    TEST_CASE("center of (2b) has dimension 4 for m >= 2 as listed" * doctest::should_fail()) {
        CHECK(center(family_2b(2).algebra()).size() == 4);
        CHECK(center(family_2b(3).algebra()).size() == 4);
    }

    TEST_CASE("center of (2b) grows with m") {
        for (int m = 1; m <= 3; ++m) CHECK(static_cast<int>(center(family_2b(m).algebra()).size()) == m + 3);
    }

    TEST_CASE("radical equals the arrow ideal and is nilpotent") {
        auto check = [](const CatalogAlgebra& c) {
            FDAlgebra a = c.algebra();
            auto j = jacobson_radical(a), r = arrow_ideal(a);
            CAPTURE(c.pres.name);
            CHECK(j.size() == r.size());
            for (const auto& v : r) CHECK(in_span(j, v));
            auto pw = r;
            for (int k = 0; k <= a.dim() && !pw.empty(); ++k) pw = ideal_product(a, pw, r);
            CHECK(pw.empty());
            // socle of a self-injective basic algebra has one dimension per vertex
            if (is_self_injective(a)) CHECK(static_cast<int>(socle_algebra(a).size()) == a.nv());
        };
        each_family(check);
        check(appendix_example());
        check(linear_quiver(3));
    }

    TEST_CASE("projective modules and their layers") {
        FDAlgebra a = basic_R2delta(false).algebra();
        AModule p0 = projective(a, 0);
        CHECK(p0.dim == 5);
        CHECK(radical_layers_mod(a, p0) ==
              std::vector<std::vector<int>>{{1, 0}, {0, 1}, {1, 0}, {0, 1}, {1, 0}});
        AModule s1 = simple_module(a, 1);
        CHECK(radical_layers_mod(a, s1) == std::vector<std::vector<int>>{{0, 1}});
        CHECK(top(a, p0).dim == 1);
        CHECK(socle(a, p0).dim == 1);
        each_family([](const CatalogAlgebra& c) {
            FDAlgebra a = c.algebra();
            auto cm = cartan_matrix_of(a);
            for (int v = 0; v < a.nv(); ++v) {
                AModule p = projective(a, v);
                CHECK(module_defect(a, p).empty());
                CHECK(p.dim == cm[0][v] + cm[1][v]);
                CHECK(is_projective_module(a, p));
                CHECK(is_indecomposable(a, p));
                // Hom(P_v, M) = e_v M
                AModule m = simple_module(a, v);
                CHECK(hom_space(a, p, m).size() == 1);
                CHECK(hom_space(a, p, simple_module(a, 1 - v)).empty());
            }
        });
    }

    TEST_CASE("KLR block delta for ell = 2") {
        auto k = klr_algebra(2, 3, 1, {1, 1, 1});
        CHECK(idempotent_dim(k, {0, 1, 2}, {0, 1, 2}) == 2);
        CHECK(idempotent_dim(k, {0, 2, 1}, {0, 2, 1}) == 2);
        CHECK(idempotent_dim(k, {0, 1, 2}, {0, 2, 1}) == 1);
        CHECK(idempotent_dim(k, {0, 2, 1}, {0, 1, 2}) == 1);
        int v = k.q.vertex_of({0, 1, 2});
        REQUIRE(v >= 0);
        AModule p = projective(k.a, v);
        auto dv = p.dim_vector(k.a.nv());
        CHECK(dv[v] == 2);
        CHECK(dv[k.q.vertex_of({0, 2, 1})] == 1);
    }

    TEST_CASE("Gabriel quiver and wild configurations") {
        Quiver q = quiver_of_algebra(basic_R2delta(true).algebra());
        CHECK(q.nv() == 2);
        CHECK(q.na() == 4);
        int loops = 0;
        for (const auto& a : q.arrows) loops += a.src == a.tgt;
        CHECK(loops == 2);
        auto w = wild_configuration_witness(wild_eRe().pres.quiver);
        REQUIRE(w);
        CHECK(w->loops.size() >= 2);
        CHECK_FALSE(wild_configuration_witness(linear_quiver(2).pres.quiver));
        CHECK_FALSE(wild_configuration_witness(quiver_of_algebra(basic_R2delta(false).algebra())));
    }

    TEST_CASE("AR translates") {
        FDAlgebra a = basic_R2delta(false).algebra();
        AModule e1a = cyclic_quotient(a, 1, {a.element("alpha")}), e0b = cyclic_quotient(a, 0, {a.element("beta")});
        CHECK(is_isomorphic(a, ar_translate(a, e1a), e0b));
        CHECK(is_isomorphic(a, ar_translate(a, e0b), e1a));
        for (const auto& exps : {std::vector<int>{2, 2}, std::vector<int>{2, 3}, std::vector<int>{3, 1}}) {
            FDAlgebra b = catalog("2a", exps).algebra();
            AModule x = cyclic_quotient(b, 0, {b.element("gamma")});
            AModule p1 = projective(b, 1);
            AModule y = quotient(b, p1, module_socle(b, p1));
            CHECK(is_isomorphic(b, ar_translate(b, x), y));
            CHECK(is_isomorphic(b, ar_translate_inv(b, y), x));
        }
    }

    TEST_CASE("Ext over a semisimple algebra vanishes") {
        FDAlgebra a = normalize(semisimple2());
        for (int v = 0; v < 2; ++v) {
            AModule s = simple_module(a, v);
            CHECK(is_projective_module(a, s));
            CHECK(ext1_dim(a, s, s) == 0);
            CHECK(ext1_by_resolution(a, s, s) == 0);
        }
    }

    TEST_CASE("syzygies and covers") {
        each_family([](const CatalogAlgebra& c) {
            FDAlgebra a = c.algebra();
            for (int v = 0; v < a.nv(); ++v) {
                AModule s = simple_module(a, v);
                auto pc = projective_cover(a, s);
                AModule om = syzygy(a, s);
                CHECK(pc.tops == std::vector<int>{v});
                CHECK(om.dim == pc.cover.dim - 1);
                CHECK(is_isomorphic(a, om, radical(a, projective(a, v))));
                // Ext^1(S_v, S_w) counts arrows w -> v
                for (int w = 0; w < a.nv(); ++w) {
                    int arrows = 0;
                    for (const auto& ar : a.quiver.arrows) arrows += ar.src == w && ar.tgt == v;
                    CAPTURE(c.pres.name);
                    CHECK(ext1_dim(a, s, simple_module(a, w)) == arrows);
                }
            }
        });
    }

    TEST_CASE("opposite algebra") {
        FDAlgebra a = appendix_example().algebra();
        FDAlgebra o = a.opposite();
        CHECK(o.dim() == a.dim());
        CHECK(o.opposite().table == a.table);
    }
}
