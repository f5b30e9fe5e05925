#include "klrwb/catalog.hpp"
#include "klrwb/io.hpp"
#include "klrwb/module.hpp"
#include "klrwb/string_ar.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace klrwb;

namespace {

struct Basic {
    FDAlgebra a = basic_R2delta(false).algebra();
    StringWord w(const std::string& s) const { return parse_string(a.quiver, s); }
    AModule m(const std::string& s) const { return string_module(a, w(s)); }
};

std::pair<StringWord, StringWord> unordered(const Quiver& q, const StringWord& x, const StringWord& y) {
    StringWord a = canonical_string(q, x), b = canonical_string(q, y);
    if (b < a) std::swap(a, b);
    return {a, b};
}

std::set<std::pair<StringWord, StringWord>> sosb_set(const Basic& b, int maxlen) {
    std::set<std::pair<StringWord, StringWord>> s;
    for (const auto& p : sosb_pairs(b.a, maxlen)) s.insert(unordered(b.a.quiver, p.x0, p.x1));
    return s;
}

std::set<std::pair<StringWord, StringWord>> expected_pairs(const Basic& b) {
    std::set<std::pair<StringWord, StringWord>> s;
    for (auto [x, y] : {std::pair{"e0", "e1"}, std::pair{"beta", "alpha beta alpha"}, std::pair{"beta alpha beta", "alpha"},
                        std::pair{"beta alpha beta", "alpha beta alpha"}})
        s.insert(unordered(b.a.quiver, b.w(x), b.w(y)));
    return s;
}

FDAlgebra semisimple() {
    Presentation p;
    p.quiver.add_vertex("0");
    p.quiver.add_vertex("1");
    return normalize(p);
}

}  // namespace

TEST_SUITE("string_ar") {
    TEST_CASE("string syntax") {
        Basic b;
        StringWord s = b.w("beta alpha ~gamma");
        CHECK(s.length() == 3);
        CHECK(s.letters[2].inverse);
        CHECK(format_string(b.a.quiver, s) == "beta alpha ~gamma");
        CHECK(format_string(b.a.quiver, b.w("e0")) == "e0");
        CHECK(string_end(b.a.quiver, s) == s.start);
        CHECK(inverse_string(b.a.quiver, inverse_string(b.a.quiver, s)) == s);
        CHECK(string_from_json(b.a.quiver, string_to_json(b.a.quiver, s)) == s);
        CHECK(string_to_json(b.a.quiver, s).dump() == R"(["beta","alpha","~gamma"])");
        CHECK_THROWS(parse_string(b.a.quiver, "beta nope"));
    }

    TEST_CASE("bands") {
        Basic b;
        auto bands = enumerate_bands(b.a, 3);
        REQUIRE(bands.size() == 1);
        CHECK(bands[0] == canonical_band(b.a.quiver, b.w("beta alpha ~gamma")));
        CHECK(enumerate_bands(b.a, 6).size() == 1);
        StringRules rules(b.a);
        CHECK(rules.is_band(b.w("beta alpha ~gamma")));
        CHECK_FALSE(rules.is_band(b.w("beta alpha")));
    }

    TEST_CASE("composite-letter bands at lambda = 0") {
        FDAlgebra z = basic_R2delta(true).algebra();
        auto x = parse_string(z.quiver, "alpha ~delta beta ~gamma"), y = parse_string(z.quiver, "alpha ~delta beta");
        CHECK(composite_bands(z, x, y, 2).size() == 1);
        CHECK(composite_bands(z, x, y, 3).size() == 2);
        CHECK(composite_bands(z, x, y, 5).size() == 6);
        CHECK_THROWS(composite_bands(z, x, y, 0));
    }

    TEST_CASE("strings and string modules") {
        Basic b;
        auto strings = enumerate_strings(b.a, 4);
        int trivial = 0;
        for (const auto& s : strings) {
            trivial += s.length() == 0;
            CHECK(s == canonical_string(b.a.quiver, s));
            AModule m = string_module(b.a, s);
            CHECK(module_defect(b.a, m).empty());
            CHECK(m.dim == s.length() + 1);
            CHECK(is_indecomposable(b.a, m));
            CHECK(is_isomorphic(b.a, m, string_module(b.a, inverse_string(b.a.quiver, s))));
        }
        CHECK(trivial == 2);
        CHECK(is_isomorphic(b.a, b.m("e0"), simple_module(b.a, 0)));
        CHECK(b.m("beta alpha ~gamma").dim == 4);
        CHECK_THROWS(string_module(b.a, b.w("alpha gamma")));
    }

    TEST_CASE("M(alpha) has top S1 and socle S0") {
        Basic b;
        AModule m = b.m("alpha");
        CHECK(is_isomorphic(b.a, top(b.a, m), simple_module(b.a, 1)));
        CHECK(is_isomorphic(b.a, socle(b.a, m), simple_module(b.a, 0)));
    }

    TEST_CASE("M(alpha) has top S0 as listed" * doctest::should_fail()) {
        Basic b;
        CHECK(is_isomorphic(b.a, top(b.a, b.m("alpha")), simple_module(b.a, 0)));
    }

    TEST_CASE("special biserial input is required") {
        FDAlgebra app = appendix_example().algebra();
        CHECK_THROWS_AS(StringRules{app}, NotSpecialBiserial);
        CHECK_THROWS_AS(enumerate_strings(app, 2), NotSpecialBiserial);
    }

    TEST_CASE("stable bricks") {
        Basic b;
        CHECK(is_stable_brick(b.a, simple_module(b.a, 0)));
        CHECK(is_stable_brick(b.a, simple_module(b.a, 1)));
        CHECK(is_stable_brick(b.a, b.m("beta")));
        CHECK(is_stable_brick(b.a, b.m("alpha beta alpha")));
        // z2 -> z0 factors through P0 -> P0 / Rad^3 P0, so it vanishes stably
        CHECK(is_stable_brick(b.a, b.m("alpha beta")));
        CHECK(is_stable_brick(b.a, b.m("gamma")));
        CHECK_THROWS(is_stable_brick(b.a, projective(b.a, 0)));
    }

    TEST_CASE("M(alpha beta) and M(gamma) are not stable bricks as listed" * doctest::should_fail()) {
        Basic b;
        CHECK_FALSE(is_stable_brick(b.a, b.m("alpha beta")));
        CHECK_FALSE(is_stable_brick(b.a, b.m("gamma")));
    }

    TEST_CASE("stably orthogonal pairs") {
        Basic b;
        auto got = sosb_set(b, 4), want = expected_pairs(b);
        CHECK(std::includes(got.begin(), got.end(), want.begin(), want.end()));
        CHECK(got.size() == 18);
        for (const auto& [x, y] : got) {
            AModule mx = string_module(b.a, x), my = string_module(b.a, y);
            CHECK(stable_hom_dim(b.a, mx, my) == 0);
            CHECK(stable_hom_dim(b.a, my, mx) == 0);
        }
        CHECK(sosb_pairs(semisimple(), 2).empty());
    }

    TEST_CASE("exactly the four quoted pairs at maxlen 4" * doctest::should_fail()) {
        Basic b;
        CHECK(sosb_set(b, 4) == expected_pairs(b));
    }

    TEST_CASE("over a semisimple algebra the simples form the only pair" * doctest::should_fail()) {
        CHECK(sosb_pairs(semisimple(), 2).size() == 1);
    }

    TEST_CASE("Ext table") {
        Basic b;
        auto ext = [&](const std::string& x, const std::string& y) { return ext1_dim(b.a, b.m(x), b.m(y)); };
        CHECK(ext("e0", "e0") == 0);
        CHECK(ext("e1", "e1") == 1);
        CHECK(ext("e0", "e1") == 1);
        CHECK(ext("e1", "e0") == 1);
        CHECK(ext("beta", "beta") == 1);
        CHECK(ext("alpha beta alpha", "alpha beta alpha") == 0);
        CHECK(ext("beta", "alpha beta alpha") == 1);
        CHECK(ext("alpha beta alpha", "beta") == 1);
        CHECK(ext("beta alpha beta", "alpha") == 1);
        CHECK(ext("beta alpha beta", "beta alpha beta") == 0);
        // gamma -> socle gives a second map Omega M(alpha) -> M(beta alpha beta)
        CHECK(ext("alpha", "beta alpha beta") == 1);
    }

    TEST_CASE("Ext^1(M(alpha), M(beta alpha beta)) = 0 as listed" * doctest::should_fail()) {
        Basic b;
        CHECK(ext1_dim(b.a, b.m("alpha"), b.m("beta alpha beta")) == 0);
    }

    TEST_CASE("s-projectives") {
        Basic b;
        CHECK(is_isomorphic(b.a, s_projective(b.a, b.m("beta")), b.m("beta alpha ~gamma")));
        CHECK(is_isomorphic(b.a, s_projective(b.a, b.m("alpha beta alpha")), simple_module(b.a, 0)));
        CHECK(is_isomorphic(b.a, s_projective(b.a, b.m("alpha")), b.m("alpha beta")));
        CHECK(is_isomorphic(b.a, s_projective(b.a, b.m("beta alpha beta")), b.m("gamma")));
        CHECK_THROWS(s_projective(b.a, projective(b.a, 1)));
        FDAlgebra ss = semisimple();
        CHECK_THROWS(s_projective(ss, simple_module(ss, 0)));
    }

    TEST_CASE("s-projectives of M(alpha), M(beta alpha beta) as listed" * doctest::should_fail()) {
        Basic b;
        CHECK(is_isomorphic(b.a, s_projective(b.a, b.m("alpha")), b.m("beta alpha ~gamma")));
        CHECK(is_isomorphic(b.a, s_projective(b.a, b.m("beta alpha beta")), simple_module(b.a, 0)));
    }

    TEST_CASE("stable Hom against the s.o.s.b.") {
        Basic b;
        AModule x0 = b.m("beta"), x1 = b.m("alpha beta alpha");
        for (auto [s, w0, w1] : {std::tuple{"beta", 1, 0}, std::tuple{"alpha beta alpha ~gamma", 0, 1},
                                 std::tuple{"~beta gamma", 1, 0}}) {
            AModule n = b.m(s);
            CAPTURE(s);
            CHECK(stable_hom_dim(b.a, n, x0) == w0);
            CHECK(stable_hom_dim(b.a, x0, n) == w0);
            CHECK(stable_hom_dim(b.a, n, x1) == w1);
            CHECK(stable_hom_dim(b.a, x1, n) == w1);
        }
    }

    TEST_CASE("factoring through projectives") {
        Basic b;
        AModule mb = b.m("beta"), band = b.m("beta alpha ~gamma");
        CHECK(factors_through_projective(b.a, mb, band, Mat(band.dim, mb.dim)));
        CHECK_FALSE(factors_through_projective(b.a, mb, mb, Mat::identity(mb.dim)));
        auto fs = hom_space(b.a, mb, band), gs = hom_space(b.a, band, mb);
        REQUIRE_FALSE(fs.empty());
        REQUIRE_FALSE(gs.empty());
        for (const auto& f : fs)
            for (const auto& g : gs) CHECK(factors_through_projective(b.a, mb, mb, g * f));
        AModule p = projective(b.a, 0);
        CHECK(factors_through_projective(b.a, p, p, Mat::identity(p.dim)));
    }

    TEST_CASE("band modules are tau-periodic of period one") {
        Basic b;
        StringWord w = b.w("beta alpha ~gamma");
        for (const Q& t : {Q(1), Q(-1), Q(2), Q(1, 3)}) {
            AModule m = band_module(b.a, w, t);
            CHECK(module_defect(b.a, m).empty());
            CHECK(is_indecomposable(b.a, m));
            CHECK(is_isomorphic(b.a, ar_translate(b.a, m), m));
        }
        CHECK_FALSE(is_isomorphic(b.a, band_module(b.a, w, 1), band_module(b.a, w, 2)));
        CHECK_THROWS(band_module(b.a, w, 0));
    }

    TEST_CASE("Auslander-Reiten formula on short strings") {
        for (bool zero : {false, true}) {
            FDAlgebra a = basic_R2delta(zero).algebra();
            std::vector<AModule> ms;
            for (const auto& s : enumerate_strings(a, 2)) {
                AModule m = string_module(a, s);
                if (!is_projective_module(a, m)) ms.push_back(m);
            }
            for (const auto& m : ms) {
                AModule tm = ar_translate(a, m);
                CHECK(is_isomorphic(a, ar_translate_inv(a, tm), m));
                for (const auto& n : ms) CHECK(ext1_dim(a, m, n) == stable_hom_dim(a, n, tm));
            }
        }
    }
}
