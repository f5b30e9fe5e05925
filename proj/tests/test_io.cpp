#include "klrwb/catalog.hpp"
#include "klrwb/io.hpp"

#include <doctest.h>

using namespace klrwb;

TEST_SUITE("io") {
    TEST_CASE("matrix representations round-trip") {
        for (const Q& lam : {Q(0), Q(1), Q(-2, 3)})
            for (const auto& name : zoo_names()) {
                MatrixRep r = (name == "L" || name == "S") ? build_zoo(name, lam, 3, 2) : build_zoo(name, lam);
                Json j = rep_to_json(r);
                CHECK(j.contains("idempotents"));
                MatrixRep back = rep_from_json(Json::parse(j.dump()));
                CHECK(back.dim == r.dim);
                CHECK(back.e == r.e);
                CHECK(back.x == r.x);
                CHECK(back.psi == r.psi);
                CHECK(back.lam == r.lam);
            }
    }

    TEST_CASE("non-diagonal idempotents are written as matrices") {
        MatrixRep r = build_M0(1);
        REQUIRE(r.dim == 2);
        Mat p(2, 2);
        p(0, 0) = 1;
        p(0, 1) = 1;
        r.e.begin()->second = p;
        Json j = rep_to_json(r);
        CHECK(j.contains("e"));
        CHECK(rep_from_json(j).e == r.e);
    }

    TEST_CASE("malformed representations") {
        Json j = rep_to_json(build_M0(1));
        Json bad = j;
        bad["x"].erase(0);
        CHECK_THROWS_AS(rep_from_json(bad), FormatError);
        bad = j;
        bad.erase("dim");
        CHECK_THROWS_AS(rep_from_json(bad), FormatError);
        bad = j;
        bad["lambda"] = 1.5;
        CHECK_THROWS_AS(rep_from_json(bad), FormatError);
    }

    TEST_CASE("presentations round-trip") {
        for (const auto& c : {family_2a(2, 2), appendix_example(), basic_R2delta(false), wild_eRe()}) {
            Json j = presentation_to_json(c.pres, c.trace);
            PresentationFile f = presentation_from_json(Json::parse(j.dump()));
            FDAlgebra a = normalize(f.pres), b = c.algebra();
            CHECK(a.dim() == b.dim());
            CHECK(cartan_matrix_of(a) == cartan_matrix_of(b));
            CHECK(trace_from_paths(a, f.trace) == c.trace_form(b));
        }
    }

    TEST_CASE("modules round-trip") {
        FDAlgebra a = basic_R2delta(false).algebra();
        AModule m = projective(a, 0);
        AModule back = module_from_json(a, module_to_json(a, m));
        CHECK(back.dim == m.dim);
        CHECK(back.vert == m.vert);
        CHECK(back.arrows == m.arrows);
    }

    TEST_CASE("rationals") {
        CHECK(parse_rational("-3/6") == Q(-1, 2));
        CHECK(to_string(Q(4) / 2) == "2");
        CHECK_THROWS(parse_rational("1/0"));
        CHECK_THROWS(parse_rational("x"));
    }
}
