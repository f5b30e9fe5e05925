#include "generators.hpp"
#include "klrwb/cartan.hpp"
#include "klrwb/io.hpp"

#include <doctest.h>

using namespace klrwb;

TEST_SUITE("cartan") {
    TEST_CASE("cartan matrices") {
        CHECK(cartan_matrix(1) == IntMatrix{{2, -2}, {-2, 2}});
        CHECK(cartan_matrix(2) == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
        CHECK(cartan_matrix(3)[0][3] == -1);
        CHECK_THROWS_AS(cartan_matrix(0), InvalidRank);
        for (int ell = 1; ell <= 6; ++ell) {
            auto a = cartan_matrix(ell);
            for (int i = 0; i <= ell; ++i) {
                int row = 0;
                CHECK(a[i][i] == 2);
                for (int j = 0; j <= ell; ++j) {
                    CHECK(a[i][j] == a[j][i]);
                    row += a[i][j];
                    bool adjacent = (j == (i + 1) % (ell + 1)) || (i == (j + 1) % (ell + 1));
                    if (ell >= 2 && i != j) CHECK(a[i][j] == (adjacent ? -1 : 0));
                }
                CHECK(row == 0);
            }
        }
    }

    TEST_CASE("pairings") {
        CartanDatum c1(1);
        CHECK(pair_h(c1, 0, lambda0(1)) == 1);
        CHECK(pair_h(c1, 1, lambda0(1)) == 0);
        for (int ell = 1; ell <= 4; ++ell) {
            CartanDatum c(ell);
            for (int i = 0; i <= ell; ++i) CHECK(pair_h(c, i, null_root(ell)) == 0);
        }
        // <h1, L0 - 2delta + alpha0> = 0 - 0 + a10 = -2, expanded by hand
        Weight w = lambda0(1) - null_root(1).scaled(2) + simple_root(1, 0);
        CHECK(pair_h(c1, 1, w) == -2);
        CHECK(pair_d(simple_root(1, 0)) == 1);
        CHECK(pair_d(simple_root(1, 1)) == 0);
        CHECK_THROWS_AS(pair_h(c1, 2, w), std::out_of_range);
    }

    TEST_CASE("reflections") {
        CartanDatum c1(1);
        Weight target = lambda0(1) - null_root(1).scaled(2) + simple_root(1, 0);
        CHECK(apply_word(c1, {0, 1}, lambda0(1)) == target);
        for (int ell = 2; ell <= 5; ++ell) {
            CartanDatum c(ell);
            std::vector<int> w;
            for (int i = 0; i < ell; ++i) w.push_back(i);
            CHECK(apply_word(c, w, lambda0(ell)) == lambda0(ell) - null_root(ell) + simple_root(ell, ell));
            for (int i = 0; i <= ell; ++i) CHECK(simple_reflection(c, i, null_root(ell)) == null_root(ell));
        }
        CHECK_THROWS_AS(simple_reflection(c1, -1, target), std::out_of_range);
    }

    TEST_CASE("reflection properties on random weights") {
        for (int trial = 0; trial < 200; ++trial) {
            int ell = static_cast<int>(gen::range(1, 4));
            CartanDatum c(ell);
            Weight w = gen::weight(ell);
            int i = static_cast<int>(gen::range(0, ell)), j = static_cast<int>(gen::range(0, ell));
            CHECK(simple_reflection(c, i, simple_reflection(c, i, w)) == w);
            // <h_i, r_j w> = <h_i, w> - <h_j, w> a_ij
            CHECK(pair_h(c, i, simple_reflection(c, j, w)) == pair_h(c, i, w) - pair_h(c, j, w) * c.a[i][j]);
        }
    }

    TEST_CASE("orbit search") {
        CartanDatum c1(1);
        auto w0 = orbit_search(c1, lambda0(1));
        REQUIRE(w0);
        CHECK(w0->word.empty());
        CHECK(w0->k == 0);
        auto w1 = orbit_search(c1, lambda0(1) - null_root(1).scaled(2) + simple_root(1, 0));
        REQUIRE(w1);
        CHECK(w1->word == std::vector<int>{0, 1});
        CHECK(w1->k == 0);
        auto w2 = orbit_search(c1, lambda0(1) - null_root(1).scaled(2));
        REQUIRE(w2);
        CHECK(w2->word.empty());
        CHECK(w2->k == 2);
        CHECK_FALSE(orbit_search(c1, lambda0(1) - simple_root(1, 1)));
        CHECK_THROWS(orbit_search(c1, lambda0(1), -1));
    }

    TEST_CASE("orbit search witnesses reproduce mu") {
        for (int trial = 0; trial < 60; ++trial) {
            int ell = static_cast<int>(gen::range(1, 3));
            CartanDatum c(ell);
            auto word = gen::word(ell, 6);
            long k = gen::range(0, 3);
            Weight mu = apply_word(c, word, lambda0(ell)) - null_root(ell).scaled(k);
            auto w = orbit_search(c, mu);
            REQUIRE(w);
            CHECK(apply_word(c, w->word, lambda0(ell)) - null_root(ell).scaled(w->k) == mu);
        }
    }

    TEST_CASE("weight json") {
        Weight w = lambda0(2) - null_root(2);
        CHECK(weight_to_json(w).dump() == R"({"level":1,"alpha":[-1,-1,-1]})");
        CHECK(weight_from_json(weight_to_json(w)) == w);
    }
}
