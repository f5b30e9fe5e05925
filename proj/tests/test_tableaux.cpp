#include "generators.hpp"
#include "klrwb/tableaux.hpp"

#include <doctest.h>

#include <map>

using namespace klrwb;

namespace {

// hook-length formula, independent of the enumeration
std::uint64_t hook_count(const Partition& p) {
    int n = size_of(p);
    std::vector<int> conj(p.empty() ? 0 : p[0], 0);
    for (int r : p)
        for (int c = 0; c < r; ++c) ++conj[c];
    // n! / prod hooks, accumulated as a fraction to stay exact
    Q v = 1;
    for (int k = 2; k <= n; ++k) v *= k;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) v /= (p[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
    return v.get_num().get_ui();
}

std::uint64_t binom(int n, int k) {
    std::uint64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace

TEST_SUITE("tableaux") {
    TEST_CASE("residues") {
        CHECK(residue(3, 3, 1) == 2);
        CHECK(residue(1, 2, 1) == 1);
        CHECK(residue(3, 1, 10) == 1);
        CHECK(residue(2, 1, 1) == 0);
    }

    TEST_CASE("standard tableaux") {
        CHECK(standard_tableaux({2, 1}).size() == 2);
        for (int n = 1; n <= 6; ++n) CHECK(standard_tableaux({n}).size() == 1);
        for (int ell = 1; ell <= 6; ++ell)
            for (int i = 1; i <= ell; ++i) {
                Partition hook{i};
                for (int r = 0; r < ell - i; ++r) hook.push_back(1);
                CHECK(standard_tableaux(hook).size() == binom(ell - 1, i - 1));
            }
    }

    TEST_CASE("tableau count equals the hook length formula") {
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : partitions(n)) {
                auto tabs = standard_tableaux(p);
                CHECK(tabs.size() == hook_count(p));
                CHECK(count_standard_tableaux(p) == hook_count(p));
                // rows and columns increase, each entry once
                for (const auto& t : tabs) {
                    std::vector<int> seen(n + 1, 0);
                    for (size_t r = 0; r < t.rows.size(); ++r)
                        for (size_t c = 0; c < t.rows[r].size(); ++c) {
                            ++seen[t.rows[r][c]];
                            if (c) CHECK(t.rows[r][c - 1] < t.rows[r][c]);
                            if (r) CHECK(t.rows[r - 1][c] < t.rows[r][c]);
                        }
                    for (int k = 1; k <= n; ++k) CHECK(seen[k] == 1);
                }
            }
    }

    TEST_CASE("partitions are listed in decreasing lexicographic order") {
        auto ps = partitions(5);
        CHECK(ps.size() == 7);
        CHECK(ps.front() == Partition{5});
        CHECK(ps.back() == Partition{1, 1, 1, 1, 1});
        for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]);
    }

    TEST_CASE("K numbers") {
        CHECK(k_number(1, {2, 1}, {0, 1, 1}) == 2);
        CHECK(k_number(1, {2, 1}, {0, 0, 1}) == 0);
        CHECK(k_number(2, {3}, {0, 1, 2}) == 1);
        CHECK_THROWS(k_number(1, {2, 1}, {0, 1}));
    }

    TEST_CASE("K numbers sum to the tableau count") {
        for (int ell = 1; ell <= 3; ++ell)
            for (int n = 1; n <= 6; ++n)
                for (const auto& p : partitions(n)) {
                    std::map<ResidueSeq, long> k;
                    for (const auto& t : standard_tableaux(p)) ++k[residue_sequence(ell, t)];
                    long total = 0;
                    for (const auto& [nu, cnt] : k) {
                        CHECK(k_number(ell, p, nu) == cnt);
                        CHECK(cnt <= static_cast<long>(count_standard_tableaux(p)));
                        total += cnt;
                    }
                    CHECK(total == static_cast<long>(count_standard_tableaux(p)));
                }
    }

    TEST_CASE("weights of diagrams") {
        CHECK(weight_of({}, 1) == lambda0(1));
        CHECK(weight_of({2, 1}, 1) == lambda0(1) - simple_root(1, 0) - simple_root(1, 1).scaled(2));
        CHECK(weight_of({2, 2}, 1) == lambda0(1) - null_root(1).scaled(2));
    }

    TEST_CASE("dimension formula") {
        CHECK(dim_idempotent_hom(1, {0, 1, 1}, {0, 1, 1}) == 4);
        CHECK(dim_idempotent_hom(1, {0, 1, 0, 1}, {0, 1, 0, 1}) == 4);
        CHECK(dim_idempotent_hom(1, {0, 1, 0, 1, 0}, {0, 1, 0, 1, 0}) == 8);
        CHECK(dim_block(1, {1, 1}) == 2);
        CHECK(dim_block(1, {2, 1}) == 2);
        CHECK(dim_block(1, {1, 2}) == 4);
        CHECK(dim_block(1, {2, 2}) == 24);
        for (int ell = 1; ell <= 5; ++ell) CHECK(dim_full(ell, 4) == 24);
        for (int ell = 1; ell <= 3; ++ell)
            for (int n = 0; n <= 8; ++n) CHECK(dim_full_by_blocks(ell, n) == dim_full(ell, n));
        CHECK_THROWS(dim_idempotent_hom(1, {0, 1}, {0, 1, 1}));
        CHECK_THROWS(dim_block(1, {-1, 2}));
    }

    TEST_CASE("Fock operators") {
        CHECK(fock_f(1, 0, {}) == std::vector<Partition>{{1}});
        auto f = fock_f(1, 1, {1});
        CHECK(f.size() == 2);
        CHECK(std::count(f.begin(), f.end(), Partition{2}) == 1);
        CHECK(std::count(f.begin(), f.end(), Partition{1, 1}) == 1);
        for (int i = 0; i <= 2; ++i) CHECK(fock_e(2, i, {}).empty());
    }

    TEST_CASE("Fock counting commutator, size <= 8") {
        for (int ell = 1; ell <= 3; ++ell) {
            CartanDatum c(ell);
            for (int n = 0; n <= 8; ++n)
                for (const auto& p : partitions(n))
                    for (int i = 0; i <= ell; ++i)
                        CHECK(static_cast<long>(fock_f(ell, i, p).size()) - static_cast<long>(fock_e(ell, i, p).size()) ==
                              pair_h(c, i, weight_of(p, ell)));
        }
    }

    TEST_CASE("residue words parse and print") {
        CHECK(parse_residues("0110") == ResidueSeq{0, 1, 1, 0});
        CHECK(parse_residues("0,1,10") == ResidueSeq{0, 1, 10});
        CHECK(format_residues({0, 1, 2}) == "012");
        CHECK_THROWS(parse_residues("0x1"));
    }
}
