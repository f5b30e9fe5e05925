#pragma once
// independent cross-checks: brute-force path reduction, Ext^1 from a projective resolution

#include "klrwb/module.hpp"

#include <map>
#include <utility>

namespace klrwb {

struct OracleDims {
    int total = 0;
    std::map<std::pair<int, int>, int> block;  // (src, tgt) -> dim e_src A e_tgt
    int horizon = 0;                           // path length at which the count stabilised
};

// dims of A / J^(L+1): paths of length <= L modulo truncated u r v, monomial relations pruned.
// L grows until the count is stable, which forces J^(L+1) inside the ideal
OracleDims brute_force_dims(const Presentation& p, int max_horizon = 40);

// dim ker(Hom(P1,N) -> Hom(P2,N)) - rank(Hom(P0,N) -> Hom(P1,N)), using Hom(P(v), N) = e_v N
int ext1_by_resolution(const FDAlgebra& a, const AModule& m, const AModule& n);

}  // namespace klrwb
