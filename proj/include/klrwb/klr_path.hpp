#pragma once
// cyclotomic KLR algebras as bounded quiver algebras: one vertex per residue word

#include "klrwb/klr.hpp"
#include "klrwb/module.hpp"

#include <optional>
#include <vector>

namespace klrwb {

// vertex nu, loops x_k at nu, arrows psi_k: s_k nu -> nu; words with nu_1 != 0 are killed by a relation
struct KLRQuiver {
    int ell = 1;
    int n = 0;
    Q lam = 0;
    Presentation pres;
    std::vector<ResidueSeq> words;       // vertex -> nu
    std::vector<std::vector<int>> x;     // x[v][k-1] -> arrow index
    std::vector<std::vector<int>> psi;   // psi[v][k-1] -> arrow index (arrow ending at v)

    int vertex_of(const ResidueSeq& nu) const;  // -1 if absent
};

// content: multiplicity of each residue (the block); empty means all of I^n
KLRQuiver klr_as_presentation(int ell, int n, const Q& lam, const std::vector<int>& content = {});

struct KLRAlgebra {
    KLRQuiver q;
    FDAlgebra a;
};
KLRAlgebra klr_algebra(int ell, int n, const Q& lam, const std::vector<int>& content = {});

// dim e(nu2) A e(nu1)
int idempotent_dim(const KLRAlgebra& k, const ResidueSeq& nu2, const ResidueSeq& nu1);

AModule to_amodule(const KLRAlgebra& k, const MatrixRep& rep);
MatrixRep to_matrix_rep(const KLRAlgebra& k, const AModule& m);

// F_i M = A_big e ⊗ M along e(nu) -> e(nu i), x_k -> x_k, psi_k -> psi_k
AModule induce(const KLRAlgebra& big, const KLRAlgebra& small, int i, const AModule& m);

}  // namespace klrwb
