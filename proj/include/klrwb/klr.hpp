#pragma once
// cyclotomic KLR algebras at Lambda_0: matrix representations, relation checks, the module zoo

#include "klrwb/matrix.hpp"
#include "klrwb/poly.hpp"
#include "klrwb/tableaux.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klrwb {

struct KLRPresentation {
    int ell = 1;
    int n = 0;
    Q lam = 0;
    std::vector<std::vector<Poly>> q;  // q[i][j] in variables (u,v)

    // the normalized family for (ell, lam)
    static KLRPresentation normalized(int ell, int n, const Q& lam);
    int nres() const { return ell + 1; }
};

Poly q_poly(const KLRPresentation& p, int i, int j);
// (Q(u,v) - Q(w,v)) / (u - w) in variables (u,v,w)
Poly braid_correction(const KLRPresentation& p, int i, int j);

struct MatrixRep {
    int ell = 1;
    int n = 0;
    Q lam = 0;
    int dim = 0;
    std::map<ResidueSeq, Mat> e;  // missing words act as zero
    std::vector<Mat> x;           // x_1..x_n
    std::vector<Mat> psi;         // psi_1..psi_{n-1}
    std::string name;

    static MatrixRep zero(int ell, int n, const Q& lam, int dim);
    Mat idem(const ResidueSeq& nu) const;
    // every generator matrix, idempotents first
    std::vector<Mat> generators() const;
    // dim e(nu) M for each nu with nonzero idempotent
    std::map<ResidueSeq, int> character() const;
};

struct RelationFailure {
    std::string family;
    std::string relation;  // human readable, 1-based indices
    ResidueSeq nu;
    std::vector<int> indices;
    Mat residual;  // lhs - rhs
};

struct RelationReport {
    std::vector<std::pair<std::string, bool>> families;
    std::vector<RelationFailure> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

RelationReport verify_rep(const KLRPresentation& pres, const MatrixRep& rep);

using ScalingMatrix = std::vector<std::vector<Q>>;
void check_scaling(const ScalingMatrix& c, int ell);
MatrixRep rescale_rep(const MatrixRep& rep, const ScalingMatrix& c);
// Q'_{ij}(u,v) = c_ij^2 Q_ij(c_ii u, c_jj v)
KLRPresentation rescale_presentation(const KLRPresentation& p, const ScalingMatrix& c);

// module zoo
MatrixRep build_L(int ell, int i);
MatrixRep build_S(int ell, int i);
MatrixRep build_M0(const Q& lam);
MatrixRep build_M1hat(const Q& lam);
MatrixRep build_M1(const Q& lam);
MatrixRep build_N0(const Q& lam);
MatrixRep build_N1hat(const Q& lam);
MatrixRep build_N1(const Q& lam);
MatrixRep build_T0(const Q& lam = 0);
MatrixRep build_T1(const Q& lam);
MatrixRep build_T1hat(const Q& lam);
MatrixRep build_V(const Q& lam);
MatrixRep build_U(const Q& lam);
MatrixRep build_O0(const Q& lam);
MatrixRep build_O1(const Q& lam);
MatrixRep build_O1hat(const Q& lam);
// by name: L, S (need ell,i), M0, M1hat, M1, N0, N1hat, N1, T0, T1, T1hat, V, U, O0, O1, O1hat
MatrixRep build_zoo(const std::string& name, const Q& lam, int ell = 1, int i = 1);
std::vector<std::string> zoo_names();

// sub and quotient representations for an invariant subspace (columns of `basis`)
bool is_invariant(const MatrixRep& rep, const std::vector<Vec>& basis);
MatrixRep subrep(const MatrixRep& rep, const std::vector<Vec>& basis);
MatrixRep quotient_rep(const MatrixRep& rep, const std::vector<Vec>& basis);
MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b);

MatrixRep restrict_E(const MatrixRep& rep, int i);
int epsilon(const MatrixRep& rep, int i);

struct MatrixAlgebra {
    int d = 0;
    std::vector<Mat> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

MatrixAlgebra algebra_closure(const MatrixRep& rep);
bool is_absolutely_irreducible(const MatrixRep& rep);
// trace-form radical of the closure; throws MathError if it is not nilpotent on the module
std::vector<Mat> rep_radical(const MatrixRep& rep);

struct Layer {
    int dim = 0;
    std::map<ResidueSeq, int> character;
    std::vector<std::pair<std::string, int>> factors;  // against the supplied simples
    bool identified = false;
    std::string str() const;
};

// layers J^k M / J^{k+1} M, top first
std::vector<Layer> radical_layers(const MatrixRep& rep, const std::vector<MatrixRep>& simples = {});
std::vector<Vec> radical_power(const MatrixRep& rep, int k);
std::vector<Vec> socle_of_rep(const MatrixRep& rep);
std::vector<std::pair<std::string, int>> decompose_character(const std::map<ResidueSeq, int>& ch,
                                                             const std::vector<MatrixRep>& simples,
                                                             bool& ok);

MatrixRep dual_rep(const MatrixRep& rep);

// basis of {F : F a = b F}
std::vector<Mat> intertwiners(const MatrixRep& a, const MatrixRep& b);
std::optional<Mat> modules_isomorphic(const MatrixRep& a, const MatrixRep& b);

}  // namespace klrwb
