#pragma once
// finite-dimensional left modules over an FDAlgebra and the homological toolkit around them

#include "klrwb/path_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace klrwb {

// basis adapted to the vertices; arrow a: s -> t maps the t-part to the s-part
struct AModule {
    std::string name;
    int dim = 0;
    std::vector<int> vert;    // vertex of each basis vector
    std::vector<Mat> arrows;  // one dim x dim matrix per arrow

    std::vector<int> dim_vector(int nv) const;
};

AModule zero_module(const FDAlgebra& a);
AModule simple_module(const FDAlgebra& a, int v);
AModule projective(const FDAlgebra& a, int v);  // A e_v on the basis paths ending at v
AModule injective(const FDAlgebra& a, int v);   // D(e_v A)
AModule direct_sum(const AModule& m, const AModule& n);
// D M as a module over the opposite algebra (matrices transposed)
AModule dual_module(const AModule& m);

// matrix by which an algebra element acts
Mat act(const FDAlgebra& a, const AModule& m, const Vec& x);
Mat act_basis(const FDAlgebra& a, const AModule& m, int i);
// empty when m is a module, else a description of the first failure
std::string module_defect(const FDAlgebra& a, const AModule& m);

// A-span of the vectors, vertex-adapted basis
std::vector<Vec> generated_submodule(const FDAlgebra& a, const AModule& m, const std::vector<Vec>& vs);
// spanning set must be a submodule; basis is re-chosen per vertex
AModule submodule(const FDAlgebra& a, const AModule& m, const std::vector<Vec>& span, Mat* inclusion = nullptr);
AModule quotient(const FDAlgebra& a, const AModule& m, const std::vector<Vec>& span, Mat* projection = nullptr);
// A e_v / A{x}: elements of A lying in A e_v
AModule cyclic_quotient(const FDAlgebra& a, int v, const std::vector<Vec>& elements);

std::vector<Vec> module_radical(const FDAlgebra& a, const AModule& m);
std::vector<Vec> module_socle(const FDAlgebra& a, const AModule& m);
AModule top(const FDAlgebra& a, const AModule& m);
AModule socle(const FDAlgebra& a, const AModule& m);
AModule radical(const FDAlgebra& a, const AModule& m);
// dimension vectors of Rad^k M / Rad^{k+1} M
std::vector<std::vector<int>> radical_layers_mod(const FDAlgebra& a, const AModule& m);

// basis of Hom_A(M, N) as dim N x dim M matrices
std::vector<Mat> hom_space(const FDAlgebra& a, const AModule& m, const AModule& n);
bool is_homomorphism(const AModule& m, const AModule& n, const Mat& f);
std::optional<Mat> find_isomorphism(const FDAlgebra& a, const AModule& m, const AModule& n);
bool is_isomorphic(const FDAlgebra& a, const AModule& m, const AModule& n);
// End(M)/rad End(M) one-dimensional
bool is_indecomposable(const FDAlgebra& a, const AModule& m);

struct ProjectiveCover {
    std::vector<int> tops;  // vertex of each summand P(v)
    AModule cover;
    Mat pi;                 // dim M x dim P
    std::vector<Vec> gens;  // top generators in M
};
ProjectiveCover projective_cover(const FDAlgebra& a, const AModule& m);
bool is_projective_module(const FDAlgebra& a, const AModule& m);
AModule syzygy(const FDAlgebra& a, const AModule& m, Mat* inclusion = nullptr);

// P1 -> P0 -> M -> 0 with P(u) -> P(v) given by right multiplication with y in e_u A e_v
struct MinimalPresentation {
    std::vector<int> p0, p1;
    std::vector<std::vector<Vec>> y;  // y[l][j]
};
MinimalPresentation minimal_presentation(const FDAlgebra& a, const AModule& m);

// Tr M as a module over a.opposite()
AModule transpose_mod(const FDAlgebra& a, const AModule& m);
AModule ar_translate(const FDAlgebra& a, const AModule& m);
AModule ar_translate_inv(const FDAlgebra& a, const AModule& m);

// Hom modulo maps factoring through projectives
std::vector<Mat> projective_factoring_maps(const FDAlgebra& a, const AModule& m, const AModule& n);
int stable_hom_dim(const FDAlgebra& a, const AModule& m, const AModule& n);
bool factors_through_projective(const FDAlgebra& a, const AModule& m, const AModule& n, const Mat& f);
int ext1_dim(const FDAlgebra& a, const AModule& m, const AModule& n);

}  // namespace klrwb
