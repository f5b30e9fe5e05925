#pragma once
// two-point symmetric algebras of the classification, the R(2delta) basic algebras and friends

#include "klrwb/path_algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace klrwb {

struct CatalogAlgebra {
    Presentation pres;
    std::vector<std::pair<std::string, Q>> trace;  // Tr on the listed paths, zero on the other basis paths

    FDAlgebra algebra() const { return normalize(pres); }
    TraceForm trace_form(const FDAlgebra& a) const { return trace_from_paths(a, trace); }
};

// vertices "0", "1"; alpha: 0->1, beta: 1->0, gamma a loop at 0, delta a loop at 1
CatalogAlgebra family_1(int m);
CatalogAlgebra family_2a(int p, int q);
CatalogAlgebra family_2b(int m);
CatalogAlgebra family_3a(int p, int q);  // second pair alpha', beta'
CatalogAlgebra family_3b(int m);
CatalogAlgebra family_4a(int p, int q, int r);
CatalogAlgebra family_4b(int p, int q);
CatalogAlgebra family_4c(int m);
// lam != 0: loop gamma at 1; lam == 0: loops gamma at 0 and delta at 1
CatalogAlgebra basic_R2delta(bool lam_is_zero);
// vertices "1", "2"; gamma a loop at 1, alpha: 1->2, beta: 2->1
CatalogAlgebra appendix_example();
// truncation of R(2delta) for ell = 2; the undetermined scalars default to 0
CatalogAlgebra wild_eRe(const Q& a = 0, const Q& b = 0);
// linear A_n quiver without relations (not self-injective)
CatalogAlgebra linear_quiver(int n);

// "1", "2a", ..., "4c", "basic-2delta", "appendix-example", "wild-eRe"
std::vector<std::string> catalog_names();
// exponent count for a family name, 0 for the fixed algebras
int catalog_arity(const std::string& name);
CatalogAlgebra catalog(const std::string& name, const std::vector<int>& exps = {}, const Q& lam = 1);

// "alpha beta alpha beta" for word "alpha beta", k = 2
std::string power(const std::string& word, int k);

}  // namespace klrwb
