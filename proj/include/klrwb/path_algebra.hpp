#pragma once
// bounded quiver algebras: noncommutative rewriting to a path basis, structure constants, invariants

#include "klrwb/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klrwb {

struct HorizonExceeded : std::runtime_error {
    std::string witness;  // longest surviving path
    HorizonExceeded(const std::string& msg, std::string w) : std::runtime_error(msg), witness(std::move(w)) {}
};

struct InadmissibleRelation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int nv() const { return static_cast<int>(vertices.size()); }
    int na() const { return static_cast<int>(arrows.size()); }
    int add_vertex(const std::string& name);
    int add_arrow(const std::string& name, int src, int tgt);
    int vertex_index(const std::string& name) const;  // throws std::out_of_range
    int arrow_index(const std::string& name) const;
};

// "a b" means a then b: tgt(a) = src(b). Empty arrow list is the trivial path at src == tgt.
struct Path {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;

    bool trivial() const { return arrows.empty(); }
    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Path&) const = default;
    auto operator<=>(const Path&) const = default;
};

Path trivial_path(int v);
Path make_path(const Quiver& q, const std::vector<int>& arrows);
Path concat(const Path& a, const Path& b);  // throws if not composable
// "alpha beta gamma", "e0" or "e:<vertex>" for a trivial path
Path parse_path(const Quiver& q, const std::string& text);
std::string format_path(const Quiver& q, const Path& p);

struct Term {
    Q coef;
    Path path;
};
using Relation = std::vector<Term>;

// WORKBENCH_MAXLEN if set, else 40
int default_max_len();

struct Presentation {
    std::string name;
    Quiver quiver;
    std::vector<Relation> relations;
    std::vector<int> arrow_rank;  // deglex letter order; empty means declaration order
    int max_len = default_max_len();
    bool strict = true;  // admissible: every term of length >= 2

    // sum of coef * path, paths in parse_path syntax
    void relate(const std::vector<std::pair<Q, std::string>>& terms);
    // lhs = rhs for two single paths
    void equal(const std::string& lhs, const std::string& rhs, const Q& c = 1);
    void zero(const std::string& path) { relate({{Q(1), path}}); }
};

// throws InadmissibleRelation
void check_relations(const Presentation& p);

struct FDAlgebra {
    std::string name;
    Quiver quiver;
    std::vector<Path> basis;          // b_i = e_src b_i e_tgt
    std::vector<SVec> table;          // table[i * dim + j] = b_i b_j
    std::vector<int> idem_index;      // basis index of e_v, -1 when e_v = 0
    std::vector<Vec> arrow_value;     // each arrow as an element
    std::vector<Relation> relations;  // defining relations
    bool admissible = true;

    int dim() const { return static_cast<int>(basis.size()); }
    int nv() const { return quiver.nv(); }
    int src(int i) const { return basis[i].src; }
    int tgt(int i) const { return basis[i].tgt; }
    const SVec& product(int i, int j) const { return table[static_cast<size_t>(i) * dim() + j]; }
    Vec mul(const Vec& a, const Vec& b) const;
    Vec unit(int i) const;
    Vec one() const;
    Vec idem(int v) const;
    Vec path_value(const Path& p) const;
    Vec element(const std::string& path) const { return path_value(parse_path(quiver, path)); }
    std::string basis_name(int i) const { return format_path(quiver, basis[i]); }
    std::string format(const Vec& x) const;
    // reversed words, transposed table; arrow and basis indices are kept
    FDAlgebra opposite() const;
};

FDAlgebra normalize(const Presentation& p);

// structural invariants
using TraceForm = Vec;  // value of Tr on each basis element

// Tr given on listed paths (each must normalize to a multiple of one basis element), zero elsewhere
TraceForm trace_from_paths(const FDAlgebra& a, const std::vector<std::pair<std::string, Q>>& values);
// Tr(xy) = Tr(yx) on basis pairs and a nonsingular Gram matrix
bool check_trace_form(const FDAlgebra& a, const TraceForm& t, std::string* why = nullptr);
// verifies the given form, or searches the symmetric forms for a nondegenerate one
std::optional<TraceForm> is_symmetric(const FDAlgebra& a, const std::optional<TraceForm>& given = std::nullopt);

struct BiserialReport {
    bool ok = true;
    std::vector<std::string> witnesses;  // violated conditions
};
BiserialReport is_special_biserial(const FDAlgebra& a);
BiserialReport is_stably_biserial(const FDAlgebra& a);
bool is_self_injective(const FDAlgebra& a);

std::vector<std::vector<int>> cartan_matrix_of(const FDAlgebra& a);  // [i][j] = dim e_i A e_j
std::vector<Vec> center(const FDAlgebra& a);
std::vector<Vec> arrow_ideal(const FDAlgebra& a);       // span of nontrivial basis paths
std::vector<Vec> jacobson_radical(const FDAlgebra& a);  // trace form of the regular representation
std::vector<Vec> socle_algebra(const FDAlgebra& a);     // two-sided annihilator of the radical
std::vector<Vec> ideal_product(const FDAlgebra& a, const std::vector<Vec>& x, const std::vector<Vec>& y);
bool in_span(const std::vector<Vec>& basis, const Vec& v);

// arrows from dim e_i (J/J^2) e_j, named by the shortest basis path representing them
Quiver quiver_of_algebra(const FDAlgebra& a);

struct WildWitness {
    int vertex = 0;
    std::vector<std::string> loops;
    std::string extra;
};
// a vertex carrying at least two loops and one further incident arrow
std::optional<WildWitness> wild_configuration_witness(const Quiver& q);

}  // namespace klrwb
