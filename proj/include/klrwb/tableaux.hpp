#pragma once
// Young diagrams, residues, standard tableaux, Fock space combinatorics

#include "klrwb/cartan.hpp"

#include <cstdint>
#include <vector>

namespace klrwb {

using Partition = std::vector<int>;  // weakly decreasing, positive
using ResidueSeq = std::vector<int>;

bool is_partition(const Partition& p);
int size_of(const Partition& p);

// cells are 1-based (row i, column j)
int residue(int ell, int i, int j);

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;  // rows[r][c] = entry in 1..n
};

// all partitions of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);

std::vector<StandardTableau> standard_tableaux(const Partition& shape);
std::uint64_t count_standard_tableaux(const Partition& shape);

ResidueSeq residue_sequence(int ell, const StandardTableau& t);
long k_number(int ell, const Partition& shape, const ResidueSeq& nu);

Weight weight_of(const Partition& shape, int ell);

std::uint64_t dim_idempotent_hom(int ell, const ResidueSeq& nu1, const ResidueSeq& nu2);
// block R(beta), beta as root coefficients
std::uint64_t dim_block(int ell, const std::vector<long>& beta);
// n! and the double sum over blocks; throws MathError on mismatch
std::uint64_t dim_full(int ell, int n);
std::uint64_t dim_full_by_blocks(int ell, int n);

// remove / add one box of residue i
std::vector<Partition> fock_e(int ell, int i, const Partition& shape);
std::vector<Partition> fock_f(int ell, int i, const Partition& shape);

// parse "0110" style words (single digits) or comma separated
ResidueSeq parse_residues(const std::string& s);
std::string format_residues(const ResidueSeq& nu);

}  // namespace klrwb
