#pragma once
// dense rational matrices plus a sparse incremental row-reducer

#include "klrwb/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace klrwb {

class Mat {
public:
    Mat() = default;
    Mat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}
    Mat(std::initializer_list<std::initializer_list<Q>> rows);

    static Mat identity(int n);
    static Mat zero(int r, int c) { return Mat(r, c); }
    // e_{ij} with a single 1
    static Mat unit(int r, int c, int i, int j);
    static Mat from_columns(const std::vector<Vec>& cols, int nrows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Q& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Q& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Q& s) const;
    Mat& operator+=(const Mat& o);
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    bool is_zero() const;
    Q trace() const;
    Vec column(int j) const;
    Vec flatten() const { return a_; }
    // rows [r0,r0+nr) x cols [c0,c0+nc)
    Mat block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const Mat& b);

private:
    int r_ = 0, c_ = 0;
    std::vector<Q> a_;
};

using SVec = std::vector<std::pair<int, Q>>;  // sorted by index, no zeros

SVec to_sparse(const Vec& v);
Vec to_dense(const SVec& v, int n);

// Incremental reduced row echelon form over Q. Rows are kept fully reduced.
class RowReducer {
public:
    explicit RowReducer(int ncols) : n_(ncols) {}
    // returns true if the row was independent of the current span
    bool add(SVec row);
    bool add(const Vec& row) { return add(to_sparse(row)); }
    // reduce a vector modulo the current row space
    SVec reduce(SVec row) const;
    bool in_span(const Vec& v) const { return reduce(to_sparse(v)).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return n_; }
    // basis of {x : row.x = 0 for all rows}
    std::vector<Vec> nullspace() const;
    std::vector<SVec> rows() const;
    const std::map<int, SVec>& pivot_rows() const { return rows_; }

private:
    int n_;
    std::map<int, SVec> rows_;  // pivot column -> row with leading 1
};

int rank(const Mat& m);
// columns spanning {x : m x = 0}
std::vector<Vec> kernel(const Mat& m);
// basis of the column space, chosen from the given vectors (first independent ones)
std::vector<Vec> independent_subset(const std::vector<Vec>& vs, int n);
std::vector<Vec> span_basis(const std::vector<Vec>& vs, int n);
// one solution of m x = b if any
std::optional<Vec> solve(const Mat& m, const Vec& b);
Q det(Mat m);
std::optional<Mat> inverse(const Mat& m);
// some X with a X = b (free variables zero), if consistent
std::optional<Mat> solve_matrix(const Mat& a, const Mat& b);
// X with g s = s x for a column basis s of a g-invariant subspace; throws MathError otherwise
Mat restrict_op(const Mat& g, const Mat& s);
std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, int n);
// coordinates of v in the (independent) basis, if v lies in its span
std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v, int n);
// generic element of a matrix space that is invertible, if one is found
std::optional<Mat> find_invertible(const std::vector<Mat>& space);

}  // namespace klrwb
