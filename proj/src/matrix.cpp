#include "klrwb/matrix.hpp"

#include <algorithm>
#include <random>

namespace klrwb {

Q parse_rational(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s[0] == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto digits_ok = [](const std::string& t) {
        size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits_ok(s.substr(0, slash)) ||
        (slash != std::string::npos && !digits_ok(s.substr(slash + 1))))
        throw std::invalid_argument("not a rational: " + raw);
    Q q;
    try {
        q = Q(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: " + raw);
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + raw);
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

Mat::Mat(std::initializer_list<std::initializer_list<Q>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(r_) * c_);
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged matrix");
        for (auto& x : row) a_.push_back(x);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::unit(int r, int c, int i, int j) {
    Mat m(r, c);
    m(i, j) = 1;
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, int nrows) {
    Mat m(nrows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j)
        for (int i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Q& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.c_; ++j) {
                const Q& y = o(k, j);
                if (y != 0) m(i, j) += x * y;
            }
        }
    return m;
}

Vec Mat::operator*(const Vec& v) const {
    if (static_cast<int>(v.size()) != c_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vec out(r_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k)
            if ((*this)(i, k) != 0 && v[k] != 0) out[i] += (*this)(i, k) * v[k];
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    Mat m = *this;
    m += o;
    return m;
}

Mat& Mat::operator+=(const Mat& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i)
        if (o.a_[i] != 0) a_[i] += o.a_[i];
    return *this;
}

Mat Mat::operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference shape mismatch");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i)
        if (o.a_[i] != 0) m.a_[i] -= o.a_[i];
    return m;
}

Mat Mat::operator-() const { return scaled(-1); }

Mat Mat::scaled(const Q& s) const {
    Mat m = *this;
    for (auto& x : m.a_)
        if (x != 0) x *= s;
    return m;
}

bool Mat::operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

Mat Mat::transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Q Mat::trace() const {
    Q t = 0;
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

Vec Mat::column(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    Mat m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

void Mat::set_block(int r0, int c0, const Mat& b) {
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

SVec to_sparse(const Vec& v) {
    SVec s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) s.emplace_back(i, v[i]);
    return s;
}

Vec to_dense(const SVec& v, int n) {
    Vec d(n);
    for (const auto& [i, x] : v) d[i] = x;
    return d;
}

namespace {

// a - s*b, both sorted
SVec axpy(const SVec& a, const Q& s, const SVec& b) {
    SVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -s * b[j].second);
            ++j;
        } else {
            Q v = a[i].second - s * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

const Q* lookup(const SVec& v, int col) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const std::pair<int, Q>& p, int c) { return p.first < c; });
    if (it != v.end() && it->first == col) return &it->second;
    return nullptr;
}

}  // namespace

SVec RowReducer::reduce(SVec row) const {
    // pivot rows are fully reduced, so one left-to-right sweep suffices
    size_t pos = 0;
    while (pos < row.size()) {
        int col = row[pos].first;
        auto it = rows_.find(col);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        Q s = row[pos].second;
        row = axpy(row, s, it->second);
        // entries before pos are untouched (pivot row starts at col)
    }
    return row;
}

bool RowReducer::add(SVec row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    int p = row.front().first;
    Q lead = row.front().second;
    if (lead != 1)
        for (auto& e : row) e.second /= lead;
    for (auto& [pc, r] : rows_) {
        const Q* c = lookup(r, p);
        if (c) {
            Q s = *c;
            r = axpy(r, s, row);
        }
    }
    rows_.emplace(p, std::move(row));
    return true;
}

std::vector<Vec> RowReducer::nullspace() const {
    std::vector<Vec> out;
    for (int f = 0; f < n_; ++f) {
        if (rows_.count(f)) continue;
        Vec v(n_);
        v[f] = 1;
        for (const auto& [p, r] : rows_) {
            const Q* c = lookup(r, f);
            if (c) v[p] = -*c;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<SVec> RowReducer::rows() const {
    std::vector<SVec> out;
    for (const auto& [p, r] : rows_) out.push_back(r);
    return out;
}

int rank(const Mat& m) {
    RowReducer rr(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        SVec row;
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) row.emplace_back(j, m(i, j));
        rr.add(std::move(row));
    }
    return rr.rank();
}

std::vector<Vec> kernel(const Mat& m) {
    RowReducer rr(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        SVec row;
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) row.emplace_back(j, m(i, j));
        rr.add(std::move(row));
    }
    return rr.nullspace();
}

std::vector<Vec> independent_subset(const std::vector<Vec>& vs, int n) {
    RowReducer rr(n);
    std::vector<Vec> out;
    for (const auto& v : vs)
        if (rr.add(v)) out.push_back(v);
    return out;
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs, int n) {
    RowReducer rr(n);
    for (const auto& v : vs) rr.add(v);
    std::vector<Vec> out;
    for (const auto& r : rr.rows()) out.push_back(to_dense(r, n));
    return out;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    // augmented system [m | -b] with last coordinate forced to 1
    int n = m.cols();
    RowReducer rr(n + 1);
    for (int i = 0; i < m.rows(); ++i) {
        SVec row;
        for (int j = 0; j < n; ++j)
            if (m(i, j) != 0) row.emplace_back(j, m(i, j));
        if (b[i] != 0) row.emplace_back(n, -b[i]);
        rr.add(std::move(row));
    }
    if (rr.pivot_rows().count(n)) return std::nullopt;
    Vec x(n);
    for (const auto& [p, r] : rr.pivot_rows()) {
        for (const auto& [c, v] : r)
            if (c == n) x[p] = -v;
    }
    return x;
}

Q det(Mat m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("det of non-square matrix");
    Q d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c) != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            Q f = m(r, c) / m(c, c);
            for (int j = c; j < n; ++j)
                if (m(c, j) != 0) m(r, j) -= f * m(c, j);
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& m) {
    int n = m.rows();
    if (n != m.cols()) return std::nullopt;
    Mat inv(n, n);
    for (int j = 0; j < n; ++j) {
        Vec e(n);
        e[j] = 1;
        auto x = solve(m, e);
        if (!x) return std::nullopt;
        for (int i = 0; i < n; ++i) inv(i, j) = (*x)[i];
    }
    if (!(m * inv == Mat::identity(n))) return std::nullopt;
    return inv;
}

std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
    int na = a.cols(), nb = b.cols();
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix shape mismatch");
    RowReducer rr(na + nb);
    for (int i = 0; i < a.rows(); ++i) {
        SVec row;
        for (int j = 0; j < na; ++j)
            if (a(i, j) != 0) row.emplace_back(j, a(i, j));
        for (int j = 0; j < nb; ++j)
            if (b(i, j) != 0) row.emplace_back(na + j, -b(i, j));
        rr.add(std::move(row));
    }
    // rows read  x_p + sum c_f x_f - b_p = 0 with the b block carried as extra columns
    Mat x(na, nb);
    for (const auto& [p, r] : rr.pivot_rows()) {
        if (p >= na) return std::nullopt;
        for (const auto& [c, v] : r)
            if (c >= na) x(p, c - na) = -v;
    }
    if (!(a * x == b)) return std::nullopt;
    return x;
}

Mat restrict_op(const Mat& g, const Mat& s) {
    auto x = solve_matrix(s, g * s);
    if (!x) throw MathError("subspace is not invariant");
    return *x;
}

std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, int n) {
    // solve sum s_i a_i = sum t_j b_j
    int ka = static_cast<int>(a.size()), kb = static_cast<int>(b.size());
    if (ka == 0 || kb == 0) return {};
    Mat m(n, ka + kb);
    for (int j = 0; j < ka; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = a[j][i];
    for (int j = 0; j < kb; ++j)
        for (int i = 0; i < n; ++i) m(i, ka + j) = -b[j][i];
    std::vector<Vec> out;
    for (const auto& k : kernel(m)) {
        Vec v(n);
        for (int j = 0; j < ka; ++j)
            if (k[j] != 0)
                for (int i = 0; i < n; ++i) v[i] += k[j] * a[j][i];
        out.push_back(std::move(v));
    }
    return span_basis(out, n);
}

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v, int n) {
    Mat m = Mat::from_columns(basis, n);
    return solve(m, v);
}

std::optional<Mat> find_invertible(const std::vector<Mat>& space) {
    if (space.empty() || space[0].rows() != space[0].cols()) return std::nullopt;
    for (const auto& m : space)
        if (det(m) != 0) return m;
    // det of a generic combination is a nonzero polynomial of degree <= d if any invertible element exists
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coef(-1000, 1000);
    for (int trial = 0; trial < 40; ++trial) {
        Mat m(space[0].rows(), space[0].cols());
        for (const auto& s : space) m += s.scaled(Q(coef(rng)));
        if (det(m) != 0) return m;
    }
    return std::nullopt;
}

}  // namespace klrwb
