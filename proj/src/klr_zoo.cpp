#include "klrwb/klr.hpp"

namespace klrwb {

namespace {

// s_k T: swap entries k and k+1; empty when the result is not standard
std::optional<StandardTableau> swap_entries(const StandardTableau& t, int k) {
    StandardTableau s = t;
    for (auto& row : s.rows)
        for (auto& v : row) {
            if (v == k)
                v = k + 1;
            else if (v == k + 1)
                v = k;
        }
    for (size_t r = 0; r < s.rows.size(); ++r)
        for (size_t c = 0; c < s.rows[r].size(); ++c) {
            if (c > 0 && s.rows[r][c - 1] > s.rows[r][c]) return std::nullopt;
            if (r > 0 && s.rows[r - 1][c] > s.rows[r][c]) return std::nullopt;
        }
    return s;
}

Mat diag_projector(int d, const std::vector<int>& idx) {
    Mat m(d, d);
    for (int i : idx) m(i, i) = 1;
    return m;
}

MatrixRep tableau_module(int ell, int i, bool extend) {
    if (ell < 1) throw InvalidRank("rank ell must be >= 1");
    if (i < 1 || i > ell) throw std::out_of_range("hook index must satisfy 1 <= i <= ell");
    Partition shape{i};
    for (int r = 0; r < ell - i; ++r) shape.push_back(1);
    auto tabs = standard_tableaux(shape);
    int d = static_cast<int>(tabs.size());
    int n = extend ? ell + 1 : ell;
    MatrixRep rep = MatrixRep::zero(ell, n, 0, d);
    for (int a = 0; a < d; ++a) {
        ResidueSeq nu = residue_sequence(ell, tabs[a]);
        if (extend) nu.push_back(i);
        auto it = rep.e.find(nu);
        if (it == rep.e.end()) it = rep.e.emplace(nu, Mat(d, d)).first;
        it->second(a, a) = 1;
    }
    for (int k = 1; k < ell; ++k)
        for (int a = 0; a < d; ++a) {
            auto s = swap_entries(tabs[a], k);
            if (!s) continue;
            for (int b = 0; b < d; ++b)
                if (tabs[b].rows == s->rows) rep.psi[k - 1](b, a) = 1;
        }
    rep.name = (extend ? "S" : "L") + std::to_string(i);
    return rep;
}

}  // namespace

MatrixRep build_L(int ell, int i) { return tableau_module(ell, i, false); }
MatrixRep build_S(int ell, int i) { return tableau_module(ell, i, true); }

MatrixRep build_M0(const Q& lam) {
    MatrixRep r = MatrixRep::zero(1, 3, lam, 2);
    r.e[{0, 1, 1}] = Mat::identity(2);
    r.x[1] = Mat{{0, 1}, {0, 0}};
    r.x[2] = Mat{{0, -1}, {0, 0}};
    r.psi[1] = Mat{{0, 0}, {-1, 0}};
    r.name = "M0";
    return r;
}

MatrixRep build_M1hat(const Q& lam) {
    MatrixRep r = MatrixRep::zero(1, 3, lam, 2);
    r.e[{0, 1, 0}] = Mat::identity(2);
    r.x[1] = Mat{{0, 1}, {0, 0}};
    r.x[2] = Mat{{0, -lam}, {0, 0}};
    r.name = "M1hat";
    return r;
}

MatrixRep build_M1(const Q& lam) {
    MatrixRep r = MatrixRep::zero(1, 3, lam, 1);
    r.e[{0, 1, 0}] = Mat::identity(1);
    r.name = "M1";
    return r;
}

MatrixRep build_N0(const Q& lam) {
    MatrixRep m = build_M0(lam);
    MatrixRep r = MatrixRep::zero(1, 4, lam, 2);
    r.e[{0, 1, 1, 0}] = Mat::identity(2);
    for (int k = 0; k < 3; ++k) r.x[k] = m.x[k];
    for (int k = 0; k < 2; ++k) r.psi[k] = m.psi[k];
    r.name = "N0";
    return r;
}

MatrixRep build_N1hat(const Q& lam) {
    MatrixRep m = build_M1hat(lam);
    MatrixRep r = MatrixRep::zero(1, 4, lam, 2);
    r.e[{0, 1, 0, 1}] = Mat::identity(2);
    for (int k = 0; k < 3; ++k) r.x[k] = m.x[k];
    r.x[3] = Mat{{0, lam * lam - 1}, {0, 0}};
    r.name = "N1hat";
    return r;
}

MatrixRep build_N1(const Q& lam) {
    MatrixRep r = MatrixRep::zero(1, 4, lam, 1);
    r.e[{0, 1, 0, 1}] = Mat::identity(1);
    r.name = "N1";
    return r;
}

MatrixRep build_T0(const Q& lam) {
    // N0 + N1hat on (v1, v2, w1, w2), psi3 v_i = w_i
    MatrixRep r = direct_sum(build_N0(lam), build_N1hat(lam));
    r.psi[2](2, 0) = 1;
    r.psi[2](3, 1) = 1;
    r.name = "T0";
    return r;
}

MatrixRep build_T1(const Q& lam) {
    // basis v1, v2, w, v~1, v~2
    MatrixRep r = MatrixRep::zero(1, 4, lam, 5);
    r.e[{0, 1, 1, 0}] = diag_projector(5, {0, 1, 3, 4});
    r.e[{0, 1, 0, 1}] = diag_projector(5, {2});
    r.x[1](0, 1) = 1;
    r.x[1](3, 4) = 1;
    r.x[2](0, 1) = -1;
    r.x[2](3, 4) = -1;
    r.x[3](3, 0) = 1;
    r.x[3](4, 1) = 1;
    r.psi[1](1, 0) = -1;
    r.psi[1](4, 3) = -1;
    r.psi[2](2, 1) = -lam;
    r.psi[2](3, 2) = 1;
    r.name = "T1";
    return r;
}

MatrixRep build_T1hat(const Q& lam) {
    MatrixRep t = build_T1(lam);
    MatrixRep r = MatrixRep::zero(1, 4, lam, 6);
    for (const auto& [nu, m] : t.e) {
        Mat big(6, 6);
        big.set_block(0, 0, m);
        r.e[nu] = big;
    }
    r.e[{0, 1, 0, 1}](5, 5) = 1;
    for (int k = 0; k < 4; ++k) r.x[k].set_block(0, 0, t.x[k]);
    for (int k = 0; k < 3; ++k) r.psi[k].set_block(0, 0, t.psi[k]);
    // u = index 5
    r.x[1](2, 5) = 1;
    r.x[2](2, 5) = -lam;
    r.x[3](2, 5) = -1;
    r.psi[2](0, 5) = -lam;
    r.psi[2](4, 5) = 1;
    r.name = "T1hat";
    return r;
}

MatrixRep build_V(const Q& lam) {
    // the printed 6x6 matrices, basis v1, v2, w, v~1, v~2, u
    const Q l = lam;
    MatrixRep r = MatrixRep::zero(1, 5, lam, 6);
    r.e[{0, 1, 1, 0, 0}] = diag_projector(6, {0, 1, 3, 4});
    r.e[{0, 1, 0, 1, 0}] = diag_projector(6, {2, 5});
    r.x[1] = Mat{{0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1},
                 {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
    r.x[2] = Mat{{0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -l},
                 {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
    r.x[3] = Mat{{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, -1},
                 {1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
    r.x[4] = Mat{{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, l},
                 {-1, 0, 0, 0, 0, 0}, {0, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
    r.psi[1] = Mat{{0, 0, 0, 0, 0, 0}, {-1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 0, 0}};
    r.psi[2] = Mat{{0, 0, 0, 0, 0, -l}, {0, 0, 0, 0, 0, 0}, {0, -l, 0, 0, 0, 0},
                   {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0}};
    r.psi[3] = Mat{{0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, -1, 0}, {0, 0, 0, 0, 0, 0},
                   {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}};
    r.name = "V";
    return r;
}

namespace {
std::vector<Vec> unit_vectors(int d, const std::vector<int>& idx) {
    std::vector<Vec> out;
    for (int i : idx) {
        Vec v(d);
        v[i] = 1;
        out.push_back(v);
    }
    return out;
}
}  // namespace

MatrixRep build_U(const Q& lam) {
    MatrixRep r = subrep(build_V(lam), unit_vectors(6, {0, 1, 2, 3, 4}));
    r.name = "U";
    return r;
}

MatrixRep build_O0(const Q& lam) {
    MatrixRep v = build_V(lam);
    auto span = lam == 0 ? unit_vectors(6, {0, 1, 3, 4}) : unit_vectors(6, {0, 1, 2, 3, 4});
    if (!is_invariant(v, span)) throw MathError("O0 span is not a submodule of V");
    MatrixRep r = subrep(v, span);
    r.name = "O0";
    return r;
}

MatrixRep build_O1(const Q& lam) {
    MatrixRep r = quotient_rep(build_V(lam), unit_vectors(6, {0, 1, 2, 3, 4}));
    r.name = "O1";
    return r;
}

MatrixRep build_O1hat(const Q& lam) {
    MatrixRep n1 = build_N1hat(lam);
    MatrixRep r = MatrixRep::zero(1, 5, lam, 2);
    r.e[{0, 1, 0, 1, 0}] = Mat::identity(2);
    for (int k = 0; k < 4; ++k) r.x[k] = n1.x[k];
    r.x[4] = Mat{{0, 2 * lam - lam * lam * lam}, {0, 0}};
    r.name = "O1hat";
    return r;
}

std::vector<std::string> zoo_names() {
    return {"L", "S", "M0", "M1hat", "M1", "N0", "N1hat", "N1", "T0", "T1", "T1hat", "V", "U", "O0", "O1", "O1hat"};
}

MatrixRep build_zoo(const std::string& name, const Q& lam, int ell, int i) {
    if (name == "L") return build_L(ell, i);
    if (name == "S") return build_S(ell, i);
    if (ell != 1) throw std::invalid_argument("module " + name + " exists only for ell = 1");
    if (name == "M0") return build_M0(lam);
    if (name == "M1hat") return build_M1hat(lam);
    if (name == "M1") return build_M1(lam);
    if (name == "N0") return build_N0(lam);
    if (name == "N1hat") return build_N1hat(lam);
    if (name == "N1") return build_N1(lam);
    if (name == "T0") return build_T0(lam);
    if (name == "T1") return build_T1(lam);
    if (name == "T1hat") return build_T1hat(lam);
    if (name == "V") return build_V(lam);
    if (name == "U") return build_U(lam);
    if (name == "O0") return build_O0(lam);
    if (name == "O1") return build_O1(lam);
    if (name == "O1hat") return build_O1hat(lam);
    throw std::invalid_argument("unknown zoo module: " + name);
}

}  // namespace klrwb
