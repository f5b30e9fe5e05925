#include "klrwb/klr.hpp"

#include <set>
#include <sstream>

namespace klrwb {

KLRPresentation KLRPresentation::normalized(int ell, int n, const Q& lam) {
    if (ell < 1) throw InvalidRank("rank ell must be >= 1");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    KLRPresentation p;
    p.ell = ell;
    p.n = n;
    p.lam = lam;
    int m = ell + 1;
    Poly u = Poly::var(2, 0), v = Poly::var(2, 1);
    p.q.assign(m, std::vector<Poly>(m, Poly(2)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            p.q[i][j] = Poly::constant(2, 1);
        }
    if (ell == 1) {
        Poly q01 = u * u + (u * v).scaled(lam) + v * v;
        p.q[0][1] = q01;
        p.q[1][0] = q01;  // symmetric in u, v
        return p;
    }
    for (int i = 0; i < ell; ++i) {
        p.q[i][i + 1] = u + v;
        p.q[i + 1][i] = v + u;
    }
    p.q[ell][0] = u + v.scaled(lam);
    p.q[0][ell] = v + u.scaled(lam);  // Q_{0,l}(u,v) = Q_{l,0}(v,u)
    return p;
}

Poly q_poly(const KLRPresentation& p, int i, int j) {
    if (i < 0 || j < 0 || i > p.ell || j > p.ell) throw std::out_of_range("residue outside I");
    return p.q[i][j];
}

Poly braid_correction(const KLRPresentation& p, int i, int j) {
    Poly q = q_poly(p, i, j);
    // (u,v) -> (u,v) and (w,v) inside three variables
    Poly a = q.substitute({0, 1}, {1, 1}, 3);
    Poly b = q.substitute({2, 1}, {1, 1}, 3);
    return (a - b).divide_by_difference(0, 2);
}

MatrixRep MatrixRep::zero(int ell, int n, const Q& lam, int dim) {
    MatrixRep r;
    r.ell = ell;
    r.n = n;
    r.lam = lam;
    r.dim = dim;
    r.x.assign(n, Mat(dim, dim));
    r.psi.assign(n > 0 ? n - 1 : 0, Mat(dim, dim));
    return r;
}

Mat MatrixRep::idem(const ResidueSeq& nu) const {
    auto it = e.find(nu);
    return it == e.end() ? Mat(dim, dim) : it->second;
}

std::vector<Mat> MatrixRep::generators() const {
    std::vector<Mat> g;
    for (const auto& [nu, m] : e) g.push_back(m);
    for (const auto& m : x) g.push_back(m);
    for (const auto& m : psi) g.push_back(m);
    return g;
}

std::map<ResidueSeq, int> MatrixRep::character() const {
    std::map<ResidueSeq, int> ch;
    for (const auto& [nu, m] : e) {
        int r = rank(m);
        if (r) ch[nu] = r;
    }
    return ch;
}

std::string RelationReport::summary() const {
    std::ostringstream os;
    for (const auto& [fam, ok] : families) os << fam << ": " << (ok ? "ok" : "FAIL") << "\n";
    for (const auto& f : failures) os << "  failing " << f.relation << "\n";
    return os.str();
}

namespace {

std::string word_str(const ResidueSeq& nu) { return "e(" + format_residues(nu) + ")"; }

ResidueSeq swap_at(ResidueSeq nu, int k) {  // k is 1-based, swaps positions k,k+1
    std::swap(nu[k - 1], nu[k]);
    return nu;
}

struct Checker {
    RelationReport report;
    std::map<std::string, bool> fam_ok;
    std::vector<std::string> order;

    void family(const std::string& f) {
        if (!fam_ok.count(f)) {
            fam_ok[f] = true;
            order.push_back(f);
        }
    }
    void expect_zero(const std::string& f, const std::string& rel, const ResidueSeq& nu,
                     std::vector<int> idx, const Mat& residual) {
        family(f);
        if (residual.is_zero()) return;
        fam_ok[f] = false;
        report.failures.push_back({f, rel, nu, std::move(idx), residual});
    }
    RelationReport finish() {
        for (const auto& f : order) report.families.emplace_back(f, fam_ok[f]);
        return report;
    }
};

}  // namespace

RelationReport verify_rep(const KLRPresentation& pres, const MatrixRep& rep) {
    if (rep.ell != pres.ell || rep.n != pres.n)
        throw std::invalid_argument("representation shape does not match presentation");
    const int n = rep.n, d = rep.dim;
    if (static_cast<int>(rep.x.size()) != n || static_cast<int>(rep.psi.size()) != std::max(0, n - 1))
        throw std::invalid_argument("wrong number of generator matrices");
    for (const auto& m : rep.generators())
        if (m.rows() != d || m.cols() != d) throw std::invalid_argument("generator matrix has wrong size");
    for (const auto& [nu, m] : rep.e) {
        if (static_cast<int>(nu.size()) != n) throw std::invalid_argument("idempotent word of wrong length");
        for (int c : nu)
            if (c < 0 || c > pres.ell) throw std::invalid_argument("idempotent word letter outside I");
    }

    Checker ck;
    const Mat zero(d, d);
    const Mat id = Mat::identity(d);
    auto X = [&](int k) -> const Mat& { return rep.x[k - 1]; };
    auto P = [&](int k) -> const Mat& { return rep.psi[k - 1]; };

    // idempotents
    ck.family("idempotents");
    Mat sum(d, d);
    for (const auto& [nu, m] : rep.e) {
        sum += m;
        ck.expect_zero("idempotents", word_str(nu) + "^2 = " + word_str(nu), nu, {}, m * m - m);
        for (const auto& [nu2, m2] : rep.e)
            if (nu2 > nu)
                ck.expect_zero("idempotents", word_str(nu) + word_str(nu2) + " = 0", nu, {}, m * m2);
    }
    ck.expect_zero("idempotents", "sum e(nu) = 1", {}, {}, sum - id);

    // x commutes with e and with each other
    ck.family("x-commute");
    for (int k = 1; k <= n; ++k) {
        for (const auto& [nu, m] : rep.e)
            ck.expect_zero("x-commute", "x" + std::to_string(k) + " " + word_str(nu) + " = " + word_str(nu) +
                                            " x" + std::to_string(k),
                           nu, {k}, X(k) * m - m * X(k));
        for (int l = k + 1; l <= n; ++l)
            ck.expect_zero("x-commute", "x" + std::to_string(k) + " x" + std::to_string(l) + " = x" +
                                            std::to_string(l) + " x" + std::to_string(k),
                           {}, {k, l}, X(k) * X(l) - X(l) * X(k));
    }

    // psi_l e(nu) = e(s_l nu) psi_l
    ck.family("psi-e");
    for (int l = 1; l < n; ++l) {
        std::set<ResidueSeq> words;
        for (const auto& [nu, m] : rep.e) {
            words.insert(nu);
            words.insert(swap_at(nu, l));
        }
        for (const auto& nu : words)
            ck.expect_zero("psi-e", "psi" + std::to_string(l) + " " + word_str(nu) + " = " +
                                        word_str(swap_at(nu, l)) + " psi" + std::to_string(l),
                           nu, {l}, P(l) * rep.idem(nu) - rep.idem(swap_at(nu, l)) * P(l));
    }

    ck.family("psi-distant");
    for (int k = 1; k < n; ++k)
        for (int l = k + 2; l < n; ++l)
            ck.expect_zero("psi-distant", "psi" + std::to_string(k) + " psi" + std::to_string(l) + " = psi" +
                                              std::to_string(l) + " psi" + std::to_string(k),
                           {}, {k, l}, P(k) * P(l) - P(l) * P(k));

    ck.family("psi-square");
    for (int k = 1; k < n; ++k)
        for (const auto& [nu, m] : rep.e) {
            Poly q = q_poly(pres, nu[k - 1], nu[k]);
            Mat rhs = q.eval({X(k), X(k + 1)}, d) * m;
            ck.expect_zero("psi-square", "psi" + std::to_string(k) + "^2 " + word_str(nu) + " = Q(x" +
                                             std::to_string(k) + ",x" + std::to_string(k + 1) + ") " + word_str(nu),
                           nu, {k}, P(k) * P(k) * m - rhs);
        }

    ck.family("psi-x");
    for (int k = 1; k < n; ++k)
        for (int l = 1; l <= n; ++l) {
            int sl = (l == k) ? k + 1 : (l == k + 1 ? k : l);
            for (const auto& [nu, m] : rep.e) {
                Mat lhs = (P(k) * X(l) - X(sl) * P(k)) * m;
                Mat rhs = zero;
                if (nu[k - 1] == nu[k]) {
                    if (l == k) rhs = -m;
                    if (l == k + 1) rhs = m;
                }
                ck.expect_zero("psi-x", "(psi" + std::to_string(k) + " x" + std::to_string(l) + " - x" +
                                            std::to_string(sl) + " psi" + std::to_string(k) + ") " + word_str(nu),
                               nu, {k, l}, lhs - rhs);
            }
        }

    ck.family("braid");
    for (int k = 1; k + 1 < n; ++k)
        for (const auto& [nu, m] : rep.e) {
            Mat lhs = (P(k + 1) * P(k) * P(k + 1) - P(k) * P(k + 1) * P(k)) * m;
            Mat rhs = zero;
            if (nu[k - 1] == nu[k + 1])
                rhs = braid_correction(pres, nu[k - 1], nu[k]).eval({X(k), X(k + 1), X(k + 2)}, d) * m;
            ck.expect_zero("braid", "(psi" + std::to_string(k + 1) + " psi" + std::to_string(k) + " psi" +
                                        std::to_string(k + 1) + " - psi" + std::to_string(k) + " psi" +
                                        std::to_string(k + 1) + " psi" + std::to_string(k) + ") " + word_str(nu),
                           nu, {k}, lhs - rhs);
        }

    ck.family("cyclotomic");
    for (const auto& [nu, m] : rep.e) {
        if (nu.empty()) continue;
        if (nu[0] == 0)
            ck.expect_zero("cyclotomic", "x1 " + word_str(nu) + " = 0", nu, {1}, X(1) * m);
        else
            ck.expect_zero("cyclotomic", word_str(nu) + " = 0", nu, {}, m);
    }
    return ck.finish();
}

void check_scaling(const ScalingMatrix& c, int ell) {
    int m = ell + 1;
    if (static_cast<int>(c.size()) != m) throw std::invalid_argument("scaling matrix has wrong size");
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(c[i].size()) != m) throw std::invalid_argument("scaling matrix has wrong size");
        for (int j = 0; j < m; ++j) {
            if (c[i][j] == 0) throw std::invalid_argument("scaling matrix has a zero entry");
            if (c[i][j] != c[j][i]) throw std::invalid_argument("scaling matrix is not symmetric");
        }
    }
}

MatrixRep rescale_rep(const MatrixRep& rep, const ScalingMatrix& c) {
    check_scaling(c, rep.ell);
    MatrixRep out = rep;
    const int d = rep.dim;
    for (int k = 1; k <= rep.n; ++k) {
        Mat xk(d, d);
        for (const auto& [nu, m] : rep.e) {
            Q s = 1 / c[nu[k - 1]][nu[k - 1]];
            xk += (rep.x[k - 1] * m).scaled(s);
        }
        out.x[k - 1] = xk;
    }
    for (int k = 1; k < rep.n; ++k) {
        Mat pk(d, d);
        for (const auto& [nu, m] : rep.e) pk += (rep.psi[k - 1] * m).scaled(c[nu[k - 1]][nu[k]]);
        out.psi[k - 1] = pk;
    }
    if (!rep.name.empty()) out.name = rep.name + "'";
    return out;
}

KLRPresentation rescale_presentation(const KLRPresentation& p, const ScalingMatrix& c) {
    check_scaling(c, p.ell);
    KLRPresentation out = p;
    for (int i = 0; i <= p.ell; ++i)
        for (int j = 0; j <= p.ell; ++j) {
            if (i == j) continue;
            Q cij = c[i][j];
            out.q[i][j] = p.q[i][j].substitute({0, 1}, {c[i][i], c[j][j]}, 2).scaled(cij * cij);
        }
    return out;
}

}  // namespace klrwb
