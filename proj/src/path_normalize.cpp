#include "klrwb/path_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>

namespace klrwb {

int Quiver::add_vertex(const std::string& name) {
    vertices.push_back(name);
    return nv() - 1;
}

int Quiver::add_arrow(const std::string& name, int src, int tgt) {
    if (src < 0 || src >= nv() || tgt < 0 || tgt >= nv()) throw std::out_of_range("arrow endpoint out of range: " + name);
    arrows.push_back({name, src, tgt});
    return na() - 1;
}

int Quiver::vertex_index(const std::string& name) const {
    for (int v = 0; v < nv(); ++v)
        if (vertices[v] == name) return v;
    throw std::out_of_range("unknown vertex: " + name);
}

int Quiver::arrow_index(const std::string& name) const {
    for (int a = 0; a < na(); ++a)
        if (arrows[a].name == name) return a;
    throw std::out_of_range("unknown arrow: " + name);
}

Path trivial_path(int v) { return Path{v, v, {}}; }

Path make_path(const Quiver& q, const std::vector<int>& arrows) {
    if (arrows.empty()) throw std::invalid_argument("make_path needs at least one arrow");
    for (size_t k = 0; k + 1 < arrows.size(); ++k)
        if (q.arrows[arrows[k]].tgt != q.arrows[arrows[k + 1]].src)
            throw std::invalid_argument("arrows " + q.arrows[arrows[k]].name + " and " + q.arrows[arrows[k + 1]].name +
                                        " do not compose");
    return Path{q.arrows[arrows.front()].src, q.arrows[arrows.back()].tgt, arrows};
}

Path concat(const Path& a, const Path& b) {
    if (a.tgt != b.src) throw std::invalid_argument("paths do not compose");
    Path p{a.src, b.tgt, a.arrows};
    p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
    return p;
}

Path parse_path(const Quiver& q, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) throw std::invalid_argument("empty path");
    if (tok.size() == 1) {
        const std::string& t = tok[0];
        for (const auto& a : q.arrows)
            if (a.name == t) return make_path(q, {q.arrow_index(t)});
        if (t.rfind("e:", 0) == 0) return trivial_path(q.vertex_index(t.substr(2)));
        if (t.size() > 1 && t[0] == 'e')
            for (int v = 0; v < q.nv(); ++v)
                if (q.vertices[v] == t.substr(1)) return trivial_path(v);
    }
    std::vector<int> arrows;
    for (const auto& t : tok) arrows.push_back(q.arrow_index(t));
    return make_path(q, arrows);
}

std::string format_path(const Quiver& q, const Path& p) {
    if (p.trivial()) return "e" + q.vertices[p.src];
    std::string s;
    for (size_t k = 0; k < p.arrows.size(); ++k) {
        if (k) s += ' ';
        s += q.arrows[p.arrows[k]].name;
    }
    return s;
}

int default_max_len() {
    if (const char* env = std::getenv("WORKBENCH_MAXLEN")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 40;
}

void Presentation::relate(const std::vector<std::pair<Q, std::string>>& terms) {
    Relation r;
    for (const auto& [c, s] : terms)
        if (c != 0) r.push_back({c, parse_path(quiver, s)});
    relations.push_back(std::move(r));
}

void Presentation::equal(const std::string& lhs, const std::string& rhs, const Q& c) {
    relate({{Q(1), lhs}, {Q(-c), rhs}});
}

void check_relations(const Presentation& p) {
    for (size_t k = 0; k < p.relations.size(); ++k) {
        const auto& r = p.relations[k];
        if (r.empty()) throw InadmissibleRelation("relation " + std::to_string(k) + " is empty");
        for (const auto& t : r) {
            if (!t.path.trivial()) (void)make_path(p.quiver, t.path.arrows);
            if (t.path.src != r[0].path.src || t.path.tgt != r[0].path.tgt)
                throw InadmissibleRelation("relation " + std::to_string(k) + " mixes paths with different endpoints");
            if (p.strict && t.path.length() < 2)
                throw InadmissibleRelation("relation " + std::to_string(k) + " has a term of length < 2: " +
                                           format_path(p.quiver, t.path));
        }
    }
}

namespace {

// deglex: length, then letter ranks; trivial paths by vertex
struct PathLess {
    const std::vector<int>* rank;
    bool operator()(const Path& a, const Path& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.trivial()) return a.src < b.src;
        for (int k = 0; k < a.length(); ++k) {
            int x = (*rank)[a.arrows[k]], y = (*rank)[b.arrows[k]];
            if (x != y) return x < y;
        }
        return false;
    }
};

using Poly = std::map<Path, Q, PathLess>;

struct Rule {
    Path lead;
    Poly tail;  // lead = tail
    bool alive = true;
};

class Rewriter {
public:
    Rewriter(const Presentation& p) : pres_(p), less_{&rank_}, dead_(p.quiver.nv(), false) {
        rank_ = p.arrow_rank;
        if (rank_.empty())
            for (int a = 0; a < p.quiver.na(); ++a) rank_.push_back(a);
        by_first_.resize(p.quiver.na());
        by_last_.resize(p.quiver.na());
    }

    Poly empty() const { return Poly(less_); }

    bool touches_dead(const Path& p) const {
        if (dead_[p.src] || dead_[p.tgt]) return true;
        for (int a : p.arrows)
            if (dead_[pres_.quiver.arrows[a].src] || dead_[pres_.quiver.arrows[a].tgt]) return true;
        return false;
    }

    void add_term(Poly& f, const Path& p, const Q& c) const {
        if (c == 0 || touches_dead(p)) return;
        auto [it, fresh] = f.emplace(p, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) f.erase(it);
        }
    }

    // position of a rule lead inside w, or (-1, -1)
    std::pair<int, int> find_divisor(const Path& w) const {
        for (int i = 0; i < w.length(); ++i)
            for (int r : by_first_[w.arrows[i]]) {
                const auto& L = rules_[r].lead.arrows;
                if (!rules_[r].alive || i + static_cast<int>(L.size()) > w.length()) continue;
                if (std::equal(L.begin(), L.end(), w.arrows.begin() + i)) return {r, i};
            }
        return {-1, -1};
    }

    Poly reduce(Poly f) const {
        Poly out = empty();
        while (!f.empty()) {
            auto it = std::prev(f.end());
            Path w = it->first;
            Q c = it->second;
            f.erase(it);
            if (touches_dead(w)) continue;
            auto [r, i] = find_divisor(w);
            if (r < 0) {
                out.emplace(w, c);
                continue;
            }
            int len = rules_[r].lead.length();
            Path left{w.src, w.src, {w.arrows.begin(), w.arrows.begin() + i}};
            if (!left.arrows.empty()) left.tgt = pres_.quiver.arrows[left.arrows.back()].tgt;
            Path right{0, w.tgt, {w.arrows.begin() + i + len, w.arrows.end()}};
            right.src = right.arrows.empty() ? w.tgt : pres_.quiver.arrows[right.arrows.front()].src;
            for (const auto& [t, tc] : rules_[r].tail) add_term(f, concat(concat(left, t), right), c * tc);
        }
        return out;
    }

    void run() {
        auto cmp = [this](const Poly& a, const Poly& b) {
            return less_(b.rbegin()->first, a.rbegin()->first);  // smallest lead on top
        };
        std::priority_queue<Poly, std::vector<Poly>, decltype(cmp)> queue(cmp);
        auto push = [&](Poly f) {
            if (!f.empty()) queue.push(std::move(f));
        };
        for (const auto& r : pres_.relations) {
            Poly f = empty();
            for (const auto& t : r) add_term(f, t.path, t.coef);
            push(std::move(f));
        }
        while (!queue.empty()) {
            Poly f = reduce(queue.top());
            queue.pop();
            if (f.empty()) continue;
            Path lead = f.rbegin()->first;
            Q lc = f.rbegin()->second;
            if (lead.length() >= pres_.max_len)
                throw HorizonExceeded("rewriting reached the length horizon " + std::to_string(pres_.max_len),
                                      format_path(pres_.quiver, lead));
            if (lead.trivial()) {
                // e_v = 0: restart with every rule requeued
                dead_[lead.src] = true;
                for (auto& rule : rules_)
                    if (rule.alive) push(as_poly(rule));
                rules_.clear();
                for (auto& v : by_first_) v.clear();
                for (auto& v : by_last_) v.clear();
                continue;
            }
            Rule rule{lead, empty()};
            for (const auto& [t, c] : f)
                if (!(t == lead)) rule.tail.emplace(t, -c / lc);
            for (size_t k = 0; k < rules_.size(); ++k) {
                if (!rules_[k].alive) continue;
                if (contains(rules_[k].lead, lead)) {
                    rules_[k].alive = false;
                    push(as_poly(rules_[k]));
                }
            }
            int id = static_cast<int>(rules_.size());
            rules_.push_back(std::move(rule));
            by_first_[lead.arrows.front()].push_back(id);
            by_last_[lead.arrows.back()].push_back(id);
            for (int k = 0; k <= id; ++k) {
                if (!rules_[k].alive) continue;
                for (auto& s : overlaps(k, id)) push(std::move(s));
                if (k != id)
                    for (auto& s : overlaps(id, k)) push(std::move(s));
            }
        }
    }

    FDAlgebra build() const {
        const Quiver& q = pres_.quiver;
        FDAlgebra A;
        A.name = pres_.name;
        A.quiver = q;
        A.relations = pres_.relations;
        A.admissible = pres_.strict;
        std::vector<Path> frontier;
        for (int v = 0; v < q.nv(); ++v)
            if (!dead_[v]) frontier.push_back(trivial_path(v));
        std::vector<Path> basis = frontier;
        while (!frontier.empty()) {
            std::vector<Path> next;
            for (const auto& w : frontier)
                for (int a = 0; a < q.na(); ++a) {
                    if (q.arrows[a].src != w.tgt || dead_[q.arrows[a].tgt]) continue;
                    Path x = w;
                    x.arrows.push_back(a);
                    x.tgt = q.arrows[a].tgt;
                    if (!is_normal_extension(x)) continue;
                    if (x.length() >= pres_.max_len)
                        throw HorizonExceeded("normal paths reach the length horizon " + std::to_string(pres_.max_len),
                                              format_path(q, x));
                    next.push_back(x);
                }
            basis.insert(basis.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        std::sort(basis.begin(), basis.end(), less_);
        A.basis = basis;
        std::map<Path, int, PathLess> index(less_);
        for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
        auto to_svec = [&](const Poly& f) {
            SVec s;
            for (const auto& [p, c] : f) s.emplace_back(index.at(p), c);
            std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            return s;
        };
        int n = static_cast<int>(basis.size());
        A.table.assign(static_cast<size_t>(n) * n, {});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (basis[i].tgt != basis[j].src) continue;
                Poly f = empty();
                add_term(f, concat(basis[i], basis[j]), 1);
                A.table[static_cast<size_t>(i) * n + j] = to_svec(reduce(std::move(f)));
            }
        A.idem_index.assign(q.nv(), -1);
        for (int v = 0; v < q.nv(); ++v)
            if (!dead_[v]) A.idem_index[v] = index.at(trivial_path(v));
        for (int a = 0; a < q.na(); ++a) {
            Poly f = empty();
            add_term(f, make_path(q, {a}), 1);
            A.arrow_value.push_back(to_dense(to_svec(reduce(std::move(f))), n));
        }
        return A;
    }

private:
    Poly as_poly(const Rule& r) const {
        Poly f = empty();
        add_term(f, r.lead, 1);
        for (const auto& [t, c] : r.tail) add_term(f, t, -c);
        return f;
    }

    static bool contains(const Path& big, const Path& small) {
        if (small.length() > big.length()) return false;
        return std::search(big.arrows.begin(), big.arrows.end(), small.arrows.begin(), small.arrows.end()) !=
               big.arrows.end();
    }

    // suffix of lead(i) equals prefix of lead(j): A X = lead(i), X C = lead(j)
    std::vector<Poly> overlaps(int i, int j) const {
        std::vector<Poly> out;
        const auto& L1 = rules_[i].lead.arrows;
        const auto& L2 = rules_[j].lead.arrows;
        const Quiver& q = pres_.quiver;
        int n1 = static_cast<int>(L1.size()), n2 = static_cast<int>(L2.size());
        for (int k = 1; k < std::min(n1, n2); ++k) {
            if (!std::equal(L1.end() - k, L1.end(), L2.begin())) continue;
            Path A = make_path(q, {L1.begin(), L1.end() - k});
            Path C = make_path(q, {L2.begin() + k, L2.end()});
            Poly f = empty();
            for (const auto& [t, c] : rules_[j].tail) add_term(f, concat(A, t), c);
            for (const auto& [t, c] : rules_[i].tail) add_term(f, concat(t, C), -c);
            if (!f.empty()) out.push_back(std::move(f));
        }
        return out;
    }

    bool is_normal_extension(const Path& x) const {
        int last = x.arrows.back();
        for (int r : by_last_[last]) {
            const auto& L = rules_[r].lead.arrows;
            if (!rules_[r].alive || L.size() > x.arrows.size()) continue;
            if (std::equal(L.begin(), L.end(), x.arrows.end() - L.size())) return false;
        }
        return true;
    }

    const Presentation& pres_;
    std::vector<int> rank_;
    PathLess less_;
    std::vector<bool> dead_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> by_first_, by_last_;
};

}  // namespace

FDAlgebra normalize(const Presentation& p) {
    check_relations(p);
    Rewriter rw(p);
    rw.run();
    return rw.build();
}

Vec FDAlgebra::mul(const Vec& a, const Vec& b) const {
    int n = dim();
    Vec out(n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Q c = a[i] * b[j];
            for (const auto& [k, v] : product(i, j)) out[k] += c * v;
        }
    }
    return out;
}

Vec FDAlgebra::unit(int i) const {
    Vec v(dim());
    v[i] = 1;
    return v;
}

Vec FDAlgebra::idem(int v) const {
    Vec x(dim());
    if (idem_index[v] >= 0) x[idem_index[v]] = 1;
    return x;
}

Vec FDAlgebra::one() const {
    Vec x(dim());
    for (int v = 0; v < nv(); ++v)
        if (idem_index[v] >= 0) x[idem_index[v]] = 1;
    return x;
}

Vec FDAlgebra::path_value(const Path& p) const {
    if (p.trivial()) return idem(p.src);
    Vec x = arrow_value[p.arrows[0]];
    for (size_t k = 1; k < p.arrows.size(); ++k) x = mul(x, arrow_value[p.arrows[k]]);
    return x;
}

std::string FDAlgebra::format(const Vec& x) const {
    std::string s;
    for (int i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        std::string c = x[i] == 1 ? "" : x[i] == -1 ? "-" : to_string(x[i]) + "*";
        if (!s.empty()) s += " + ";
        std::string w = basis_name(i);
        if (basis[i].length() > 1) w = "(" + w + ")";
        s += c + w;
    }
    return s.empty() ? "0" : s;
}

FDAlgebra FDAlgebra::opposite() const {
    FDAlgebra o;
    o.name = name + "^op";
    o.quiver = quiver;
    for (auto& a : o.quiver.arrows) std::swap(a.src, a.tgt);
    for (const auto& p : basis) {
        Path r{p.tgt, p.src, {p.arrows.rbegin(), p.arrows.rend()}};
        o.basis.push_back(r);
    }
    int n = dim();
    o.table.assign(static_cast<size_t>(n) * n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) o.table[static_cast<size_t>(i) * n + j] = product(j, i);
    o.idem_index = idem_index;
    o.arrow_value = arrow_value;
    for (const auto& r : relations) {
        Relation rr;
        for (const auto& t : r) rr.push_back({t.coef, Path{t.path.tgt, t.path.src, {t.path.arrows.rbegin(), t.path.arrows.rend()}}});
        o.relations.push_back(rr);
    }
    o.admissible = admissible;
    return o;
}

}  // namespace klrwb
