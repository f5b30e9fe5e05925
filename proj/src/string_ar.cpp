#include "klrwb/string_ar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace klrwb {

int letter_src(const Quiver& q, const Letter& l) {
    const Arrow& a = q.arrows.at(l.arrow);
    return l.inverse ? a.tgt : a.src;
}

int letter_tgt(const Quiver& q, const Letter& l) {
    const Arrow& a = q.arrows.at(l.arrow);
    return l.inverse ? a.src : a.tgt;
}

int string_end(const Quiver& q, const StringWord& s) {
    return s.letters.empty() ? s.start : letter_tgt(q, s.letters.back());
}

StringWord inverse_string(const Quiver& q, const StringWord& s) {
    StringWord r;
    r.start = string_end(q, s);
    for (auto it = s.letters.rbegin(); it != s.letters.rend(); ++it) r.letters.push_back({it->arrow, !it->inverse});
    return r;
}

StringWord concat_strings(const StringWord& a, const StringWord& b) {
    StringWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

std::vector<std::string> string_tokens(const Quiver& q, const StringWord& s) {
    std::vector<std::string> out;
    for (const auto& l : s.letters) out.push_back((l.inverse ? "~" : "") + q.arrows.at(l.arrow).name);
    return out;
}

std::string format_string(const Quiver& q, const StringWord& s) {
    if (s.letters.empty()) return "e" + q.vertices.at(s.start);
    std::string out;
    for (const auto& t : string_tokens(q, s)) out += (out.empty() ? "" : " ") + t;
    return out;
}

StringWord parse_string(const Quiver& q, const std::vector<std::string>& tokens) {
    StringWord s;
    if (tokens.size() == 1 && !tokens[0].empty() && tokens[0][0] == 'e') {
        std::string v = tokens[0].substr(tokens[0].rfind(':') == std::string::npos ? 1 : tokens[0].rfind(':') + 1);
        bool is_arrow = false;
        for (const auto& a : q.arrows) is_arrow = is_arrow || a.name == tokens[0];
        if (!is_arrow) {
            s.start = q.vertex_index(v);
            return s;
        }
    }
    if (tokens.empty()) throw std::invalid_argument("empty string word");
    for (const auto& t : tokens) {
        bool inv = !t.empty() && t[0] == '~';
        s.letters.push_back({q.arrow_index(inv ? t.substr(1) : t), inv});
    }
    s.start = letter_src(q, s.letters.front());
    return s;
}

StringWord parse_string(const Quiver& q, const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    return parse_string(q, tokens);
}

StringRules::StringRules(const FDAlgebra& a) : a_(&a) {
    BiserialReport r = is_special_biserial(a);
    if (!r.ok) {
        std::string msg = a.name + " is not special biserial";
        for (const auto& w : r.witnesses) msg += "; " + w;
        throw NotSpecialBiserial(msg);
    }
    std::vector<Vec> soc;
    if (is_self_injective(a)) soc = socle_algebra(a);
    auto good = [&](const Vec& v) { return !is_zero(v) && (soc.empty() || !in_span(soc, v)); };
    std::vector<std::pair<std::vector<int>, Vec>> todo;
    for (int b = 0; b < a.quiver.na(); ++b)
        if (good(a.arrow_value[b])) todo.push_back({{b}, a.arrow_value[b]});
    while (!todo.empty()) {
        auto [p, v] = std::move(todo.back());
        todo.pop_back();
        int t = a.quiver.arrows[p.back()].tgt;
        for (int b = 0; b < a.quiver.na(); ++b) {
            if (a.quiver.arrows[b].src != t) continue;
            Vec w = a.mul(v, a.arrow_value[b]);
            if (!good(w)) continue;
            auto p2 = p;
            p2.push_back(b);
            todo.push_back({std::move(p2), std::move(w)});
        }
        allowed_.insert(std::move(p));
    }
}

namespace {

// path of the run ending at position k (inclusive), as a then-b arrow sequence
std::vector<int> run_ending_at(const StringWord& s, int k) {
    bool inv = s.letters[k].inverse;
    int i = k;
    while (i > 0 && s.letters[i - 1].inverse == inv) --i;
    std::vector<int> p;
    for (int j = i; j <= k; ++j) p.push_back(s.letters[j].arrow);
    if (inv) std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace

bool StringRules::extendable(const StringWord& s, const Letter& l) const {
    const Quiver& q = a_->quiver;
    if (letter_src(q, l) != string_end(q, s)) return false;
    if (!s.letters.empty()) {
        const Letter& p = s.letters.back();
        if (p.arrow == l.arrow && p.inverse != l.inverse) return false;
    }
    StringWord t = s;
    t.letters.push_back(l);
    return allowed_run(run_ending_at(t, t.length() - 1));
}

bool StringRules::valid(const StringWord& s, std::string* why) const {
    const Quiver& q = a_->quiver;
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (s.start < 0 || s.start >= q.nv()) return fail("start vertex out of range");
    if (s.letters.empty()) {
        if (a_->idem_index[s.start] < 0) return fail("vertex idempotent is zero");
        return true;
    }
    StringWord pre{s.start, {}};
    for (const auto& l : s.letters) {
        if (l.arrow < 0 || l.arrow >= q.na()) return fail("arrow index out of range");
        if (!extendable(pre, l)) return fail("invalid at letter " + std::to_string(pre.length() + 1));
        pre.letters.push_back(l);
    }
    return true;
}

bool StringRules::is_band(const StringWord& w) const {
    const Quiver& q = a_->quiver;
    int n = w.length();
    if (n == 0 || string_end(q, w) != w.start) return false;
    bool dir = false, inv = false;
    for (const auto& l : w.letters) (l.inverse ? inv : dir) = true;
    if (!dir || !inv) return false;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (int i = 0; i + d < n && periodic; ++i) periodic = w.letters[i] == w.letters[i + d];
        if (periodic) return false;
    }
    return valid(concat_strings(w, w));
}

namespace {

int inverse_count(const StringWord& s) {
    return static_cast<int>(std::count_if(s.letters.begin(), s.letters.end(), [](const Letter& l) { return l.inverse; }));
}

// length, inverse letters, letters, start
bool string_less(const StringWord& a, const StringWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (inverse_count(a) != inverse_count(b)) return inverse_count(a) < inverse_count(b);
    if (a.letters != b.letters) return a.letters < b.letters;
    return a.start < b.start;
}

StringWord rotate(const Quiver& q, const StringWord& w, int r) {
    StringWord out;
    out.letters.assign(w.letters.begin() + r, w.letters.end());
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.begin() + r);
    out.start = letter_src(q, out.letters.front());
    return out;
}

}  // namespace

StringWord canonical_string(const Quiver& q, const StringWord& s) {
    StringWord r = inverse_string(q, s);
    return string_less(r, s) ? r : s;
}

StringWord canonical_band(const Quiver& q, const StringWord& w) {
    StringWord best = w;
    for (const StringWord& v : {w, inverse_string(q, w)})
        for (int r = 0; r < v.length(); ++r) {
            StringWord c = rotate(q, v, r);
            if (string_less(c, best)) best = c;
        }
    return best;
}

std::vector<StringWord> enumerate_strings(const FDAlgebra& a, int maxlen) {
    StringRules rules(a);
    const Quiver& q = a.quiver;
    std::vector<StringWord> out;
    std::function<void(StringWord&)> dfs = [&](StringWord& s) {
        if (s == canonical_string(q, s)) out.push_back(s);
        if (s.length() == maxlen) return;
        for (int b = 0; b < q.na(); ++b)
            for (bool inv : {false, true}) {
                Letter l{b, inv};
                if (!rules.extendable(s, l)) continue;
                s.letters.push_back(l);
                dfs(s);
                s.letters.pop_back();
            }
    };
    for (int v = 0; v < q.nv(); ++v) {
        if (a.idem_index[v] < 0) continue;
        StringWord s{v, {}};
        dfs(s);
    }
    std::sort(out.begin(), out.end(), string_less);
    return out;
}

std::vector<StringWord> enumerate_bands(const FDAlgebra& a, int maxlen) {
    StringRules rules(a);
    const Quiver& q = a.quiver;
    std::vector<StringWord> out;
    std::function<void(StringWord&)> dfs = [&](StringWord& s) {
        if (s.length() > 0 && string_end(q, s) == s.start && rules.is_band(s) && canonical_band(q, s) == s)
            out.push_back(s);
        if (s.length() == maxlen) return;
        for (int b = 0; b < q.na(); ++b)
            for (bool inv : {false, true}) {
                Letter l{b, inv};
                if (!rules.extendable(s, l)) continue;
                s.letters.push_back(l);
                dfs(s);
                s.letters.pop_back();
            }
    };
    for (int v = 0; v < q.nv(); ++v) {
        if (a.idem_index[v] < 0) continue;
        StringWord s{v, {}};
        dfs(s);
    }
    std::sort(out.begin(), out.end(), string_less);
    return out;
}

AModule string_module(const FDAlgebra& a, const StringWord& s) {
    StringRules rules(a);
    std::string why;
    if (!rules.valid(s, &why)) throw std::invalid_argument("invalid string " + format_string(a.quiver, s) + ": " + why);
    const Quiver& q = a.quiver;
    AModule m;
    m.name = "M(" + format_string(q, s) + ")";
    m.dim = s.length() + 1;
    m.vert.push_back(s.start);
    for (const auto& l : s.letters) m.vert.push_back(letter_tgt(q, l));
    m.arrows.assign(q.na(), Mat(m.dim, m.dim));
    for (int k = 1; k <= s.length(); ++k) {
        const Letter& l = s.letters[k - 1];
        if (l.inverse)
            m.arrows[l.arrow](k, k - 1) = 1;
        else
            m.arrows[l.arrow](k - 1, k) = 1;
    }
    std::string d = module_defect(a, m);
    if (!d.empty()) throw MathError("string module " + m.name + " violates a relation: " + d);
    return m;
}

AModule band_module(const FDAlgebra& a, const StringWord& w, const Q& t) {
    StringRules rules(a);
    if (!rules.is_band(w)) throw std::invalid_argument("not a band: " + format_string(a.quiver, w));
    if (t == 0) throw std::invalid_argument("band parameter must be nonzero");
    const Quiver& q = a.quiver;
    int n = w.length();
    AModule m;
    m.name = "B(" + format_string(q, w) + ";" + t.get_str() + ")";
    m.dim = n;
    for (int k = 0; k < n; ++k) m.vert.push_back(letter_src(q, w.letters[k]));
    m.arrows.assign(q.na(), Mat(n, n));
    for (int k = 1; k <= n; ++k) {
        const Letter& l = w.letters[k - 1];
        Q c = k == n ? t : Q(1);
        int from = k - 1, to = k % n;
        if (l.inverse)
            m.arrows[l.arrow](to, from) += c;
        else
            m.arrows[l.arrow](from, to) += c;
    }
    std::string d = module_defect(a, m);
    if (!d.empty()) throw MathError("band module " + m.name + " violates a relation: " + d);
    return m;
}

std::vector<StringWord> composite_bands(const FDAlgebra& a, const StringWord& x, const StringWord& y, int q) {
    if (q < 1) throw std::invalid_argument("composite word length must be >= 1");
    const Quiver& qv = a.quiver;
    int maxlen = q * std::max(x.length(), y.length());
    // v splits into exactly q composite letters, both of them used
    std::function<bool(const StringWord&, size_t, int, bool, bool)> parse = [&](const StringWord& v, size_t pos,
                                                                               int used, bool sx, bool sy) {
        if (pos == v.letters.size()) return used == q && sx && sy;
        if (used == q) return false;
        for (int which = 0; which < 2; ++which) {
            const StringWord& tok = which ? y : x;
            if (pos + tok.letters.size() > v.letters.size()) continue;
            if (!std::equal(tok.letters.begin(), tok.letters.end(), v.letters.begin() + pos)) continue;
            if (parse(v, pos + tok.letters.size(), used + 1, sx || !which, sy || which)) return true;
        }
        return false;
    };
    std::vector<StringWord> out;
    for (const auto& w : enumerate_bands(a, maxlen)) {
        bool hit = false;
        for (const StringWord& v : {w, inverse_string(qv, w)})
            for (int r = 0; r < v.length() && !hit; ++r) hit = parse(rotate(qv, v, r), 0, 0, false, false);
        if (hit) out.push_back(w);
    }
    return out;
}

bool is_stable_brick(const FDAlgebra& a, const AModule& m) {
    if (is_projective_module(a, m)) throw std::invalid_argument("is_stable_brick: module is projective");
    if (!is_indecomposable(a, m)) throw std::invalid_argument("is_stable_brick: module is decomposable");
    if (stable_hom_dim(a, m, m) != 1) return false;
    AModule t = ar_translate(a, m);
    return !is_isomorphic(a, t, m);
}

std::vector<SosbPair> sosb_pairs(const FDAlgebra& a, int maxlen) {
    std::vector<StringWord> words;
    std::vector<AModule> mods;
    for (const auto& s : enumerate_strings(a, maxlen)) {
        AModule m = string_module(a, s);
        if (is_projective_module(a, m) || !is_stable_brick(a, m)) continue;
        words.push_back(s);
        mods.push_back(std::move(m));
    }
    std::vector<SosbPair> out;
    for (size_t i = 0; i < mods.size(); ++i)
        for (size_t j = i + 1; j < mods.size(); ++j)
            if (stable_hom_dim(a, mods[i], mods[j]) == 0 && stable_hom_dim(a, mods[j], mods[i]) == 0)
                out.push_back({words[i], words[j]});
    return out;
}

AModule s_projective(const FDAlgebra& a, const AModule& x) {
    if (is_projective_module(a, x)) throw std::invalid_argument("s_projective: module is projective");
    AModule r = ar_translate_inv(a, syzygy(a, x));
    r.name = "tau^-1 Omega " + x.name;
    return r;
}

}  // namespace klrwb
