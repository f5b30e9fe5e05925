// klrwb: dims, weyl, verify, construct, algebra, strings, report
#include "klrwb/acceptance.hpp"
#include "klrwb/catalog.hpp"
#include "klrwb/io.hpp"
#include "klrwb/klr.hpp"
#include "klrwb/string_ar.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>

using namespace klrwb;

namespace {

constexpr int kExitOk = 0, kExitUsage = 1, kExitMath = 2;

struct Table {
    std::string title;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<Table> tables;
    void fact(const std::string& k, const std::string& v) { facts.push_back({k, v}); }
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render(const Report& r, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        Json j = Json::object();
        for (const auto& [k, v] : r.facts) j[k] = v;
        for (const auto& t : r.tables) {
            Json rows = Json::array();
            for (const auto& row : t.rows) {
                Json o = Json::object();
                for (size_t i = 0; i < t.headers.size() && i < row.size(); ++i) o[t.headers[i]] = row[i];
                rows.push_back(o);
            }
            j[t.title] = rows;
        }
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        if (!r.facts.empty()) {
            os << "key,value\n";
            for (const auto& [k, v] : r.facts) os << csv_cell(k) << "," << csv_cell(v) << "\n";
        }
        for (const auto& t : r.tables) {
            if (os.tellp() > 0) os << "\n";
            for (size_t i = 0; i < t.headers.size(); ++i) os << (i ? "," : "") << csv_cell(t.headers[i]);
            os << "\n";
            for (const auto& row : t.rows) {
                for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
                os << "\n";
            }
        }
    } else {
        for (const auto& [k, v] : r.facts) os << "- " << k << ": " << v << "\n";
        for (const auto& t : r.tables) {
            os << "\n### " << t.title << "\n\n|";
            for (const auto& h : t.headers) os << " " << h << " |";
            os << "\n|";
            for (size_t i = 0; i < t.headers.size(); ++i) os << "---|";
            os << "\n";
            for (const auto& row : t.rows) {
                os << "|";
                for (const auto& c : row) os << " " << c << " |";
                os << "\n";
            }
        }
    }
    return os.str();
}

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw CLI::ValidationError("empty entry in list \"" + s + "\"");
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw CLI::ValidationError("not an integer: " + tok);
        out.push_back(v);
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (long v : parse_longs(s)) out.push_back(static_cast<int>(v));
    return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string vec_str(const std::vector<int>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

struct Config {
    std::string format = "md";
    std::string lambda = "1";
    int ell = 1;
    int n = -1;
    std::string beta, nu, nu2, word;
    std::string zoo, file, out, catalog, exps;
    int hook = 1;
    int maxlen = 4;
    bool bands = false, tau = false, sosb = false, strings = false, all_zoo = false;
    std::string only;
    std::uint64_t seed = 20240611;
    Q lam() const { return parse_rational(lambda); }
};

// ---- dims

int cmd_dims(const Config& c) {
    Report r;
    r.fact("ell", std::to_string(c.ell));
    if (!c.nu.empty()) {
        ResidueSeq a = parse_residues(c.nu), b = parse_residues(c.nu2.empty() ? c.nu : c.nu2);
        if (a.size() != b.size()) throw CLI::ValidationError("--nu and --nu2 must have the same length");
        for (int x : a)
            if (x < 0 || x > c.ell) throw CLI::ValidationError("residue out of range in --nu");
        for (int x : b)
            if (x < 0 || x > c.ell) throw CLI::ValidationError("residue out of range in --nu2");
        r.fact("nu", format_residues(a));
        r.fact("nu2", format_residues(b));
        r.fact("dim e(nu2) R e(nu)", std::to_string(dim_idempotent_hom(c.ell, a, b)));
    } else if (!c.beta.empty()) {
        auto beta = parse_longs(c.beta);
        if (static_cast<int>(beta.size()) != c.ell + 1) throw CLI::ValidationError("--beta needs ell+1 coefficients");
        for (long x : beta)
            if (x < 0) throw CLI::ValidationError("--beta coefficients must be nonnegative");
        r.fact("beta", c.beta);
        r.fact("dim R(beta)", std::to_string(dim_block(c.ell, beta)));
    } else {
        if (c.n < 0) throw CLI::ValidationError("dims needs --n, --beta or --nu");
        Table t{"blocks", {"beta", "dim"}, {}};
        std::vector<long> beta(c.ell + 1, 0);
        std::uint64_t total = 0;
        // every content vector summing to n
        std::function<void(int, long)> rec = [&](int i, long left) {
            if (i == c.ell) {
                beta[i] = left;
                auto d = dim_block(c.ell, beta);
                if (d) {
                    std::string b;
                    for (size_t k = 0; k < beta.size(); ++k) b += (k ? "," : "") + std::to_string(beta[k]);
                    t.rows.push_back({b, std::to_string(d)});
                    total += d;
                }
                return;
            }
            for (long v = left; v >= 0; --v) {
                beta[i] = v;
                rec(i + 1, left - v);
            }
        };
        rec(0, c.n);
        r.fact("n", std::to_string(c.n));
        r.fact("total", std::to_string(total));
        r.fact("n!", std::to_string(dim_full(c.ell, c.n)));
        r.tables.push_back(std::move(t));
    }
    std::cout << render(r, c.format);
    return kExitOk;
}

// ---- weyl

int cmd_weyl(const Config& c) {
    CartanDatum cd(c.ell);
    Report r;
    r.fact("ell", std::to_string(c.ell));
    if (!c.beta.empty()) {
        auto beta = parse_longs(c.beta);
        if (static_cast<int>(beta.size()) != c.ell + 1) throw CLI::ValidationError("--beta needs ell+1 coefficients");
        Weight mu = lambda0(c.ell);
        for (int i = 0; i <= c.ell; ++i) mu.alpha[i] -= beta[i];
        r.fact("Lambda0 - beta", format_weight(mu));
        auto w = orbit_search(cd, mu);
        if (!w) {
            r.fact("orbit", "not of the form w(Lambda0) - k delta (search depth 20)");
        } else {
            std::vector<int> word = w->word;
            r.fact("word", vec_str(word));
            r.fact("k", std::to_string(w->k));
        }
    } else {
        std::vector<int> word = c.word.empty() ? std::vector<int>{} : parse_ints(c.word);
        for (int i : word)
            if (i < 0 || i > c.ell) throw CLI::ValidationError("reflection index out of range");
        Weight w = apply_word(cd, word, lambda0(c.ell));
        r.fact("word", vec_str(word));
        r.fact("w(Lambda0)", format_weight(w));
        Weight diff = lambda0(c.ell) - w;
        std::string b;
        for (size_t k = 0; k < diff.alpha.size(); ++k) b += (k ? "," : "") + std::to_string(diff.alpha[k]);
        r.fact("Lambda0 - w(Lambda0) (root coefficients)", b);
        Table t{"pairings", {"i", "<h_i, w(Lambda0)>"}, {}};
        for (int i = 0; i <= c.ell; ++i) t.rows.push_back({std::to_string(i), std::to_string(pair_h(cd, i, w))});
        r.tables.push_back(std::move(t));
    }
    std::cout << render(r, c.format);
    return kExitOk;
}

// ---- verify / construct

MatrixRep zoo_rep(const Config& c) { return build_zoo(c.zoo, c.lam(), c.ell, c.hook); }

int cmd_verify(const Config& c) {
    MatrixRep rep;
    if (!c.file.empty())
        rep = rep_from_json(read_json_file(c.file));
    else if (!c.zoo.empty())
        rep = zoo_rep(c);
    else
        throw CLI::ValidationError("verify needs --zoo or --file");
    auto res = verify_rep(KLRPresentation::normalized(rep.ell, rep.n, rep.lam), rep);
    Report r;
    r.fact("module", rep.name);
    r.fact("ell", std::to_string(rep.ell));
    r.fact("n", std::to_string(rep.n));
    r.fact("lambda", to_string(rep.lam));
    r.fact("dim", std::to_string(rep.dim));
    r.fact("result", res.ok() ? "PASS" : "FAIL");
    Table fam{"relation families", {"family", "holds"}, {}};
    for (const auto& [f, ok] : res.families) fam.rows.push_back({f, ok ? "yes" : "no"});
    r.tables.push_back(std::move(fam));
    if (!res.ok()) {
        Table t{"failures", {"family", "relation"}, {}};
        for (const auto& f : res.failures) t.rows.push_back({f.family, f.relation});
        r.tables.push_back(std::move(t));
    }
    std::cout << render(r, c.format);
    return res.ok() ? kExitOk : kExitMath;
}

int cmd_construct(const Config& c) {
    Json out;
    if (c.all_zoo) {
        out = Json::array();
        for (const auto& name : zoo_names()) {
            if (name == "L" || name == "S") continue;
            if (name == "T0" && c.lam() != 0) continue;
            out.push_back(rep_to_json(build_zoo(name, c.lam())));
        }
    } else {
        if (c.zoo.empty()) throw CLI::ValidationError("construct needs --zoo or --all");
        out = rep_to_json(zoo_rep(c));
    }
    if (c.out.empty())
        std::cout << out.dump(2) << "\n";
    else
        write_json_file(c.out, out);
    return kExitOk;
}

// ---- algebra / strings

struct Loaded {
    Presentation pres;
    std::vector<std::pair<std::string, Q>> trace;
};

Loaded load_algebra(const Config& c) {
    if (!c.file.empty()) {
        auto f = presentation_from_json(read_json_file(c.file));
        return {f.pres, f.trace};
    }
    if (c.catalog.empty()) throw CLI::ValidationError("need --catalog or --file");
    auto cat = catalog(c.catalog, c.exps.empty() ? std::vector<int>{} : parse_ints(c.exps), c.lam());
    return {cat.pres, cat.trace};
}

int cmd_algebra(const Config& c) {
    Loaded l = load_algebra(c);
    FDAlgebra a = normalize(l.pres);
    Report r;
    r.fact("name", a.name);
    r.fact("dim", std::to_string(a.dim()));
    auto cm = cartan_matrix_of(a);
    std::string cms = "[";
    for (size_t i = 0; i < cm.size(); ++i) cms += (i ? "," : "") + vec_str(cm[i]);
    r.fact("cartan matrix", cms + "]");
    auto z = center(a);
    r.fact("center dim", std::to_string(z.size()));
    r.fact("socle dim", std::to_string(socle_algebra(a).size()));
    r.fact("radical dim", std::to_string(jacobson_radical(a).size()));
    std::optional<TraceForm> sym;
    if (!l.trace.empty())
        sym = is_symmetric(a, trace_from_paths(a, l.trace));
    else
        sym = is_symmetric(a);
    r.fact("symmetric", yes(sym.has_value()));
    r.fact("self-injective", yes(is_self_injective(a)));
    auto sb = is_special_biserial(a), st = is_stably_biserial(a);
    r.fact("special biserial", yes(sb.ok));
    r.fact("stably biserial", yes(st.ok));
    Quiver q = quiver_of_algebra(a);
    std::string arrows;
    for (const auto& ar : q.arrows)
        arrows += (arrows.empty() ? "" : ", ") + ar.name + ": " + q.vertices[ar.src] + "->" + q.vertices[ar.tgt];
    r.fact("quiver", arrows.empty() ? "no arrows" : arrows);
    auto w = wild_configuration_witness(q);
    std::string ws = "none";
    if (w) {
        ws = "vertex " + q.vertices[w->vertex] + ", loops";
        for (const auto& x : w->loops) ws += " " + x;
        ws += ", extra " + w->extra;
    }
    r.fact("wild witness", ws);
    Table zt{"center basis", {"element"}, {}};
    for (const auto& x : z) zt.rows.push_back({a.format(x)});
    r.tables.push_back(std::move(zt));
    if (!sb.ok) {
        Table t{"special biserial violations", {"condition"}, {}};
        for (const auto& x : sb.witnesses) t.rows.push_back({x});
        r.tables.push_back(std::move(t));
    }
    std::cout << render(r, c.format);
    return kExitOk;
}

int cmd_strings(const Config& c) {
    Loaded l = load_algebra(c);
    FDAlgebra a = normalize(l.pres);
    const Quiver& q = a.quiver;
    Report r;
    r.fact("algebra", a.name);
    r.fact("maxlen", std::to_string(c.maxlen));
    bool any = c.bands || c.tau || c.sosb;
    if (c.strings || !any) {
        Table t{"strings", {"string", "dim"}, {}};
        for (const auto& s : enumerate_strings(a, c.maxlen))
            t.rows.push_back({format_string(q, s), std::to_string(s.length() + 1)});
        r.fact("strings", std::to_string(t.rows.size()));
        r.tables.push_back(std::move(t));
    }
    if (c.bands) {
        Table t{"bands", {"band"}, {}};
        for (const auto& b : enumerate_bands(a, c.maxlen)) t.rows.push_back({format_string(q, b)});
        r.fact("bands", std::to_string(t.rows.size()));
        r.tables.push_back(std::move(t));
    }
    if (c.tau) {
        // Ae_t/Aa for every arrow a, Ae_v/Soc, Rad Ae_v and the simples
        std::vector<std::pair<std::string, AModule>> cand;
        for (int i = 0; i < q.na(); ++i) {
            int t = q.arrows[i].tgt;
            cand.push_back({"Ae" + q.vertices[t] + "/A" + q.arrows[i].name,
                            cyclic_quotient(a, t, {a.arrow_value[i]})});
        }
        for (int v = 0; v < q.nv(); ++v) {
            AModule p = projective(a, v);
            cand.push_back({"Ae" + q.vertices[v] + "/Soc", quotient(a, p, module_socle(a, p))});
            cand.push_back({"Rad Ae" + q.vertices[v], radical(a, p)});
            cand.push_back({"S" + q.vertices[v], simple_module(a, v)});
        }
        Table t{"tau", {"module", "dim", "tau", "tau dim"}, {}};
        for (const auto& [name, m] : cand) {
            if (is_projective_module(a, m) || !is_indecomposable(a, m)) continue;
            AModule tm = ar_translate(a, m);
            std::string hit = "not listed";
            for (const auto& [n2, m2] : cand)
                if (m2.dim == tm.dim && is_isomorphic(a, tm, m2)) {
                    hit = n2;
                    break;
                }
            t.rows.push_back({name, std::to_string(m.dim), hit, std::to_string(tm.dim)});
        }
        r.tables.push_back(std::move(t));
    }
    if (c.sosb) {
        auto pairs = sosb_pairs(a, c.maxlen);
        Table t{"stably orthogonal stable bricks", {"X0", "X1"}, {}};
        for (const auto& p : pairs) t.rows.push_back({format_string(q, p.x0), format_string(q, p.x1)});
        r.fact("pairs", std::to_string(pairs.size()));
        r.fact("maximality", "up to horizon " + std::to_string(c.maxlen));
        r.tables.push_back(std::move(t));
    }
    std::cout << render(r, c.format);
    return kExitOk;
}

// ---- report

int cmd_report(const Config& c) {
    AcceptanceOptions o;
    o.lam = c.lam();
    if (o.lam == 0) throw CLI::ValidationError("--lambda must be nonzero for the report");
    o.only = c.only;
    o.seed = c.seed;
    auto run = run_acceptance(o);
    if (c.format == "json") {
        Json j = Json::object();
        j["lambda"] = to_string(run.lam);
        Json crits = Json::array();
        for (const auto& s : run.criteria) {
            if (!s.ran) continue;
            Json checks = Json::array();
            for (const auto& x : run.checks)
                if (x.criterion == s.criterion)
                    checks.push_back({{"label", x.label}, {"pass", x.pass}, {"detail", x.detail}});
            crits.push_back({{"criterion", s.criterion},
                             {"title", s.title},
                             {"pass", s.pass},
                             {"known_unattainable", s.known_unattainable},
                             {"checks", checks}});
        }
        j["criteria"] = crits;
        j["all_pass"] = run.all_pass();
        std::cout << j.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << acceptance_csv(run);
    } else {
        std::cout << acceptance_markdown(run);
    }
    return run.all_pass() ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"klrwb: finite quiver Hecke algebra workbench"};
    app.require_subcommand(1);
    app.fallthrough();
    Config c;
    app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "md", "csv"}));

    auto add_lambda = [&](CLI::App* s) { s->add_option("--lambda", c.lambda, "lambda as p/q"); };
    auto add_alg = [&](CLI::App* s) {
        s->add_option("--catalog", c.catalog, "catalog name: " + [] {
            std::string s;
            for (const auto& n : catalog_names()) s += (s.empty() ? "" : ", ") + n;
            return s;
        }());
        s->add_option("--exps", c.exps, "exponents, comma separated");
        s->add_option("--file", c.file, "presentation JSON")->check(CLI::ExistingFile);
        add_lambda(s);
    };

    auto* dims = app.add_subcommand("dims", "block and idempotent dimensions");
    dims->add_option("--ell", c.ell)->check(CLI::Range(1, 64));
    dims->add_option("--n", c.n)->check(CLI::Range(0, 20));
    dims->add_option("--beta", c.beta, "root coefficients, comma separated");
    dims->add_option("--nu", c.nu, "residue word");
    dims->add_option("--nu2", c.nu2, "second residue word (default: --nu)");

    auto* weyl = app.add_subcommand("weyl", "Weyl group action on Lambda0");
    weyl->add_option("--ell", c.ell)->check(CLI::Range(1, 64));
    weyl->add_option("--word", c.word, "reflection indices, first applied first");
    weyl->add_option("--beta", c.beta, "find w, k with Lambda0 - beta = w(Lambda0) - k delta");

    auto* verify = app.add_subcommand("verify", "check the defining relations on a matrix representation");
    verify->add_option("--zoo", c.zoo, "zoo module name");
    verify->add_option("--file", c.file, "representation JSON")->check(CLI::ExistingFile);
    verify->add_option("--ell", c.ell, "rank for L and S")->check(CLI::Range(1, 64));
    verify->add_option("--i", c.hook, "hook index for L and S");
    add_lambda(verify);

    auto* construct = app.add_subcommand("construct", "export zoo modules as JSON");
    construct->add_option("--zoo", c.zoo, "zoo module name");
    construct->add_flag("--all", c.all_zoo, "every zoo module defined at this lambda");
    construct->add_option("--ell", c.ell, "rank for L and S")->check(CLI::Range(1, 64));
    construct->add_option("--i", c.hook, "hook index for L and S");
    construct->add_option("--out", c.out, "output file (default stdout)");
    add_lambda(construct);

    auto* algebra = app.add_subcommand("algebra", "structure of a bounded quiver algebra");
    add_alg(algebra);

    auto* strings = app.add_subcommand("strings", "strings, bands, tau and stable bricks");
    add_alg(strings);
    strings->add_option("--maxlen", c.maxlen, "string length horizon")->check(CLI::Range(0, 30));
    strings->add_flag("--strings", c.strings, "list strings");
    strings->add_flag("--bands", c.bands, "list bands");
    strings->add_flag("--tau", c.tau, "tau of the standard string modules");
    strings->add_flag("--sosb", c.sosb, "stably orthogonal stable-brick pairs");

    auto* report = app.add_subcommand("report", "run the acceptance suite");
    report->add_option("--only", c.only, "groups: dims, klr, zoo, radical, induction, catalog, centers, tau, strings, properties");
    report->add_option("--seed", c.seed, "seed for sampled checks");
    add_lambda(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*dims) return cmd_dims(c);
        if (*weyl) return cmd_weyl(c);
        if (*verify) return cmd_verify(c);
        if (*construct) return cmd_construct(c);
        if (*algebra) return cmd_algebra(c);
        if (*strings) return cmd_strings(c);
        if (*report) return cmd_report(c);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MathError& e) {
        std::cerr << "math error: " << e.what() << "\n";
        return kExitMath;
    } catch (const HorizonExceeded& e) {
        std::cerr << "error: " << e.what() << " (witness " << e.witness << ")\n";
        return kExitMath;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
