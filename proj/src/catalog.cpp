#include "klrwb/catalog.hpp"

namespace klrwb {

std::string power(const std::string& word, int k) {
    std::string s;
    for (int i = 0; i < k; ++i) s += (i ? " " : "") + word;
    return s;
}

namespace {

void need(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument("invalid exponents: " + what);
}

Presentation two_point(const std::string& name, bool loop0, bool loop1, bool second_pair = false) {
    Presentation p;
    p.name = name;
    p.quiver.add_vertex("0");
    p.quiver.add_vertex("1");
    p.quiver.add_arrow("alpha", 0, 1);
    p.quiver.add_arrow("beta", 1, 0);
    if (second_pair) {
        p.quiver.add_arrow("alpha'", 0, 1);
        p.quiver.add_arrow("beta'", 1, 0);
    }
    if (loop0) p.quiver.add_arrow("gamma", 0, 0);
    if (loop1) p.quiver.add_arrow("delta", 1, 1);
    return p;
}

std::string tag(const std::string& f, const std::vector<int>& e) {
    std::string s = f + "(";
    for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
}

}  // namespace

CatalogAlgebra family_1(int m) {
    need(m >= 1, "(1) needs m >= 1");
    CatalogAlgebra c{two_point(tag("1", {m}), false, false), {}};
    c.pres.zero(power("alpha beta", m) + " alpha");
    c.pres.zero(power("beta alpha", m) + " beta");
    c.trace = {{power("alpha beta", m), 1}, {power("beta alpha", m), 1}};
    return c;
}

CatalogAlgebra family_2a(int p, int q) {
    need(p >= 2 && q >= 1, "(2a) needs p >= 2, q >= 1");
    CatalogAlgebra c{two_point(tag("2a", {p, q}), true, false), {}};
    c.pres.zero("beta gamma");
    c.pres.zero("gamma alpha");
    c.pres.equal(power("gamma", p), power("alpha beta", q));
    c.trace = {{power("alpha beta", q), 1}, {power("beta alpha", q), 1}};
    return c;
}

CatalogAlgebra family_2b(int m) {
    need(m >= 1, "(2b) needs m >= 1");
    CatalogAlgebra c{two_point(tag("2b", {m}), true, false), {}};
    c.pres.zero("beta alpha");
    c.pres.zero("gamma gamma");
    c.pres.equal(power("gamma alpha beta", m), power("alpha beta gamma", m));
    c.trace = {{power("gamma alpha beta", m), 1}, {power("beta gamma alpha", m), 1}};
    return c;
}

CatalogAlgebra family_3a(int p, int q) {
    need(p >= 1 && q >= 1, "(3a) needs p, q >= 1");
    CatalogAlgebra c{two_point(tag("3a", {p, q}), false, false, true), {}};
    c.pres.zero("alpha beta'");
    c.pres.zero("beta' alpha");
    c.pres.zero("alpha' beta");
    c.pres.zero("beta alpha'");
    c.pres.equal(power("alpha beta", p), power("alpha' beta'", q));
    c.pres.equal(power("beta alpha", p), power("beta' alpha'", q));
    c.trace = {{power("alpha beta", p), 1}, {power("beta alpha", p), 1}};
    return c;
}

CatalogAlgebra family_3b(int m) {
    need(m >= 1, "(3b) needs m >= 1");
    CatalogAlgebra c{two_point(tag("3b", {m}), false, false, true), {}};
    c.pres.zero("alpha beta'");
    c.pres.zero("beta alpha");
    c.pres.zero("alpha' beta");
    c.pres.zero("beta' alpha'");
    c.pres.equal(power("alpha beta alpha' beta'", m), power("alpha' beta' alpha beta", m));
    c.pres.equal(power("beta alpha' beta' alpha", m), power("beta' alpha beta alpha'", m));
    c.trace = {{power("alpha beta alpha' beta'", m), 1}, {power("beta alpha' beta' alpha", m), 1}};
    return c;
}

CatalogAlgebra family_4a(int p, int q, int r) {
    need(p >= 1 && q >= 2 && r >= 2, "(4a) needs p >= 1, q, r >= 2");
    CatalogAlgebra c{two_point(tag("4a", {p, q, r}), true, true), {}};
    c.pres.zero("beta gamma");
    c.pres.zero("gamma alpha");
    c.pres.zero("alpha delta");
    c.pres.zero("delta beta");
    c.pres.equal(power("alpha beta", p), power("gamma", q));
    c.pres.equal(power("beta alpha", p), power("delta", r));
    c.trace = {{power("alpha beta", p), 1}, {power("beta alpha", p), 1}};
    return c;
}

CatalogAlgebra family_4b(int p, int q) {
    need(p >= 1 && q >= 2, "(4b) needs p >= 1, q >= 2");
    CatalogAlgebra c{two_point(tag("4b", {p, q}), true, true), {}};
    c.pres.zero("beta alpha");
    c.pres.zero("gamma gamma");
    c.pres.zero("alpha delta");
    c.pres.zero("delta beta");
    c.pres.equal(power("gamma alpha beta", p), power("alpha beta gamma", p));
    c.pres.equal(power("beta gamma alpha", p), power("delta", q));
    c.trace = {{power("gamma alpha beta", p), 1}, {power("beta gamma alpha", p), 1}};
    return c;
}

CatalogAlgebra family_4c(int m) {
    need(m >= 1, "(4c) needs m >= 1");
    CatalogAlgebra c{two_point(tag("4c", {m}), true, true), {}};
    c.pres.zero("alpha beta");
    c.pres.zero("beta alpha");
    c.pres.zero("gamma gamma");
    c.pres.zero("delta delta");
    c.pres.equal(power("beta gamma alpha delta", m), power("delta beta gamma alpha", m));
    c.pres.equal(power("gamma alpha delta beta", m), power("alpha delta beta gamma", m));
    c.trace = {{power("gamma alpha delta beta", m), 1}, {power("beta gamma alpha delta", m), 1}};
    return c;
}

CatalogAlgebra basic_R2delta(bool lam_is_zero) {
    CatalogAlgebra c;
    Presentation& p = c.pres;
    p.quiver.add_vertex("0");
    p.quiver.add_vertex("1");
    p.quiver.add_arrow("alpha", 0, 1);
    p.quiver.add_arrow("beta", 1, 0);
    if (lam_is_zero) {
        p.name = "basic-2delta(lambda=0)";
        p.quiver.add_arrow("gamma", 0, 0);
        p.quiver.add_arrow("delta", 1, 1);
        p.zero("alpha beta");
        p.zero("beta gamma");
        p.zero("gamma alpha");
        p.zero("delta delta");
        p.equal("gamma gamma", "alpha delta beta");
        p.equal("beta alpha delta", "delta beta alpha");
        c.trace = {{"gamma gamma", 1}, {"beta alpha delta", 1}};
    } else {
        p.name = "basic-2delta(lambda!=0)";
        p.quiver.add_arrow("gamma", 1, 1);
        p.zero("alpha gamma");
        p.zero("gamma beta");
        p.equal("beta alpha beta alpha", "gamma gamma");
        c.trace = {{"alpha beta alpha beta", 1}, {"gamma gamma", 1}};
    }
    return c;
}

CatalogAlgebra appendix_example() {
    CatalogAlgebra c;
    Presentation& p = c.pres;
    p.name = "appendix-example";
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_arrow("alpha", 0, 1);
    p.quiver.add_arrow("beta", 1, 0);
    p.quiver.add_arrow("gamma", 0, 0);
    p.equal("gamma gamma", "gamma alpha beta");
    p.equal("gamma alpha beta", "alpha beta gamma");
    p.equal("beta gamma alpha", "beta alpha");
    p.zero("alpha beta alpha");
    p.zero("beta alpha beta");
    c.trace = {{"e1", 1}, {"e2", 1}, {"alpha beta", 1}, {"beta alpha", 1}, {"gamma gamma", 1}};
    return c;
}

CatalogAlgebra wild_eRe(const Q& a, const Q& b) {
    CatalogAlgebra c;
    Presentation& p = c.pres;
    p.name = "wild-eRe";
    p.quiver.add_vertex("1");
    p.quiver.add_vertex("2");
    p.quiver.add_arrow("x", 0, 0);
    p.quiver.add_arrow("y", 0, 0);
    p.quiver.add_arrow("z", 1, 1);
    p.quiver.add_arrow("w", 1, 1);
    p.quiver.add_arrow("p", 0, 1);
    p.quiver.add_arrow("q", 1, 0);
    p.zero("x x");
    p.equal("y y", "x y", a);
    p.equal("x y", "y x");
    p.zero("z z");
    p.equal("w w", "z w", b);
    p.equal("z w", "w z");
    p.equal("p q", "x y");
    p.equal("q p", "z w");
    for (const char* s : {"x p", "y p", "p z", "p w", "z q", "w q", "q x", "q y"}) p.zero(s);
    c.trace = {{"x y", 1}, {"z w", 1}};
    return c;
}

CatalogAlgebra linear_quiver(int n) {
    need(n >= 1, "linear quiver needs n >= 1");
    CatalogAlgebra c;
    c.pres.name = "A" + std::to_string(n);
    for (int v = 0; v < n; ++v) c.pres.quiver.add_vertex(std::to_string(v));
    for (int v = 0; v + 1 < n; ++v) c.pres.quiver.add_arrow("a" + std::to_string(v), v, v + 1);
    return c;
}

std::vector<std::string> catalog_names() {
    return {"1", "2a", "2b", "3a", "3b", "4a", "4b", "4c", "basic-2delta", "appendix-example", "wild-eRe"};
}

int catalog_arity(const std::string& name) {
    if (name == "1" || name == "2b" || name == "3b" || name == "4c") return 1;
    if (name == "2a" || name == "3a" || name == "4b") return 2;
    if (name == "4a") return 3;
    return 0;
}

CatalogAlgebra catalog(const std::string& name, const std::vector<int>& exps, const Q& lam) {
    int k = catalog_arity(name);
    std::vector<int> e = exps;
    if (e.empty()) e.assign(k, 2);
    if (static_cast<int>(e.size()) != k)
        throw std::invalid_argument(name + " takes " + std::to_string(k) + " exponent(s)");
    if (name == "1") return family_1(e[0]);
    if (name == "2a") return family_2a(e[0], e[1]);
    if (name == "2b") return family_2b(e[0]);
    if (name == "3a") return family_3a(e[0], e[1]);
    if (name == "3b") return family_3b(e[0]);
    if (name == "4a") return family_4a(e[0], e[1], e[2]);
    if (name == "4b") return family_4b(e[0], e[1]);
    if (name == "4c") return family_4c(e[0]);
    if (name == "basic-2delta") return basic_R2delta(lam == 0);
    if (name == "appendix-example") return appendix_example();
    if (name == "wild-eRe") return wild_eRe();
    throw std::invalid_argument("unknown catalog algebra: " + name);
}

}  // namespace klrwb
