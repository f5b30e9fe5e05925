#include "klrwb/io.hpp"

#include <fstream>

namespace klrwb {

namespace {

Q rational_of(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long>());
    throw FormatError("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int vertex_of(const Quiver& q, const Json& j) {
    if (j.is_number_integer()) {
        int v = j.get<int>();
        if (v < 0 || v >= q.nv()) throw FormatError("vertex index out of range: " + j.dump());
        return v;
    }
    return q.vertex_index(j.get<std::string>());
}

}  // namespace

Json weight_to_json(const Weight& w) { return Json{{"level", w.level}, {"alpha", w.alpha}}; }

Weight weight_from_json(const Json& j) {
    Weight w;
    w.level = field(j, "level").get<long>();
    w.alpha = field(j, "alpha").get<std::vector<long>>();
    return w;
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array()) throw FormatError("matrix must be an array of rows");
    int r = static_cast<int>(j.size());
    int c = r ? static_cast<int>(j[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) throw FormatError("ragged matrix");
        for (int k = 0; k < c; ++k) m(i, k) = rational_of(j[i][k]);
    }
    return m;
}

namespace {

bool is_diagonal_projector(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != ((i == j) ? m(i, i) : Q(0)) || (i == j && m(i, i) != 0 && m(i, i) != 1)) return false;
    return true;
}

}  // namespace

Json rep_to_json(const MatrixRep& r) {
    bool diag = true;
    for (const auto& [nu, m] : r.e) diag = diag && is_diagonal_projector(m);
    Json e = Json::object();
    for (const auto& [nu, m] : r.e) {
        if (!diag) {
            e[format_residues(nu)] = mat_to_json(m);
            continue;
        }
        Json bits = Json::array();
        for (int i = 0; i < m.rows(); ++i) bits.push_back(m(i, i) == 1 ? 1 : 0);
        e[format_residues(nu)] = bits;
    }
    Json x = Json::array(), psi = Json::array();
    for (const auto& m : r.x) x.push_back(mat_to_json(m));
    for (const auto& m : r.psi) psi.push_back(mat_to_json(m));
    return Json{{"name", r.name}, {"ell", r.ell},  {"n", r.n}, {"lambda", to_string(r.lam)}, {"dim", r.dim},
                {diag ? "idempotents" : "e", e}, {"x", x}, {"psi", psi}};
}

MatrixRep rep_from_json(const Json& j) {
    int ell = field(j, "ell").get<int>();
    int n = field(j, "n").get<int>();
    int dim = field(j, "dim").get<int>();
    MatrixRep r = MatrixRep::zero(ell, n, rational_of(field(j, "lambda")), dim);
    if (j.contains("name")) r.name = j["name"].get<std::string>();
    auto sized = [&](const Mat& m, const std::string& what) {
        if (m.rows() != dim || m.cols() != dim) throw FormatError(what + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
        return m;
    };
    // "idempotents": diagonal bits per word, or "e": full matrices
    bool bits = j.contains("idempotents");
    for (const auto& [k, v] : field(j, bits ? "idempotents" : "e").items()) {
        ResidueSeq nu = parse_residues(k);
        if (static_cast<int>(nu.size()) != n) throw FormatError("word " + k + " has the wrong length");
        if (bits) {
            if (!v.is_array() || static_cast<int>(v.size()) != dim) throw FormatError("idempotent " + k + " needs dim bits");
            Mat m(dim, dim);
            for (int i = 0; i < dim; ++i) m(i, i) = rational_of(v[i]);
            r.e[nu] = m;
        } else {
            r.e[nu] = sized(mat_from_json(v), "e(" + k + ")");
        }
    }
    const Json& x = field(j, "x");
    const Json& psi = field(j, "psi");
    if (static_cast<int>(x.size()) != n || static_cast<int>(psi.size()) != std::max(n - 1, 0))
        throw FormatError("need n matrices x and n-1 matrices psi");
    for (int k = 0; k < n; ++k) r.x[k] = sized(mat_from_json(x[k]), "x" + std::to_string(k + 1));
    for (int k = 0; k + 1 < n; ++k) r.psi[k] = sized(mat_from_json(psi[k]), "psi" + std::to_string(k + 1));
    return r;
}

PresentationFile presentation_from_json(const Json& j) {
    PresentationFile f;
    Presentation& p = f.pres;
    p.name = j.value("name", std::string("presentation"));
    for (const auto& v : field(j, "vertices")) p.quiver.add_vertex(v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& a : field(j, "arrows"))
        p.quiver.add_arrow(field(a, "name").get<std::string>(), vertex_of(p.quiver, field(a, "src")),
                           vertex_of(p.quiver, field(a, "tgt")));
    if (j.contains("relations")) {
        for (const auto& rel : j["relations"]) {
            Relation r;
            for (const auto& t : rel) {
                const Json& path = field(t, "path");
                std::string text;
                if (path.is_string()) {
                    text = path.get<std::string>();
                } else {
                    for (const auto& s : path) text += (text.empty() ? "" : " ") + s.get<std::string>();
                }
                Q c = t.contains("coef") ? rational_of(t["coef"]) : Q(1);
                r.push_back({c, parse_path(p.quiver, text)});
            }
            p.relations.push_back(std::move(r));
        }
    }
    if (j.contains("max_len")) p.max_len = j["max_len"].get<int>();
    if (j.contains("trace"))
        for (const auto& [k, v] : j["trace"].items()) f.trace.push_back({k, rational_of(v)});
    return f;
}

Json presentation_to_json(const Presentation& p, const std::vector<std::pair<std::string, Q>>& trace) {
    Json j;
    j["name"] = p.name;
    j["vertices"] = p.quiver.vertices;
    Json arrows = Json::array();
    for (const auto& a : p.quiver.arrows)
        arrows.push_back({{"name", a.name}, {"src", p.quiver.vertices[a.src]}, {"tgt", p.quiver.vertices[a.tgt]}});
    j["arrows"] = arrows;
    Json rels = Json::array();
    for (const auto& r : p.relations) {
        Json terms = Json::array();
        for (const auto& t : r) {
            Json path = Json::array();
            if (t.path.trivial())
                path.push_back("e:" + p.quiver.vertices[t.path.src]);
            else
                for (int a : t.path.arrows) path.push_back(p.quiver.arrows[a].name);
            terms.push_back({{"path", path}, {"coef", to_string(t.coef)}});
        }
        rels.push_back(terms);
    }
    j["relations"] = rels;
    if (!trace.empty()) {
        Json t = Json::object();
        for (const auto& [k, v] : trace) t[k] = to_string(v);
        j["trace"] = t;
    }
    return j;
}

Json module_to_json(const FDAlgebra& a, const AModule& m) {
    Json vert = Json::array();
    for (int v : m.vert) vert.push_back(a.quiver.vertices[v]);
    Json arrows = Json::object();
    for (int i = 0; i < a.quiver.na(); ++i) arrows[a.quiver.arrows[i].name] = mat_to_json(m.arrows[i]);
    return Json{{"name", m.name}, {"algebra", a.name}, {"dim", m.dim}, {"vert", vert}, {"arrows", arrows}};
}

AModule module_from_json(const FDAlgebra& a, const Json& j) {
    AModule m;
    m.name = j.value("name", std::string("M"));
    m.dim = field(j, "dim").get<int>();
    for (const auto& v : field(j, "vert")) m.vert.push_back(vertex_of(a.quiver, v));
    if (static_cast<int>(m.vert.size()) != m.dim) throw FormatError("vert has the wrong length");
    m.arrows.assign(a.quiver.na(), Mat(m.dim, m.dim));
    for (const auto& [k, v] : field(j, "arrows").items()) {
        Mat x = mat_from_json(v);
        if (x.rows() != m.dim || x.cols() != m.dim) throw FormatError("arrow " + k + " has the wrong size");
        m.arrows[a.quiver.arrow_index(k)] = x;
    }
    return m;
}

Json string_to_json(const Quiver& q, const StringWord& s) {
    if (s.letters.empty()) return Json::array({"e:" + q.vertices[s.start]});
    return Json(string_tokens(q, s));
}

StringWord string_from_json(const Quiver& q, const Json& j) {
    if (j.is_string()) return parse_string(q, j.get<std::string>());
    return parse_string(q, j.get<std::vector<std::string>>());
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace klrwb
