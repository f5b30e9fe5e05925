#pragma once
// workbench JSON: weights, matrix representations, presentations with traces, modules, strings

#include "klrwb/cartan.hpp"
#include "klrwb/klr.hpp"
#include "klrwb/module.hpp"
#include "klrwb/string_ar.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace klrwb {

using Json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json mat_to_json(const Mat& m);  // rows of "p/q" strings
Mat mat_from_json(const Json& j);

// {"ell","n","lambda","dim","name","idempotents":{"0101":[1,0,..]},"x":[...],"psi":[...]}
// "e":{"0101":[[...]]} with full matrices is written when an idempotent is not a diagonal projector
Json rep_to_json(const MatrixRep& r);
MatrixRep rep_from_json(const Json& j);

struct PresentationFile {
    Presentation pres;
    std::vector<std::pair<std::string, Q>> trace;  // empty: none given
};
// {"name","vertices","arrows":[{"name","src","tgt"}],"relations":[[{"path":[..],"coef":"1"}]],"trace":{..}}
PresentationFile presentation_from_json(const Json& j);
Json presentation_to_json(const Presentation& p, const std::vector<std::pair<std::string, Q>>& trace = {});

Json module_to_json(const FDAlgebra& a, const AModule& m);
AModule module_from_json(const FDAlgebra& a, const Json& j);

Json string_to_json(const Quiver& q, const StringWord& s);  // ["beta","alpha","~gamma"]
StringWord string_from_json(const Quiver& q, const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace klrwb
