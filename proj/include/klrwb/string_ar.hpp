#pragma once
// strings and bands over special biserial algebras, their modules, stable bricks and s-projectives

#include "klrwb/module.hpp"

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace klrwb {

struct NotSpecialBiserial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Letter {
    int arrow = 0;
    bool inverse = false;
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

// walk from start; a direct letter a: s -> t goes s to t, an inverse letter goes t to s
struct StringWord {
    int start = 0;
    std::vector<Letter> letters;
    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const StringWord&) const = default;
    auto operator<=>(const StringWord&) const = default;
};

int letter_src(const Quiver& q, const Letter& l);
int letter_tgt(const Quiver& q, const Letter& l);
int string_end(const Quiver& q, const StringWord& s);
StringWord inverse_string(const Quiver& q, const StringWord& s);
StringWord concat_strings(const StringWord& a, const StringWord& b);

// "beta alpha ~gamma"; the trivial string prints as e<vertex>
std::string format_string(const Quiver& q, const StringWord& s);
std::vector<std::string> string_tokens(const Quiver& q, const StringWord& s);
StringWord parse_string(const Quiver& q, const std::vector<std::string>& tokens);
StringWord parse_string(const Quiver& q, const std::string& text);

// direct runs must be nonzero paths, and outside Soc(A) when A is self-injective
class StringRules {
public:
    explicit StringRules(const FDAlgebra& a);  // throws NotSpecialBiserial
    const FDAlgebra& algebra() const { return *a_; }
    bool valid(const StringWord& s, std::string* why = nullptr) const;
    // w cyclic: every rotation valid, both letter kinds, primitive
    bool is_band(const StringWord& w) const;
    bool allowed_run(const std::vector<int>& path) const { return allowed_.count(path) > 0; }
    bool extendable(const StringWord& s, const Letter& l) const;

private:
    const FDAlgebra* a_;
    std::set<std::vector<int>> allowed_;
};

// one representative per inversion class, sorted by length then letters
std::vector<StringWord> enumerate_strings(const FDAlgebra& a, int maxlen);
StringWord canonical_string(const Quiver& q, const StringWord& s);
// least rotation of the word or its inverse
StringWord canonical_band(const Quiver& q, const StringWord& w);
std::vector<StringWord> enumerate_bands(const FDAlgebra& a, int maxlen);

AModule string_module(const FDAlgebra& a, const StringWord& s);
// closing letter scaled by t
AModule band_module(const FDAlgebra& a, const StringWord& w, const Q& t);

// band classes that are words of exactly q composite letters, excluding x^q and y^q
std::vector<StringWord> composite_bands(const FDAlgebra& a, const StringWord& x, const StringWord& y, int q);

// tau M not isomorphic to M and a one-dimensional stable endomorphism ring
bool is_stable_brick(const FDAlgebra& a, const AModule& m);

struct SosbPair {
    StringWord x0, x1;
};
// stable-brick string modules up to maxlen, pairwise stably orthogonal
std::vector<SosbPair> sosb_pairs(const FDAlgebra& a, int maxlen);

// tau^{-1} Omega X
AModule s_projective(const FDAlgebra& a, const AModule& x);

}  // namespace klrwb
