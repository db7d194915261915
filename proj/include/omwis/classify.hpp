#pragma once

#include "omwis/core.hpp"

#include <string>

namespace omwis {

enum class Complexity { Polynomial, Quasipolynomial, Subexponential, NPHard };

auto to_string(Complexity c) -> std::string;

struct Classification {
    Complexity cls = Complexity::NPHard;
    bool degenerate = false; // |V(H)| <= 1
    std::string family;      // cheapest matching family, e.g. "abbak"; empty for NP-hard
    int k = 0;               // smallest gap with H inside ext(F(k), pad)
    int pad = 0;             // smallest padding for that family
};

// H is tested against ext(F(K), K) with K = |V(H)| for the families of each
// class, cheapest class first; then the padding and gap are minimised, in
// that order, within the matching family.
auto classify(const OrderedGraph &h) -> Classification;

// the pattern F(k) named by a classification; throws for NP-hard
auto family_pattern(const std::string &family, int k) -> OrderedGraph;

// Pattern specs accepted on the command line:
//   "n:u-v,..."        literal
//   family, family(k)  p3, chord, chordrev, oneedge, aakbb, ababk, abbak (k = 0 if omitted)
//   name               abba, aabb, abab, abxba, abccab, bad, badc, aabbcc,
//                      abbcca, abxxba, abcbca, abcabc
//   ext(spec, k)       k isolated positions at both ends
// Throws std::invalid_argument.
auto resolve_pattern(const std::string &spec) -> OrderedGraph;

} // namespace omwis
