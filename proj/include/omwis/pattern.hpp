#pragma once

#include "omwis/core.hpp"

#include <optional>
#include <string>

namespace omwis {

enum class MatchMode { Induced, Subgraph };

struct Pattern {
    std::string name;
    OrderedGraph graph;
};

// "n:u-v,u-v,..." with 1-based positions; "3:" is three isolated positions
auto parse_pattern(const std::string &literal) -> OrderedGraph;
auto format_pattern(const OrderedGraph &h) -> std::string;

// Family members. Positions as in the catalog table of the README.
auto pat_p3() -> OrderedGraph;
auto pat_chord() -> OrderedGraph;
auto pat_chordrev() -> OrderedGraph;
auto pat_oneedge(int k) -> OrderedGraph;
auto pat_aakbb(int k) -> OrderedGraph;
auto pat_ababk(int k) -> OrderedGraph;
auto pat_abbak(int k) -> OrderedGraph;
// k isolated positions before and after
auto ext(const OrderedGraph &h, int k) -> OrderedGraph;

// Lexicographically least embedding (sorted host positions), or nothing.
auto find_pattern(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode)
    -> std::optional<std::vector<Vertex>>;

// Existence test tuned for large sparse hosts; the embedding returned is some
// embedding, not necessarily the least one.
auto contains_pattern(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode)
    -> std::optional<std::vector<Vertex>>;

// Some embedding mapping a pattern edge onto host pair {u, v} (u < v).
auto find_pattern_through(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode, Vertex u,
                          Vertex v) -> std::optional<std::vector<Vertex>>;

auto is_free(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode = MatchMode::Induced) -> bool;

// Induced-subpattern test between two patterns (small, exact).
auto is_induced_subpattern(const OrderedGraph &h, const OrderedGraph &host) -> bool;

} // namespace omwis
