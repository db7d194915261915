#pragma once

#include "omwis/core.hpp"
#include "omwis/search.hpp"

#include <functional>

namespace omwis {

// x < y < z with xy and yz edges
struct Seagull {
    Vertex x, y, z;
    friend auto operator==(const Seagull &, const Seagull &) -> bool = default;
};

// lexicographic order
auto enumerate_seagulls(const OrderedGraph &g) -> std::vector<Seagull>;
auto count_seagulls(const OrderedGraph &g, const VertexSet &alive) -> std::int64_t;

// Among the vertices of the lexicographically first seagull, the one whose
// closed neighbourhood meets the most seagulls; ties to the smaller position.
// Throws std::invalid_argument when there is no seagull.
auto branch_vertex_aabb(const OrderedGraph &g) -> Vertex;
auto branch_vertex_aabb(const OrderedGraph &g, const VertexSet &alive) -> Vertex;

auto solve_aabb(const OrderedGraph &g, const Weights &w, const SolveOptions &opt = {}) -> Solution;

// X < Y < Z as position sets of the ambient graph, X and Z independent.
// The measure is |Y|.
struct StructuredInstance {
    VertexSet x, y, z;
    auto measure() const -> std::size_t { return y.count(); }
    auto all() const -> VertexSet { return x | y | z; }
};

// An instance together with the scaled weight and the vertices already
// committed to the solution on the way to it.
template <class T>
struct Branch {
    T instance;
    Sol credit;
};

using InstanceSink = std::function<void(const StructuredInstance &, const Sol &)>;

// One halving step for an aakbb(k)-free ambient graph, k >= 1, measure >= 2:
// guess the first vertices of the solution in the right half of Y, then
// branch until one half has no internal edges and absorb it into X or Z.
void halve_workspace(const OrderedGraph &g, const std::vector<std::int64_t> &w, const StructuredInstance &inst,
                     int k, const InstanceSink &emit, Search *search = nullptr, long parent = -1);
auto halve_workspace(const OrderedGraph &g, const Weights &w, const StructuredInstance &inst, int k)
    -> std::vector<Branch<StructuredInstance>>;

auto solve_aakbb(const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt = {}) -> Solution;

// Links X_1 < ... < X_r. Every edge of the graph induced by the links lies
// inside a link, joins consecutive links, or joins X_1 and X_r.
struct Chain {
    std::vector<VertexSet> links;
    std::vector<char> type; // 'A', 'B' or 'C'
    auto size() const -> int { return static_cast<int>(links.size()); }
    auto all() const -> VertexSet;
};

// Thirds of V with boundaries at ceil(n/3) and ceil(2n/3).
auto initial_chain(int n) -> Chain;
auto is_chain(const OrderedGraph &g, const Chain &c) -> bool;

using ChainSink = std::function<void(const Chain &, const Sol &)>;

// Refinement at link j (0-based) for an ababk(k)-free ambient graph: every
// emitted chain has one more link, X_j is split in two and the others only
// shrink, and alpha of the input is the max of alpha + credit.
void refine_chain(const OrderedGraph &g, const std::vector<std::int64_t> &w, const Chain &c, int j, int k,
                  const ChainSink &emit, Search *search = nullptr, long parent = -1);
auto refine_chain(const OrderedGraph &g, const Weights &w, const Chain &c, int j, int k)
    -> std::vector<Branch<Chain>>;

auto solve_ababk(const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt = {}) -> Solution;

// Calls visit on every independent subset of `from` with at most `max_size`
// vertices, by increasing size and lexicographically within a size.
void for_each_independent(const OrderedGraph &g, const std::vector<Vertex> &from, int max_size,
                          const std::function<void(const std::vector<Vertex> &)> &visit);

} // namespace omwis
