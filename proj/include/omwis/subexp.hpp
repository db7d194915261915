#pragma once

#include "omwis/core.hpp"
#include "omwis/search.hpp"

namespace omwis {

struct Segment {
    Vertex x = -1, y = -1; // the edge that closes the segment
    VertexSet z;
    std::vector<Vertex> first, last; // guards, at most k each
};

// Consecutive intervals Z_1 < ... < Z_t partitioning a connected vertex set.
// Edges leave Z_1 u ... u Z_i only from Z_i, so segments interact only with
// their neighbours.
struct SegmentDecomposition {
    std::vector<Segment> segments;
    VertexSet roof; // all x_i and y_i
};

// Throws std::invalid_argument unless g[alive] is connected with >= 2 vertices.
auto partition_segments(const OrderedGraph &g, const VertexSet &alive) -> SegmentDecomposition;
auto partition_segments(const OrderedGraph &g) -> SegmentDecomposition;

// Greedy guards: First_i left to right in Z_i avoiding N[roof], then Last_i
// right to left avoiding N[roof] and N[First_i].
void pick_guards(const OrderedGraph &g, SegmentDecomposition &d, int k);

// ceil(n^(1/3))
auto degree_threshold(int n) -> int;

auto solve_abbak(const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt = {}) -> Solution;

} // namespace omwis
