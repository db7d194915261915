#pragma once

#include "omwis/classify.hpp"
#include "omwis/core.hpp"
#include "omwis/qpoly.hpp"
#include "omwis/search.hpp"

#include <optional>
#include <string>

namespace omwis {

// Removes one isolated position from each end of h that has one. Empty when
// neither end is isolated.
auto strip_ends(const OrderedGraph &h) -> std::optional<OrderedGraph>;

struct PacmanOutcome {
    OrderedGraph inner;                     // strip_ends(h)
    std::vector<Branch<VertexSet>> branches; // vertex sets of g with credit
};

// Guess the first and last solution vertex x <= y (or nothing). Each branch
// keeps the vertices strictly between them minus N(x) and N(y); it is
// inner-free whenever g is h-free. Throws std::invalid_argument when h has
// no isolated end.
auto pacman_reduce(const OrderedGraph &g, const Weights &w, const OrderedGraph &h) -> PacmanOutcome;

struct Route {
    Classification cls;
    std::string algo; // p3free, chordfree, chordrev, oneedgek, aabb, aakbb, ababk, abbak, generic
    int k = 0;
    int layers = 0; // pacman layers before the specialised solver
};

// A pure function of h.
auto plan_route(const OrderedGraph &h) -> Route;

// Runs one named algorithm directly on g.
auto solve_with(const std::string &algo, const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt = {})
    -> Solution;

struct AutoSolution {
    Solution solution;
    Route route;
};

// Pacman layers, then the solver for the class of h. NP-hard patterns fall
// back to solve_generic. The result is only meaningful for h-free g.
auto solve_auto(const OrderedGraph &g, const Weights &w, const OrderedGraph &h, const SolveOptions &opt = {})
    -> AutoSolution;

// Exact branch and bound on a maximum-degree vertex with simple reductions.
auto solve_generic(const OrderedGraph &g, const Weights &w, const SolveOptions &opt = {}) -> Solution;

// Throw ValidationError.
void validate_free(const OrderedGraph &g, const OrderedGraph &h);
void validate_solution(const OrderedGraph &g, const Weights &w, const Solution &s);

} // namespace omwis
