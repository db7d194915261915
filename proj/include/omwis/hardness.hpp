#pragma once

#include "omwis/core.hpp"
#include "omwis/io.hpp"
#include "omwis/pattern.hpp"
#include "omwis/random.hpp"

#include <map>
#include <string>

namespace omwis {

// alpha(graph) >= threshold iff the source reaches its target. For the graph
// reductions alpha(graph) = alpha(source) + offset exactly.
struct ReductionOutput {
    OrderedGraph graph;
    std::int64_t threshold = 0;
    std::int64_t offset = 0;
    std::string scheme; // 3sat, LR, RL, RcoreL, coreLR, straight, flip, abxba, abccab
    std::map<std::string, std::string> meta;
};

// Per variable: v(x), v(-x,c)..., v(-x), v(x,c)...; clauses in input order.
// Threshold vars + clauses. Throws std::invalid_argument on a clause that
// does not have three distinct in-range literals.
auto gen_3sat(const Cnf &f) -> ReductionOutput;
auto satisfiable(const Cnf &f) -> bool; // brute force, at most 24 variables

enum class DummyScheme { LR, RL, RcoreL, coreLR };
auto parse_dummy_scheme(const std::string &s) -> DummyScheme;
auto scheme_name(DummyScheme s) -> std::string;

// Every edge xy (x < y) becomes x - l_e - r_e - y; threshold k + m.
auto gen_two_subdivision(const OrderedGraph &g, std::int64_t k, DummyScheme scheme) -> ReductionOutput;

// Edge number p (lexicographic, 1-based) is doubly subdivided p times into
// layers 1..p, then the top edge is routed through a path of even length
// threaded between the vertices of its own layer.
auto gen_long_subdivision(const OrderedGraph &g, std::int64_t k, bool flip) -> ReductionOutput;

struct Train {
    OrderedGraph graph;
    std::vector<Vertex> inputs;  // a prefix, in order
    std::vector<Vertex> outputs; // a suffix, in order
};

// Throws std::invalid_argument when (T1)-(T4) fail.
void check_train(const Train &t);
// Identifies outputs of a with inputs of b.
auto couple_trains(const Train &a, const Train &b) -> Train;

struct PermutationGadget {
    Train train;
    std::vector<int> sigma; // input i is routed to output sigma[i], 0-based
    std::vector<int> kvec;  // path length (vertices) for input i
};

enum class TrainTarget { abxba, abccab };
auto parse_train_target(const std::string &s) -> TrainTarget;
auto target_name(TrainTarget t) -> std::string;

// Elementary swap of j and j+1 (1-based j, 1 <= j < l).
auto swap_gadget(TrainTarget t, int l, int j) -> PermutationGadget;
// Matching x_i - y_i with kvec all 2.
auto identity_gadget(int l) -> PermutationGadget;
// First a, then b.
auto compose_gadgets(const PermutationGadget &a, const PermutationGadget &b) -> PermutationGadget;
// Adjacent transpositions (1-based j) that realise sigma, in application order.
auto bubble_swaps(const std::vector<int> &sigma) -> std::vector<int>;
auto realize_permutation(TrainTarget t, const std::vector<int> &sigma) -> PermutationGadget;

auto gen_train_reduction(const OrderedGraph &g, std::int64_t k, TrainTarget t) -> ReductionOutput;

// A graph with a distinguished boundary, listed in a fixed order so that two
// compatible graphs can be matched position by position.
struct Boundaried {
    OrderedGraph graph;
    std::vector<Vertex> boundary;
};

// Boundary a, c, d, g in that order.
auto braiding_pair() -> std::pair<Boundaried, Boundaried>;
// (P, inputs + outputs) and the linear forest with the same boundary.
auto gadget_pair(const PermutationGadget &p) -> std::pair<Boundaried, Boundaried>;

// Glue a random host of `extra` vertices onto both graphs; the host only
// touches the boundary. Returns alpha of both results.
auto interchange_trial(const Boundaried &a, const Boundaried &b, int extra, double p, Rng &rng)
    -> std::pair<std::int64_t, std::int64_t>;

struct CatalogEntry {
    std::string name;
    OrderedGraph pattern;
    MatchMode mode;
};

struct Catalog {
    std::vector<CatalogEntry> checked;
    std::vector<std::string> unchecked; // named without a recoverable edge list
};

auto scheme_catalog(const std::string &scheme) -> Catalog;

struct VerifyReport {
    std::string scheme;
    std::int64_t alpha_out = 0, alpha_src = 0;
    bool source_yes = false, output_yes = false;
    bool equivalent = false;
    bool offset_exact = false; // alpha_out - alpha_src == offset
    std::string engine;        // brute or reduce
    std::map<std::string, bool> free;
    std::vector<std::string> unchecked;
    auto ok() const -> bool;
};

// alpha_brute up to `cap` vertices, alpha_unit above.
auto verify_reduction(const ReductionOutput &out, const OrderedGraph &src, std::int64_t k, int cap)
    -> VerifyReport;
// The source is a formula; source_yes is satisfiability.
auto verify_3sat(const ReductionOutput &out, const Cnf &f, int cap) -> VerifyReport;

// Rebuild the provenance fields from "# omwis" meta lines.
auto reduction_from_file(const GraphFile &f) -> ReductionOutput;

} // namespace omwis
