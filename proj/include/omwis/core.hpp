#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace omwis {

// Vertices are 0-based positions in the ordering. File formats are 1-based.
using Vertex = int;
using Rational = boost::rational<std::int64_t>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

class OrderedGraph {
public:
    OrderedGraph() = default;
    explicit OrderedGraph(int n);
    OrderedGraph(int n, const std::vector<Edge> &edges);

    auto n() const -> int { return n_; }
    auto m() const -> std::size_t { return m_; }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    auto adjacent(Vertex u, Vertex v) const -> bool { return rows_[u].test(v); }
    auto row(Vertex v) const -> const VertexSet & { return rows_[v]; }
    // sorted by position
    auto neighbors(Vertex v) const -> const std::vector<Vertex> & { return adj_[v]; }
    auto degree(Vertex v) const -> int { return static_cast<int>(adj_[v].size()); }
    // (u, v) with u < v, lexicographic
    auto edges() const -> std::vector<Edge>;

    auto empty_set() const -> VertexSet { return VertexSet(n_); }
    auto full_set() const -> VertexSet;

    friend auto operator==(const OrderedGraph &a, const OrderedGraph &b) -> bool
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<std::vector<Vertex>> adj_;
};

struct Subgraph {
    OrderedGraph graph;
    std::vector<Vertex> origin; // origin[i] = vertex of the host graph
};

auto induced(const OrderedGraph &g, const VertexSet &keep) -> Subgraph;
auto mirror(const OrderedGraph &g) -> OrderedGraph;
auto is_independent(const OrderedGraph &g, const std::vector<Vertex> &s) -> bool;

// Replace edge uv by the path u - a - b - v; a and b are appended as the
// last two positions. alpha grows by exactly one (unit weights).
auto subdivide_twice(const OrderedGraph &g, Edge e) -> OrderedGraph;

// Positive rational weights with a common integer scale.
class Weights {
public:
    Weights() = default;
    explicit Weights(std::vector<Rational> w);
    static auto unit(int n) -> Weights;

    auto size() const -> int { return static_cast<int>(w_.size()); }
    auto operator[](Vertex v) const -> const Rational & { return w_[v]; }
    auto values() const -> const std::vector<Rational> & { return w_; }
    auto scale() const -> std::int64_t { return scale_; }
    // w(v) * scale, always integral
    auto scaled() const -> const std::vector<std::int64_t> & { return scaled_; }
    auto is_unit() const -> bool;
    auto restrict_to(const std::vector<Vertex> &origin) const -> Weights;
    auto total() const -> Rational;

private:
    std::vector<Rational> w_;
    std::vector<std::int64_t> scaled_;
    std::int64_t scale_ = 1;
};

struct Solution {
    Rational weight{0};
    std::vector<Vertex> witness; // sorted
    std::uint64_t nodes = 0;
    double millis = 0.0;
};

// Scaled-integer result used inside the solvers.
struct Sol {
    std::int64_t value = 0;
    std::vector<Vertex> set;

    void add(Vertex v, std::int64_t w)
    {
        set.push_back(v);
        value += w;
    }
    void absorb(const Sol &o)
    {
        value += o.value;
        set.insert(set.end(), o.set.begin(), o.set.end());
    }
};

auto to_solution(Sol s, const Weights &w) -> Solution;
auto set_weight(const std::vector<std::int64_t> &w, const std::vector<Vertex> &s) -> std::int64_t;

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// helpers on dynamic bitsets
auto members(const VertexSet &s) -> std::vector<Vertex>;
auto first_of(const VertexSet &s) -> Vertex;  // -1 if empty
auto last_of(const VertexSet &s) -> Vertex;   // -1 if empty
auto closed_nbhd(const OrderedGraph &g, Vertex v) -> VertexSet;
auto closed_nbhd(const OrderedGraph &g, const std::vector<Vertex> &vs) -> VertexSet;
auto open_nbhd(const OrderedGraph &g, const std::vector<Vertex> &vs) -> VertexSet;
auto count_edges(const OrderedGraph &g, const VertexSet &s) -> std::size_t;
auto range_set(int n, Vertex from, Vertex to) -> VertexSet; // [from, to)
// connected components of g[alive], ordered by first vertex
auto components(const OrderedGraph &g, const VertexSet &alive) -> std::vector<VertexSet>;

auto format_rational(const Rational &r) -> std::string;
auto parse_rational(const std::string &s) -> Rational;

} // namespace omwis
