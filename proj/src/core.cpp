#include "omwis/core.hpp"

#include <algorithm>
#include <numeric>

namespace omwis {

OrderedGraph::OrderedGraph(int n) : n_(n), rows_(n, VertexSet(n)), adj_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
}

OrderedGraph::OrderedGraph(int n, const std::vector<Edge> &edges) : OrderedGraph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void OrderedGraph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loop");
    if (rows_[u].test(v))
        return;
    rows_[u].set(v);
    rows_[v].set(u);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

void OrderedGraph::remove_edge(Vertex u, Vertex v)
{
    if (!rows_[u].test(v))
        return;
    rows_[u].reset(v);
    rows_[v].reset(u);
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --m_;
}

auto OrderedGraph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (v > u)
                out.emplace_back(u, v);
    return out;
}

auto OrderedGraph::full_set() const -> VertexSet
{
    VertexSet s(n_);
    s.set();
    return s;
}

auto induced(const OrderedGraph &g, const VertexSet &keep) -> Subgraph
{
    Subgraph sub;
    std::vector<int> index(g.n(), -1);
    for (auto v = keep.find_first(); v != VertexSet::npos; v = keep.find_next(v)) {
        index[v] = static_cast<int>(sub.origin.size());
        sub.origin.push_back(static_cast<Vertex>(v));
    }
    sub.graph = OrderedGraph(static_cast<int>(sub.origin.size()));
    for (Vertex u : sub.origin)
        for (Vertex v : g.neighbors(u))
            if (v > u && index[v] >= 0)
                sub.graph.add_edge(index[u], index[v]);
    return sub;
}

auto mirror(const OrderedGraph &g) -> OrderedGraph
{
    OrderedGraph r(g.n());
    for (auto [u, v] : g.edges())
        r.add_edge(g.n() - 1 - u, g.n() - 1 - v);
    return r;
}

auto is_independent(const OrderedGraph &g, const std::vector<Vertex> &s) -> bool
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j]))
                return false;
    return true;
}

auto subdivide_twice(const OrderedGraph &g, Edge e) -> OrderedGraph
{
    auto [u, v] = e;
    if (!g.adjacent(u, v))
        throw std::invalid_argument("not an edge");
    OrderedGraph r(g.n() + 2);
    for (auto [x, y] : g.edges())
        if (!(std::min(x, y) == std::min(u, v) && std::max(x, y) == std::max(u, v)))
            r.add_edge(x, y);
    r.add_edge(u, g.n());
    r.add_edge(g.n(), g.n() + 1);
    r.add_edge(g.n() + 1, v);
    return r;
}

Weights::Weights(std::vector<Rational> w) : w_(std::move(w))
{
    std::int64_t l = 1;
    for (const auto &x : w_) {
        if (x <= Rational(0))
            throw std::invalid_argument("weights must be positive");
        l = std::lcm(l, x.denominator());
    }
    scale_ = l;
    scaled_.reserve(w_.size());
    for (const auto &x : w_)
        scaled_.push_back(x.numerator() * (l / x.denominator()));
}

auto Weights::unit(int n) -> Weights
{
    return Weights(std::vector<Rational>(n, Rational(1)));
}

auto Weights::is_unit() const -> bool
{
    return std::all_of(w_.begin(), w_.end(), [](const Rational &x) { return x == Rational(1); });
}

auto Weights::restrict_to(const std::vector<Vertex> &origin) const -> Weights
{
    std::vector<Rational> w;
    w.reserve(origin.size());
    for (Vertex v : origin)
        w.push_back(w_[v]);
    return Weights(std::move(w));
}

auto Weights::total() const -> Rational
{
    return std::accumulate(w_.begin(), w_.end(), Rational(0));
}

auto to_solution(Sol s, const Weights &w) -> Solution
{
    Solution out;
    out.weight = Rational(s.value, w.scale());
    std::sort(s.set.begin(), s.set.end());
    out.witness = std::move(s.set);
    return out;
}

auto set_weight(const std::vector<std::int64_t> &w, const std::vector<Vertex> &s) -> std::int64_t
{
    std::int64_t t = 0;
    for (Vertex v : s)
        t += w[v];
    return t;
}

auto members(const VertexSet &s) -> std::vector<Vertex>
{
    std::vector<Vertex> out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        out.push_back(static_cast<Vertex>(v));
    return out;
}

auto first_of(const VertexSet &s) -> Vertex
{
    auto v = s.find_first();
    return v == VertexSet::npos ? -1 : static_cast<Vertex>(v);
}

auto last_of(const VertexSet &s) -> Vertex
{
    // dynamic_bitset has no reverse scan; walk the blocks from the top
    std::vector<std::uint64_t> blocks(s.num_blocks());
    boost::to_block_range(s, blocks.begin());
    for (std::size_t b = blocks.size(); b-- > 0;)
        if (blocks[b] != 0)
            return static_cast<Vertex>(b * 64 + 63 - __builtin_clzll(blocks[b]));
    return -1;
}

auto closed_nbhd(const OrderedGraph &g, Vertex v) -> VertexSet
{
    VertexSet s = g.row(v);
    s.set(v);
    return s;
}

auto closed_nbhd(const OrderedGraph &g, const std::vector<Vertex> &vs) -> VertexSet
{
    VertexSet s(g.n());
    for (Vertex v : vs) {
        s |= g.row(v);
        s.set(v);
    }
    return s;
}

auto open_nbhd(const OrderedGraph &g, const std::vector<Vertex> &vs) -> VertexSet
{
    VertexSet s(g.n());
    for (Vertex v : vs)
        s |= g.row(v);
    return s;
}

auto count_edges(const OrderedGraph &g, const VertexSet &s) -> std::size_t
{
    std::size_t twice = 0;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        twice += (g.row(static_cast<Vertex>(v)) & s).count();
    return twice / 2;
}

auto range_set(int n, Vertex from, Vertex to) -> VertexSet
{
    VertexSet s(n);
    from = std::max(from, 0);
    to = std::min(to, n);
    if (from < to)
        s.set(from, to - from, true);
    return s;
}

auto components(const OrderedGraph &g, const VertexSet &alive) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    VertexSet left = alive;
    while (left.any()) {
        VertexSet comp(g.n()), frontier(g.n());
        frontier.set(left.find_first());
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next(g.n());
            for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v))
                next |= g.row(static_cast<Vertex>(v));
            frontier = next & (left - comp);
        }
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

auto format_rational(const Rational &r) -> std::string
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

auto parse_rational(const std::string &s) -> Rational
{
    auto slash = s.find('/');
    std::size_t used = 0;
    try {
        if (slash == std::string::npos) {
            auto p = std::stoll(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return Rational(p);
        }
        auto num = s.substr(0, slash), den = s.substr(slash + 1);
        auto p = std::stoll(num, &used);
        if (used != num.size())
            throw std::invalid_argument(s);
        auto q = std::stoll(den, &used);
        if (used != den.size() || q == 0)
            throw std::invalid_argument(s);
        return Rational(p, q);
    }
    catch (const std::logic_error &) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
}

} // namespace omwis
