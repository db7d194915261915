#include "omwis/dispatch.hpp"

#include "omwis/pattern.hpp"
#include "omwis/poly.hpp"
#include "omwis/subexp.hpp"

#include <functional>
#include <sstream>

namespace omwis {

auto strip_ends(const OrderedGraph &h) -> std::optional<OrderedGraph>
{
    int n = h.n();
    if (n == 0)
        return std::nullopt;
    bool front = h.degree(0) == 0, back = h.degree(n - 1) == 0;
    if (!front && !back)
        return std::nullopt;
    int lo = front ? 1 : 0, hi = back ? n - 1 : n;
    if (hi < lo)
        hi = lo; // a single isolated position
    return induced(h, range_set(n, lo, hi)).graph;
}

auto pacman_reduce(const OrderedGraph &g, const Weights &w, const OrderedGraph &h) -> PacmanOutcome
{
    auto inner = strip_ends(h);
    if (!inner)
        throw std::invalid_argument("pattern has no isolated end");
    PacmanOutcome out{*inner, {}};
    const auto &ws = w.scaled();
    int n = g.n();
    out.branches.push_back({VertexSet(n), Sol{}});
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x; y < n; ++y) {
            if (g.adjacent(x, y))
                continue;
            Sol credit;
            credit.add(x, ws[x]);
            if (y != x)
                credit.add(y, ws[y]);
            auto keep = range_set(n, x + 1, y) - g.row(x) - g.row(y);
            out.branches.push_back({keep, credit});
        }
    return out;
}

auto plan_route(const OrderedGraph &h) -> Route
{
    Route r;
    r.cls = classify(h);
    if (r.cls.degenerate || r.cls.cls == Complexity::NPHard) {
        r.algo = "generic";
        return r;
    }
    r.k = r.cls.k;
    r.layers = r.cls.pad;
    const auto &f = r.cls.family;
    if (f == "p3")
        r.algo = "p3free";
    else if (f == "chord")
        r.algo = "chordfree";
    else if (f == "chordrev")
        r.algo = "chordrev";
    else if (f == "oneedge")
        r.algo = "oneedgek";
    else if (f == "aakbb")
        r.algo = r.k == 0 ? "aabb" : "aakbb";
    else
        r.algo = f;
    return r;
}

auto solve_with(const std::string &algo, const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt)
    -> Solution
{
    if (algo == "p3free")
        return solve_p3free(g, w, opt);
    if (algo == "chordfree")
        return solve_chordfree(g, w, false, opt);
    if (algo == "chordrev")
        return solve_chordfree(g, w, true, opt);
    if (algo == "oneedgek")
        return solve_oneedgek(g, w, k, opt);
    if (algo == "aabb")
        return solve_aabb(g, w, opt);
    if (algo == "aakbb")
        return solve_aakbb(g, w, k, opt);
    if (algo == "ababk")
        return solve_ababk(g, w, k, opt);
    if (algo == "abbak")
        return solve_abbak(g, w, k, opt);
    if (algo == "generic")
        return solve_generic(g, w, opt);
    throw std::invalid_argument("unknown algorithm: " + algo);
}

namespace {

class Layers {
public:
    Layers(const OrderedGraph &g, const Weights &w, const Route &route, const SolveOptions &opt)
        : g_(g), w_(w), route_(route), opt_(opt)
    {
    }

    auto run(const VertexSet &alive, int depth) -> Sol
    {
        ++nodes_;
        if (depth == 0) {
            auto sub = induced(g_, alive);
            auto s = solve_with(route_.algo, sub.graph, w_.restrict_to(sub.origin), route_.k, opt_);
            nodes_ += s.nodes;
            Sol out;
            for (Vertex v : s.witness)
                out.add(sub.origin[v], w_.scaled()[sub.origin[v]]);
            return out;
        }
        const auto &ws = w_.scaled();
        Sol best;
        auto vs = members(alive);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i; j < vs.size(); ++j) {
                Vertex x = vs[i], y = vs[j];
                if (g_.adjacent(x, y))
                    continue;
                auto keep = alive & (range_set(g_.n(), x + 1, y) - g_.row(x) - g_.row(y));
                Sol s = run(keep, depth - 1);
                s.add(x, ws[x]);
                if (y != x)
                    s.add(y, ws[y]);
                if (s.value > best.value)
                    best = std::move(s);
            }
        return best;
    }

    auto nodes() const -> std::uint64_t { return nodes_; }

private:
    const OrderedGraph &g_;
    const Weights &w_;
    const Route &route_;
    const SolveOptions &opt_;
    std::uint64_t nodes_ = 0;
};

class Generic {
public:
    Generic(const OrderedGraph &g, const std::vector<std::int64_t> &w, Search &search) : g_(g), w_(w), search_(search)
    {
    }

    // Optimum of g[alive] when it beats `floor`; otherwise something no better.
    auto solve(VertexSet alive, std::int64_t floor, long parent) -> Sol
    {
        long id = search_.node(parent, "generic");
        Sol forced;
        for (bool again = true; again;) {
            again = false;
            for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
                auto nb = g_.row(static_cast<Vertex>(v)) & alive;
                std::int64_t around = 0;
                for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
                    around += w_[u];
                // some optimum contains v
                if (w_[v] >= around) {
                    forced.add(static_cast<Vertex>(v), w_[v]);
                    alive -= nb;
                    alive.reset(v);
                    again = true;
                }
            }
        }
        floor -= forced.value;
        std::int64_t bound = 0;
        for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v))
            bound += w_[v];
        if (bound <= floor || alive.none())
            return forced;

        auto comps = components(g_, alive);
        if (comps.size() > 1) {
            for (const auto &c : comps)
                forced.absorb(solve(c, -1, id));
            return forced;
        }
        Vertex hub = -1;
        std::size_t deg = 0;
        for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
            auto d = (g_.row(static_cast<Vertex>(v)) & alive).count();
            if (hub < 0 || d > deg) {
                hub = static_cast<Vertex>(v);
                deg = d;
            }
        }
        Sol in = solve(alive - closed_nbhd(g_, hub), floor - w_[hub], id);
        in.add(hub, w_[hub]);
        VertexSet rest = alive;
        rest.reset(hub);
        Sol out = solve(rest, std::max(floor, in.value), id);
        Sol &best = out.value > in.value ? out : in;
        forced.absorb(best);
        return forced;
    }

private:
    const OrderedGraph &g_;
    const std::vector<std::int64_t> &w_;
    Search &search_;
};

} // namespace

auto solve_auto(const OrderedGraph &g, const Weights &w, const OrderedGraph &h, const SolveOptions &opt)
    -> AutoSolution
{
    AutoSolution out;
    out.route = plan_route(h);
    if (out.route.layers == 0) {
        out.solution = solve_with(out.route.algo, g, w, out.route.k, opt);
        return out;
    }
    auto start = std::chrono::steady_clock::now();
    Layers layers(g, w, out.route, opt);
    auto best = layers.run(g.full_set(), out.route.layers);
    out.solution = to_solution(std::move(best), w);
    out.solution.nodes = layers.nodes();
    out.solution.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

auto solve_generic(const OrderedGraph &g, const Weights &w, const SolveOptions &opt) -> Solution
{
    Search search(opt);
    Generic s(g, w.scaled(), search);
    return search.finish(s.solve(g.full_set(), -1, -1), w);
}

void validate_free(const OrderedGraph &g, const OrderedGraph &h)
{
    if (auto e = find_pattern(g, h, MatchMode::Induced)) {
        std::ostringstream msg;
        msg << "input contains the pattern at positions";
        for (Vertex v : *e)
            msg << ' ' << v + 1;
        throw ValidationError(msg.str());
    }
}

void validate_solution(const OrderedGraph &g, const Weights &w, const Solution &s)
{
    for (Vertex v : s.witness)
        if (v < 0 || v >= g.n())
            throw ValidationError("witness vertex out of range");
    if (!is_independent(g, s.witness))
        throw ValidationError("witness is not independent");
    Rational total(0);
    for (Vertex v : s.witness)
        total += w[v];
    if (total != s.weight)
        throw ValidationError("witness weight does not match the reported weight");
}

} // namespace omwis
