#include "omwis/hardness.hpp"

#include "omwis/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

namespace omwis {

namespace {

// Vertices are created as ids and placed by an explicit order list.
class Builder {
public:
    auto fresh() -> int { return count_++; }
    void edge(int a, int b) { edges_.emplace_back(a, b); }
    void place(int id) { order_.push_back(id); }
    auto build() const -> OrderedGraph
    {
        if (static_cast<int>(order_.size()) != count_)
            throw std::logic_error("builder: every vertex must be placed once");
        std::vector<Vertex> pos(count_, -1);
        for (std::size_t i = 0; i < order_.size(); ++i)
            pos[order_[i]] = static_cast<Vertex>(i);
        OrderedGraph g(count_);
        for (auto [a, b] : edges_)
            g.add_edge(pos[a], pos[b]);
        return g;
    }

private:
    int count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> order_;
};

auto with_meta(ReductionOutput out, std::int64_t k) -> ReductionOutput
{
    out.meta["scheme"] = out.scheme;
    out.meta["k"] = std::to_string(k);
    out.meta["threshold"] = std::to_string(out.threshold);
    out.meta["offset"] = std::to_string(out.offset);
    return out;
}

} // namespace

auto gen_3sat(const Cnf &f) -> ReductionOutput
{
    int n = f.vars;
    int m = static_cast<int>(f.clauses.size());
    for (const auto &c : f.clauses) {
        if (c.size() != 3)
            throw std::invalid_argument("every clause needs exactly three literals");
        for (int l : c)
            if (l == 0 || std::abs(l) > n)
                throw std::invalid_argument("literal out of range");
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
            throw std::invalid_argument("clause literals must be distinct");
    }
    Builder b;
    std::vector<int> pos(n), neg(n);
    std::vector<std::array<int, 3>> occ(m);
    for (int x = 0; x < n; ++x) {
        pos[x] = b.fresh();
        neg[x] = b.fresh();
    }
    for (int c = 0; c < m; ++c)
        for (int s = 0; s < 3; ++s)
            occ[c][s] = b.fresh();
    auto lit = [&](int l) { return l > 0 ? pos[l - 1] : neg[-l - 1]; };
    for (int x = 0; x < n; ++x) {
        b.place(pos[x]);
        for (int c = 0; c < m; ++c)
            for (int s = 0; s < 3; ++s)
                if (f.clauses[c][s] == -(x + 1))
                    b.place(occ[c][s]);
        b.place(neg[x]);
        for (int c = 0; c < m; ++c)
            for (int s = 0; s < 3; ++s)
                if (f.clauses[c][s] == x + 1)
                    b.place(occ[c][s]);
        b.edge(pos[x], neg[x]);
    }
    for (int c = 0; c < m; ++c) {
        for (int s = 0; s < 3; ++s)
            b.edge(lit(-f.clauses[c][s]), occ[c][s]);
        b.edge(occ[c][0], occ[c][1]);
        b.edge(occ[c][0], occ[c][2]);
        b.edge(occ[c][1], occ[c][2]);
    }
    ReductionOutput out;
    out.graph = b.build();
    out.threshold = n + m;
    out.scheme = "3sat";
    return with_meta(std::move(out), 0);
}

auto satisfiable(const Cnf &f) -> bool
{
    if (f.vars > 24)
        throw std::length_error("too many variables for brute force");
    for (std::uint32_t a = 0; a < (1u << f.vars); ++a) {
        bool all = true;
        for (const auto &c : f.clauses) {
            bool any = false;
            for (int l : c) {
                bool val = (a >> (std::abs(l) - 1)) & 1u;
                if ((l > 0) == val) {
                    any = true;
                    break;
                }
            }
            if (!any) {
                all = false;
                break;
            }
        }
        if (all)
            return true;
    }
    return false;
}

auto parse_dummy_scheme(const std::string &s) -> DummyScheme
{
    if (s == "LR")
        return DummyScheme::LR;
    if (s == "RL")
        return DummyScheme::RL;
    if (s == "RcoreL")
        return DummyScheme::RcoreL;
    if (s == "coreLR")
        return DummyScheme::coreLR;
    throw std::invalid_argument("unknown scheme: " + s);
}

auto scheme_name(DummyScheme s) -> std::string
{
    switch (s) {
    case DummyScheme::LR:
        return "LR";
    case DummyScheme::RL:
        return "RL";
    case DummyScheme::RcoreL:
        return "RcoreL";
    case DummyScheme::coreLR:
        return "coreLR";
    }
    return "?";
}

auto gen_two_subdivision(const OrderedGraph &g, std::int64_t k, DummyScheme scheme) -> ReductionOutput
{
    Builder b;
    std::vector<int> core(g.n());
    for (auto &c : core)
        c = b.fresh();
    auto es = g.edges();
    std::vector<int> left(es.size()), right(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        left[i] = b.fresh();
        right[i] = b.fresh();
        b.edge(core[es[i].first], left[i]);
        b.edge(left[i], right[i]);
        b.edge(right[i], core[es[i].second]);
    }
    auto place_all = [&](const std::vector<int> &ids) {
        for (int id : ids)
            b.place(id);
    };
    switch (scheme) {
    case DummyScheme::LR:
    case DummyScheme::RL:
        place_all(core);
        for (std::size_t i = 0; i < es.size(); ++i) {
            bool lr = scheme == DummyScheme::LR;
            b.place(lr ? left[i] : right[i]);
            b.place(lr ? right[i] : left[i]);
        }
        break;
    case DummyScheme::RcoreL:
        place_all(right);
        place_all(core);
        place_all(left);
        break;
    case DummyScheme::coreLR:
        place_all(core);
        place_all(left);
        place_all(right);
        break;
    }
    ReductionOutput out;
    out.graph = b.build();
    out.offset = static_cast<std::int64_t>(es.size());
    out.threshold = k + out.offset;
    out.scheme = scheme_name(scheme);
    return with_meta(std::move(out), k);
}

auto gen_long_subdivision(const OrderedGraph &g, std::int64_t k, bool flip) -> ReductionOutput
{
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    Builder b;
    std::vector<int> core(g.n());
    for (auto &c : core)
        c = b.fresh();
    for (int c : core)
        b.place(c);
    // chain[e][side][i-1] is the layer-i vertex on the side of endpoint `side`
    std::vector<std::array<std::vector<int>, 2>> chain(m);
    for (int e = 0; e < m; ++e)
        for (int side = 0; side < 2; ++side) {
            int prev = core[side == 0 ? es[e].first : es[e].second];
            for (int i = 1; i <= e + 1; ++i) {
                int id = b.fresh();
                chain[e][side].push_back(id);
                b.edge(prev, id);
                prev = id;
            }
        }
    std::int64_t offset = 0;
    for (int layer = 1; layer <= m; ++layer) {
        // (endpoint, edge index, id) for the edges that reach this layer
        std::vector<std::tuple<Vertex, int, int>> row;
        for (int e = layer - 1; e < m; ++e) {
            row.emplace_back(es[e].first, e, chain[e][0][layer - 1]);
            row.emplace_back(es[e].second, e, chain[e][1][layer - 1]);
        }
        std::sort(row.begin(), row.end());
        if (flip && layer % 2 == 1)
            std::reverse(row.begin(), row.end());
        int top = layer - 1; // the edge whose chains meet in this layer
        int lo = -1, hi = -1;
        for (int i = 0; i < static_cast<int>(row.size()); ++i)
            if (std::get<1>(row[i]) == top)
                (lo < 0 ? lo : hi) = i;
        int len = hi - lo;
        int prev = std::get<2>(row[lo]);
        int inserted = 0;
        for (int i = 0; i < static_cast<int>(row.size()); ++i) {
            b.place(std::get<2>(row[i]));
            if (i >= lo && i < hi) {
                int w = b.fresh();
                b.place(w);
                b.edge(prev, w);
                prev = w;
                ++inserted;
                if (i == hi - 1 && len % 2 == 1) {
                    w = b.fresh();
                    b.place(w);
                    b.edge(prev, w);
                    prev = w;
                    ++inserted;
                }
            }
        }
        b.edge(prev, std::get<2>(row[hi]));
        offset += layer + inserted / 2;
    }
    ReductionOutput out;
    out.graph = b.build();
    out.offset = offset;
    out.threshold = k + offset;
    out.scheme = flip ? "flip" : "straight";
    return with_meta(std::move(out), k);
}

void check_train(const Train &t)
{
    int n = t.graph.n();
    int a = static_cast<int>(t.inputs.size()), c = static_cast<int>(t.outputs.size());
    if (a + c > n)
        throw std::invalid_argument("train: inputs and outputs overlap");
    for (int i = 0; i < a; ++i)
        if (t.inputs[i] != i)
            throw std::invalid_argument("train: inputs are not the prefix");
    for (int i = 0; i < c; ++i)
        if (t.outputs[i] != n - c + i)
            throw std::invalid_argument("train: outputs are not the suffix");
    if (!is_independent(t.graph, t.inputs) || !is_independent(t.graph, t.outputs))
        throw std::invalid_argument("train: inputs or outputs are not independent");
}

auto couple_trains(const Train &a, const Train &b) -> Train
{
    if (a.outputs.size() != b.inputs.size())
        throw std::invalid_argument("coupling: arity mismatch");
    int na = a.graph.n(), shift = na - static_cast<int>(b.inputs.size());
    Train t;
    t.graph = OrderedGraph(shift + b.graph.n());
    for (auto [u, v] : a.graph.edges())
        t.graph.add_edge(u, v);
    for (auto [u, v] : b.graph.edges())
        t.graph.add_edge(u + shift, v + shift);
    t.inputs = a.inputs;
    for (Vertex y : b.outputs)
        t.outputs.push_back(y + shift);
    check_train(t);
    return t;
}

auto parse_train_target(const std::string &s) -> TrainTarget
{
    if (s == "abxba")
        return TrainTarget::abxba;
    if (s == "abccab")
        return TrainTarget::abccab;
    throw std::invalid_argument("unknown train target: " + s);
}

auto target_name(TrainTarget t) -> std::string { return t == TrainTarget::abxba ? "abxba" : "abccab"; }

auto swap_gadget(TrainTarget t, int l, int j) -> PermutationGadget
{
    if (l < 2 || j < 1 || j >= l)
        throw std::invalid_argument("swap gadget needs 1 <= j < l");
    Builder b;
    // 1-based copies x^s_i, s = 0..3
    std::vector<std::vector<int>> x(4, std::vector<int>(l + 1, -1));
    PermutationGadget p;
    p.sigma.resize(l);
    std::iota(p.sigma.begin(), p.sigma.end(), 0);
    std::swap(p.sigma[j - 1], p.sigma[j]);
    p.kvec.assign(l, 0);
    if (t == TrainTarget::abxba) {
        for (int s = 0; s < 4; ++s)
            for (int i = 1; i <= l; ++i)
                x[s][i] = b.fresh();
        int u = b.fresh(), v = b.fresh(), w = b.fresh();
        for (int i = 1; i <= l; ++i)
            b.place(x[0][i]);
        for (int i = 1; i <= l; ++i) {
            if (i == j) {
                b.place(u);
                b.place(v);
            }
            b.place(x[1][i]);
        }
        for (int i = 1; i <= l; ++i) {
            if (i == j) {
                b.place(w);
                b.place(x[2][j + 1]);
                b.place(x[2][j]);
                ++i;
                continue;
            }
            b.place(x[2][i]);
        }
        for (int i = 1; i <= l; ++i)
            b.place(x[3][i == j ? j + 1 : i == j + 1 ? j : i]);
        for (int i = 1; i <= l; ++i) {
            if (i == j + 1) {
                b.edge(x[0][i], x[1][i]);
                b.edge(x[1][i], u);
                b.edge(u, w);
                b.edge(w, x[2][i]);
                b.edge(x[2][i], x[3][i]);
                p.kvec[i - 1] = 6;
            }
            else {
                b.edge(x[0][i], x[1][i]);
                b.edge(x[1][i], x[2][i]);
                b.edge(x[2][i], x[3][i]);
                p.kvec[i - 1] = 4;
            }
        }
        b.edge(v, x[0][j]);
        b.edge(v, u);
        b.edge(v, x[1][j]);
        b.edge(v, x[2][j]);
        b.edge(x[1][j], x[1][j + 1]);
    }
    else {
        for (int s : {0, 2, 3})
            for (int i = 1; i <= l; ++i)
                x[s][i] = b.fresh();
        int u[4];
        for (int &id : u)
            id = b.fresh();
        for (int i = 1; i <= l; ++i)
            b.place(x[0][i]);
        for (int id : u)
            b.place(id);
        for (int i = l; i >= 1; --i)
            b.place(x[2][i == j ? j + 1 : i == j + 1 ? j : i]);
        for (int i = 1; i <= l; ++i)
            b.place(x[3][i == j ? j + 1 : i == j + 1 ? j : i]);
        for (int i = 1; i <= l; ++i) {
            if (i == j || i == j + 1) {
                int a = i == j ? u[0] : u[1], c = i == j ? u[2] : u[3];
                b.edge(x[0][i], a);
                b.edge(a, c);
                b.edge(c, x[2][i]);
                p.kvec[i - 1] = 5;
            }
            else {
                b.edge(x[0][i], x[2][i]);
                p.kvec[i - 1] = 3;
            }
            b.edge(x[2][i], x[3][i]);
        }
    }
    p.train.graph = b.build();
    int n = p.train.graph.n();
    for (int i = 0; i < l; ++i) {
        p.train.inputs.push_back(i);
        p.train.outputs.push_back(n - l + i);
    }
    check_train(p.train);
    return p;
}

auto identity_gadget(int l) -> PermutationGadget
{
    if (l < 1)
        throw std::invalid_argument("identity gadget needs l >= 1");
    PermutationGadget p;
    p.train.graph = OrderedGraph(2 * l);
    for (int i = 0; i < l; ++i) {
        p.train.graph.add_edge(i, l + i);
        p.train.inputs.push_back(i);
        p.train.outputs.push_back(l + i);
        p.sigma.push_back(i);
        p.kvec.push_back(2);
    }
    return p;
}

auto compose_gadgets(const PermutationGadget &a, const PermutationGadget &b) -> PermutationGadget
{
    if (a.sigma.size() != b.sigma.size())
        throw std::invalid_argument("composition: arity mismatch");
    PermutationGadget p;
    p.train = couple_trains(a.train, b.train);
    std::size_t l = a.sigma.size();
    for (std::size_t i = 0; i < l; ++i) {
        p.sigma.push_back(b.sigma[a.sigma[i]]);
        p.kvec.push_back(a.kvec[i] + b.kvec[a.sigma[i]] - 1);
    }
    for (int k : p.kvec)
        if ((k - p.kvec[0]) % 2 != 0)
            throw std::logic_error("composition: kvec lost parity uniformity");
    return p;
}

auto bubble_swaps(const std::vector<int> &sigma) -> std::vector<int>
{
    // arr[p] = input currently at position p; sort by destination
    std::vector<int> arr(sigma.size()), out;
    std::iota(arr.begin(), arr.end(), 0);
    for (std::size_t pass = 0; pass < arr.size(); ++pass)
        for (std::size_t p = 0; p + 1 < arr.size(); ++p)
            if (sigma[arr[p]] > sigma[arr[p + 1]]) {
                std::swap(arr[p], arr[p + 1]);
                out.push_back(static_cast<int>(p) + 1);
            }
    return out;
}

auto realize_permutation(TrainTarget t, const std::vector<int> &sigma) -> PermutationGadget
{
    int l = static_cast<int>(sigma.size());
    auto swaps = bubble_swaps(sigma);
    if (swaps.empty())
        return identity_gadget(l);
    auto p = swap_gadget(t, l, swaps[0]);
    for (std::size_t i = 1; i < swaps.size(); ++i)
        p = compose_gadgets(p, swap_gadget(t, l, swaps[i]));
    if (p.sigma != sigma)
        throw std::logic_error("bubble sort produced the wrong permutation");
    return p;
}

auto gen_train_reduction(const OrderedGraph &g, std::int64_t k, TrainTarget t) -> ReductionOutput
{
    auto es = g.edges();
    int n = g.n(), m = static_cast<int>(es.size());
    if (m == 0)
        throw std::invalid_argument("train reduction needs at least one edge");
    // locomotive: V(G), then v_e sorted by (endpoint, edge)
    std::vector<std::pair<Vertex, int>> ve;
    for (int e = 0; e < m; ++e) {
        ve.emplace_back(es[e].first, e);
        ve.emplace_back(es[e].second, e);
    }
    std::sort(ve.begin(), ve.end());
    Train loco;
    loco.graph = OrderedGraph(n + 2 * m);
    std::vector<int> sigma(2 * m);
    std::vector<std::array<int, 2>> slot(m, {-1, -1});
    for (int i = 0; i < 2 * m; ++i) {
        auto [v, e] = ve[i];
        loco.graph.add_edge(v, n + i);
        loco.outputs.push_back(n + i);
        int side = v == es[e].first ? 0 : 1;
        slot[e][side] = i;
        sigma[i] = 2 * e + side;
    }
    check_train(loco);
    auto gadget = realize_permutation(t, sigma);

    Train caboose;
    caboose.graph = OrderedGraph(4 * m);
    for (int i = 0; i < 2 * m; ++i) {
        caboose.inputs.push_back(i);
        int z = t == TrainTarget::abxba ? i : 2 * m - 1 - i;
        caboose.graph.add_edge(i, 2 * m + z);
    }
    for (int j = 0; j < m; ++j)
        caboose.graph.add_edge(2 * m + 2 * j, 2 * m + 2 * j + 1);
    check_train(caboose);

    ReductionOutput out;
    out.graph = couple_trains(couple_trains(loco, gadget.train), caboose).graph;
    for (int e = 0; e < m; ++e)
        out.offset += (gadget.kvec[slot[e][0]] + gadget.kvec[slot[e][1]] + 2) / 2;
    out.threshold = k + out.offset;
    out.scheme = target_name(t);
    out = with_meta(std::move(out), k);
    out.meta["swaps"] = std::to_string(bubble_swaps(sigma).size());
    return out;
}

auto braiding_pair() -> std::pair<Boundaried, Boundaried>
{
    // a b1 c d e1 f1 g
    Boundaried g1{OrderedGraph(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}}), {0, 2, 3, 6}};
    // a b2 b2' c d e2 f2 g
    Boundaried g2{OrderedGraph(8, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {1, 2}, {4, 5}, {5, 6}, {6, 7}, {1, 5}, {2, 6}}),
                  {0, 3, 4, 7}};
    return {g1, g2};
}

auto gadget_pair(const PermutationGadget &p) -> std::pair<Boundaried, Boundaried>
{
    Boundaried a{p.train.graph, p.train.inputs};
    a.boundary.insert(a.boundary.end(), p.train.outputs.begin(), p.train.outputs.end());
    int l = static_cast<int>(p.sigma.size());
    int inner = 0;
    for (int k : p.kvec) {
        if (k < 2)
            throw std::invalid_argument("linear forest paths need at least two vertices");
        inner += k - 2;
    }
    // boundary x_1..x_l, y_1..y_l, then path interiors
    Boundaried b{OrderedGraph(2 * l + inner), {}};
    for (int i = 0; i < 2 * l; ++i)
        b.boundary.push_back(i);
    int next = 2 * l;
    for (int i = 0; i < l; ++i) {
        int prev = i;
        for (int s = 0; s < p.kvec[i] - 2; ++s) {
            b.graph.add_edge(prev, next);
            prev = next++;
        }
        b.graph.add_edge(prev, l + p.sigma[i]);
    }
    return {a, b};
}

namespace {

auto alpha_of(const OrderedGraph &g) -> std::int64_t
{
    if (g.n() <= 20)
        return alpha_brute(g, Weights::unit(g.n()), 20).witness.size();
    return alpha_unit(g);
}

auto glue(const Boundaried &inside, const OrderedGraph &host, const std::vector<std::vector<int>> &touch)
    -> OrderedGraph
{
    int n = inside.graph.n(), h = host.n();
    OrderedGraph g(n + h);
    for (auto [u, v] : inside.graph.edges())
        g.add_edge(u, v);
    for (auto [u, v] : host.edges())
        g.add_edge(n + u, n + v);
    for (int x = 0; x < h; ++x)
        for (int bi : touch[x])
            g.add_edge(n + x, inside.boundary[bi]);
    return g;
}

} // namespace

auto interchange_trial(const Boundaried &a, const Boundaried &b, int extra, double p, Rng &rng)
    -> std::pair<std::int64_t, std::int64_t>
{
    if (a.boundary.size() != b.boundary.size())
        throw std::invalid_argument("boundaries differ in size");
    auto host = random_graph(extra, p, rng);
    std::vector<std::vector<int>> touch(extra);
    for (int x = 0; x < extra; ++x)
        for (std::size_t bi = 0; bi < a.boundary.size(); ++bi)
            if (rng.chance(p))
                touch[x].push_back(static_cast<int>(bi));
    return {alpha_of(glue(a, host, touch)), alpha_of(glue(b, host, touch))};
}

auto scheme_catalog(const std::string &scheme) -> Catalog
{
    auto sub = [](const char *name, const char *lit) {
        return CatalogEntry{name, parse_pattern(lit), MatchMode::Subgraph};
    };
    auto ind = [](const char *name, const char *lit) {
        return CatalogEntry{name, parse_pattern(lit), MatchMode::Induced};
    };
    Catalog c;
    if (scheme == "3sat")
        c.checked = {ind("bad", "4:1-2,1-4")};
    else if (scheme == "LR")
        c.unchecked = {"adb", "abd", "abnce", "abncde", "abcd", "acbd", "adcb", "aenbcd"};
    else if (scheme == "RL")
        c.unchecked = {"adb", "acbd", "aenbdc", "abd", "abnce", "abcd", "abncde"};
    else if (scheme == "RcoreL")
        c.checked = {sub("badc", "4:1-2,1-4,3-4"), sub("aabbcc", "6:1-2,3-4,5-6")};
    else if (scheme == "coreLR") {
        c.checked = {sub("abbcca", "6:1-6,2-3,4-5"), sub("aabbcc", "6:1-2,3-4,5-6")};
        c.unchecked = {"acbnde", "aednbc"};
    }
    else if (scheme == "straight")
        c.checked = {sub("abxxba", "6:1-6,2-5"), sub("abcbca", "6:1-6,2-4,3-5")};
    else if (scheme == "flip")
        c.checked = {sub("abcabc", "6:1-4,2-5,3-6")};
    else if (scheme == "abxba")
        c.checked = {ind("abxba", "5:1-5,2-4")};
    else if (scheme == "abccab")
        c.checked = {ind("abccab", "6:1-5,2-6,3-4")};
    else
        throw std::invalid_argument("unknown scheme: " + scheme);
    return c;
}

auto VerifyReport::ok() const -> bool
{
    if (!equivalent)
        return false;
    if (scheme != "3sat" && !offset_exact)
        return false;
    return std::all_of(free.begin(), free.end(), [](const auto &kv) { return kv.second; });
}

namespace {

auto alpha_capped(const OrderedGraph &g, int cap, std::string &engine) -> std::int64_t
{
    if (g.n() <= cap) {
        engine = "brute";
        return static_cast<std::int64_t>(alpha_brute(g, Weights::unit(g.n()), cap).witness.size());
    }
    engine = "reduce";
    return alpha_unit(g);
}

void sweep(VerifyReport &r, const ReductionOutput &out)
{
    auto cat = scheme_catalog(out.scheme);
    for (const auto &e : cat.checked)
        r.free[e.name] = !contains_pattern(out.graph, e.pattern, e.mode).has_value();
    r.unchecked = cat.unchecked;
}

} // namespace

auto verify_reduction(const ReductionOutput &out, const OrderedGraph &src, std::int64_t k, int cap)
    -> VerifyReport
{
    VerifyReport r;
    r.scheme = out.scheme;
    std::string ignored;
    r.alpha_src = alpha_capped(src, cap, ignored);
    r.alpha_out = alpha_capped(out.graph, cap, r.engine);
    r.source_yes = r.alpha_src >= k;
    r.output_yes = r.alpha_out >= out.threshold;
    r.equivalent = r.source_yes == r.output_yes;
    r.offset_exact = r.alpha_out - r.alpha_src == out.offset;
    sweep(r, out);
    return r;
}

auto verify_3sat(const ReductionOutput &out, const Cnf &f, int cap) -> VerifyReport
{
    VerifyReport r;
    r.scheme = out.scheme;
    r.alpha_out = alpha_capped(out.graph, cap, r.engine);
    r.source_yes = satisfiable(f);
    r.output_yes = r.alpha_out >= out.threshold;
    r.equivalent = r.source_yes == r.output_yes;
    sweep(r, out);
    return r;
}

auto reduction_from_file(const GraphFile &f) -> ReductionOutput
{
    ReductionOutput out;
    out.graph = f.graph;
    out.meta = f.meta;
    auto get = [&](const char *key) -> std::string {
        auto it = f.meta.find(key);
        if (it == f.meta.end())
            throw std::invalid_argument(std::string("reduction file lacks meta key ") + key);
        return it->second;
    };
    out.scheme = get("scheme");
    out.threshold = std::stoll(get("threshold"));
    out.offset = std::stoll(get("offset"));
    return out;
}

} // namespace omwis
