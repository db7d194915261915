#include "omwis/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace omwis {

auto parse_pattern(const std::string &literal) -> OrderedGraph
{
    auto colon = literal.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("pattern literal needs 'n:' prefix: " + literal);
    int n = 0;
    try {
        n = std::stoi(literal.substr(0, colon));
    }
    catch (const std::logic_error &) {
        throw std::invalid_argument("bad pattern size: " + literal);
    }
    if (n < 0)
        throw std::invalid_argument("bad pattern size: " + literal);
    OrderedGraph h(n);
    std::stringstream rest(literal.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
        if (item.empty())
            continue;
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("bad pattern edge '" + item + "'");
        int u = 0, v = 0;
        try {
            u = std::stoi(item.substr(0, dash));
            v = std::stoi(item.substr(dash + 1));
        }
        catch (const std::logic_error &) {
            throw std::invalid_argument("bad pattern edge '" + item + "'");
        }
        if (u < 1 || v < 1 || u > n || v > n || u == v)
            throw std::invalid_argument("bad pattern edge '" + item + "'");
        h.add_edge(u - 1, v - 1);
    }
    return h;
}

auto format_pattern(const OrderedGraph &h) -> std::string
{
    std::string s = std::to_string(h.n()) + ":";
    bool first = true;
    for (auto [u, v] : h.edges()) {
        if (!first)
            s += ",";
        first = false;
        s += std::to_string(u + 1) + "-" + std::to_string(v + 1);
    }
    return s;
}

auto pat_p3() -> OrderedGraph { return OrderedGraph(3, {{0, 1}, {1, 2}}); }
auto pat_chord() -> OrderedGraph { return OrderedGraph(3, {{0, 1}, {0, 2}}); }
auto pat_chordrev() -> OrderedGraph { return OrderedGraph(3, {{0, 2}, {1, 2}}); }

auto pat_oneedge(int k) -> OrderedGraph { return OrderedGraph(k + 2, {{0, k + 1}}); }

auto pat_aakbb(int k) -> OrderedGraph { return OrderedGraph(k + 4, {{0, 1}, {k + 2, k + 3}}); }

auto pat_ababk(int k) -> OrderedGraph
{
    return OrderedGraph(3 * k + 4, {{0, 2 * k + 2}, {k + 1, 3 * k + 3}});
}

auto pat_abbak(int k) -> OrderedGraph
{
    return OrderedGraph(2 * k + 4, {{0, 2 * k + 3}, {k + 1, k + 2}});
}

auto ext(const OrderedGraph &h, int k) -> OrderedGraph
{
    OrderedGraph g(h.n() + 2 * k);
    for (auto [u, v] : h.edges())
        g.add_edge(u + k, v + k);
    return g;
}

namespace {

// Backtracking matcher. Pattern vertices are assigned in `order`; the
// image of pattern vertex p must lie strictly between the images of its
// assigned order-neighbours with room left for the positions in between.
class Matcher {
public:
    Matcher(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode)
        : g_(g), h_(h), mode_(mode), img_(h.n(), -1)
    {
    }

    void sequential_order()
    {
        order_.resize(h_.n());
        for (int p = 0; p < h_.n(); ++p)
            order_[p] = p;
    }

    // connected pieces first, most constrained vertex next
    void greedy_order(const std::vector<int> &preset)
    {
        int k = h_.n();
        std::vector<char> placed(k, 0);
        order_.clear();
        for (int p : preset) {
            placed[p] = 1;
        }
        std::vector<int> tied(k, 0);
        for (int p : preset)
            for (int q : h_.neighbors(p))
                ++tied[q];
        for (int step = static_cast<int>(preset.size()); step < k; ++step) {
            int best = -1;
            for (int p = 0; p < k; ++p) {
                if (placed[p])
                    continue;
                if (best < 0) {
                    best = p;
                    continue;
                }
                auto key = [&](int q) {
                    bool isolated = h_.degree(q) == 0;
                    return std::tuple(!isolated, tied[q], h_.degree(q));
                };
                if (key(p) > key(best))
                    best = p;
            }
            placed[best] = 1;
            order_.push_back(best);
            for (int q : h_.neighbors(best))
                ++tied[q];
        }
    }

    auto preset(int p, Vertex x) -> bool
    {
        if (!fits(p, x))
            return false;
        img_[p] = x;
        return true;
    }

    auto run() -> bool { return extend(0); }
    auto image() const -> const std::vector<Vertex> & { return img_; }

private:
    auto bounds(int p) const -> std::pair<Vertex, Vertex>
    {
        Vertex lo = p, hi = g_.n() - h_.n() + p;
        for (int q = 0; q < h_.n(); ++q) {
            if (img_[q] < 0)
                continue;
            if (q < p)
                lo = std::max(lo, img_[q] + (p - q));
            else if (q > p)
                hi = std::min(hi, img_[q] - (q - p));
        }
        return {lo, hi};
    }

    auto fits(int p, Vertex x) const -> bool
    {
        auto [lo, hi] = bounds(p);
        if (x < lo || x > hi)
            return false;
        for (int q = 0; q < h_.n(); ++q) {
            if (img_[q] < 0 || q == p)
                continue;
            bool want = h_.adjacent(p, q);
            bool have = g_.adjacent(x, img_[q]);
            if (want && !have)
                return false;
            if (!want && have && mode_ == MatchMode::Induced)
                return false;
        }
        return true;
    }

    auto extend(std::size_t i) -> bool
    {
        if (i == order_.size())
            return true;
        int p = order_[i];
        auto [lo, hi] = bounds(p);
        if (lo > hi)
            return false;
        // cheapest assigned neighbour drives candidate generation
        int anchor = -1;
        for (int q : h_.neighbors(p))
            if (img_[q] >= 0 && (anchor < 0 || g_.degree(img_[q]) < g_.degree(img_[anchor])))
                anchor = q;
        auto attempt = [&](Vertex x) {
            if (!fits(p, x))
                return false;
            img_[p] = x;
            if (extend(i + 1))
                return true;
            img_[p] = -1;
            return false;
        };
        if (anchor >= 0) {
            const auto &nb = g_.neighbors(img_[anchor]);
            for (auto it = std::lower_bound(nb.begin(), nb.end(), lo); it != nb.end() && *it <= hi; ++it)
                if (attempt(*it))
                    return true;
            return false;
        }
        bool free_vertex = mode_ == MatchMode::Subgraph && h_.degree(p) == 0;
        for (Vertex x = lo; x <= hi; ++x) {
            if (attempt(x))
                return true;
            // an unconstrained vertex: a later position can only do worse
            if (free_vertex)
                return false;
        }
        return false;
    }

    const OrderedGraph &g_;
    const OrderedGraph &h_;
    MatchMode mode_;
    std::vector<Vertex> img_;
    std::vector<int> order_;
};

} // namespace

auto find_pattern(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode)
    -> std::optional<std::vector<Vertex>>
{
    if (h.n() > g.n())
        return std::nullopt;
    Matcher m(g, h, mode);
    m.sequential_order();
    if (m.run())
        return m.image();
    return std::nullopt;
}

auto contains_pattern(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode)
    -> std::optional<std::vector<Vertex>>
{
    if (h.n() > g.n())
        return std::nullopt;
    Matcher m(g, h, mode);
    m.greedy_order({});
    if (m.run())
        return m.image();
    return std::nullopt;
}

auto find_pattern_through(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode, Vertex u,
                          Vertex v) -> std::optional<std::vector<Vertex>>
{
    if (h.n() > g.n())
        return std::nullopt;
    if (u > v)
        std::swap(u, v);
    for (auto [a, b] : h.edges()) {
        Matcher m(g, h, mode);
        if (!m.preset(a, u) || !m.preset(b, v))
            continue;
        m.greedy_order({a, b});
        if (m.run())
            return m.image();
    }
    return std::nullopt;
}

auto is_free(const OrderedGraph &g, const OrderedGraph &h, MatchMode mode) -> bool
{
    return !contains_pattern(g, h, mode).has_value();
}

auto is_induced_subpattern(const OrderedGraph &h, const OrderedGraph &host) -> bool
{
    return find_pattern(host, h, MatchMode::Induced).has_value();
}

} // namespace omwis
