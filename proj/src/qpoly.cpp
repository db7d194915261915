#include "omwis/qpoly.hpp"

#include "omwis/bipartite.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <unordered_map>

namespace omwis {

void for_each_independent(const OrderedGraph &g, const std::vector<Vertex> &from, int max_size,
                          const std::function<void(const std::vector<Vertex> &)> &visit)
{
    std::vector<Vertex> cur;
    std::size_t want = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (cur.size() == want) {
            visit(cur);
            return;
        }
        for (std::size_t j = i; j + (want - cur.size()) <= from.size(); ++j) {
            Vertex v = from[j];
            if (std::any_of(cur.begin(), cur.end(), [&](Vertex x) { return g.adjacent(x, v); }))
                continue;
            cur.push_back(v);
            rec(j + 1);
            cur.pop_back();
        }
    };
    for (int s = 0; s <= max_size && static_cast<std::size_t>(s) <= from.size(); ++s) {
        want = static_cast<std::size_t>(s);
        rec(0);
    }
}

namespace {

auto better(const Sol &a, const Sol &b) -> bool { return a.value > b.value; }

void remove_all(std::vector<VertexSet> &sets, const VertexSet &gone)
{
    for (auto &s : sets)
        s -= gone;
}

// ---------------------------------------------------------------- seagulls

class SeagullIndex {
public:
    explicit SeagullIndex(const OrderedGraph &g) : g_(g)
    {
        int n = g.n();
        for (Vertex y = 0; y < n; ++y) {
            left_.push_back(g.row(y) & range_set(n, 0, y));
            right_.push_back(g.row(y) & range_set(n, y + 1, n));
        }
    }

    auto count(const VertexSet &s) const -> std::int64_t
    {
        std::int64_t total = 0;
        for (auto y = s.find_first(); y != VertexSet::npos; y = s.find_next(y)) {
            if (!left_[y].intersects(s) || !right_[y].intersects(s))
                continue;
            total += static_cast<std::int64_t>((left_[y] & s).count() * (right_[y] & s).count());
        }
        return total;
    }

    auto has_right(Vertex v, const VertexSet &s) const -> bool { return right_[v].intersects(s); }

    auto first(const VertexSet &s) const -> std::optional<Seagull>
    {
        for (auto x = s.find_first(); x != VertexSet::npos; x = s.find_next(x)) {
            auto ys = right_[x] & s;
            for (auto y = ys.find_first(); y != VertexSet::npos; y = ys.find_next(y)) {
                auto zs = right_[y] & s;
                if (zs.any())
                    return Seagull{static_cast<Vertex>(x), static_cast<Vertex>(y), first_of(zs)};
            }
        }
        return std::nullopt;
    }

    auto branch_vertex(const VertexSet &s) const -> Vertex
    {
        auto sg = first(s);
        if (!sg)
            throw std::invalid_argument("graph has no seagull");
        std::int64_t total = count(s);
        Vertex best = -1;
        std::int64_t best_cover = -1;
        std::array<Vertex, 3> cand{sg->x, sg->y, sg->z};
        for (Vertex v : cand) {
            std::int64_t cover = total - count(s - closed_nbhd(g_, v));
            if (cover > best_cover) {
                best_cover = cover;
                best = v;
            }
        }
        return best;
    }

private:
    const OrderedGraph &g_;
    std::vector<VertexSet> left_, right_;
};

auto set_key(const VertexSet &s) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> key(s.num_blocks());
    boost::to_block_range(s, key.begin());
    return key;
}

struct KeyHash {
    auto operator()(const std::vector<std::uint64_t> &k) const -> std::size_t
    {
        return boost::hash_range(k.begin(), k.end());
    }
};

class AabbSolver {
public:
    AabbSolver(const OrderedGraph &g, const std::vector<std::int64_t> &w, Search &search)
        : g_(g), w_(w), search_(search), index_(g)
    {
    }

    auto solve(const VertexSet &s, long parent, const char *action, std::int64_t credit) -> Sol
    {
        long id = search_.node(parent, action, credit);
        std::vector<std::uint64_t> key;
        if (search_.options().memo) {
            key = set_key(s);
            if (auto it = memo_.find(key); it != memo_.end())
                return it->second;
        }
        Sol best;
        if (!index_.first(s)) {
            // no vertex has neighbours on both sides
            std::vector<int> side(g_.n(), -1);
            for (Vertex v : members(s))
                side[v] = index_.has_right(v, s) ? 1 : 0;
            best = mwis_bipartite(g_, w_, s, &side);
        }
        else {
            Vertex v = index_.branch_vertex(s);
            VertexSet out = s;
            out.reset(v);
            best = solve(out, id, "exclude", 0);
            Sol in = solve(s - closed_nbhd(g_, v), id, "include", w_[v]);
            in.add(v, w_[v]);
            if (better(in, best))
                best = std::move(in);
        }
        if (search_.options().memo)
            memo_.emplace(std::move(key), best);
        return best;
    }

private:
    const OrderedGraph &g_;
    const std::vector<std::int64_t> &w_;
    Search &search_;
    SeagullIndex index_;
    std::unordered_map<std::vector<std::uint64_t>, Sol, KeyHash> memo_;
};

// ---------------------------------------------------------------- aakbb

struct Refined {
    VertexSet x, yl, yr, z;
};

class Halver {
public:
    Halver(const OrderedGraph &g, const std::vector<std::int64_t> &w, int k, const InstanceSink &emit,
           Search *search)
        : g_(g), w_(w), k_(k), emit_(emit), search_(search)
    {
    }

    void run(const StructuredInstance &inst, long parent)
    {
        int n = g_.n();
        auto ys = members(inst.y);
        std::size_t half = (ys.size() + 1) / 2;
        VertexSet yl(n), yr(n);
        for (std::size_t i = 0; i < ys.size(); ++i)
            (i < half ? yl : yr).set(ys[i]);
        std::vector<Vertex> right(ys.begin() + static_cast<std::ptrdiff_t>(half), ys.end());
        for_each_independent(g_, right, k_, [&](const std::vector<Vertex> &guess) {
            Sol credit;
            for (Vertex v : guess)
                credit.add(v, w_[v]);
            long id = node(parent, "guess", credit.value);
            auto nb = open_nbhd(g_, guess);
            Refined r{inst.x - nb, yl - nb, VertexSet(n), inst.z - nb};
            if (static_cast<int>(guess.size()) == k_)
                r.yr = (yr - closed_nbhd(g_, guess)) & range_set(n, guess.back() + 1, n);
            branch(r, credit, id);
        });
    }

private:
    auto node(long parent, const char *action, std::int64_t credit) -> long
    {
        return search_ != nullptr ? search_->node(parent, action, credit) : 0;
    }

    void branch(const Refined &r, const Sol &credit, long parent)
    {
        VertexSet left = r.x | r.yl, right = r.yr | r.z;
        auto el = count_edges(g_, left), er = count_edges(g_, right);
        if (el == 0) {
            emit_(StructuredInstance{r.x | r.yl, r.yr, r.z}, credit);
            return;
        }
        if (er == 0) {
            emit_(StructuredInstance{r.x, r.yl, r.yr | r.z}, credit);
            return;
        }
        // an edge of the sparser side dominates every edge of the denser one
        bool dense_left = el >= er;
        const VertexSet &sparse = dense_left ? right : left;
        const VertexSet &dense = dense_left ? left : right;
        auto dense_edges = dense_left ? el : er;
        Vertex u = -1, v = -1;
        for (auto a = sparse.find_first(); a != VertexSet::npos; a = sparse.find_next(a)) {
            auto nb = g_.row(static_cast<Vertex>(a)) & sparse & range_set(g_.n(), static_cast<Vertex>(a) + 1, g_.n());
            if (nb.any()) {
                u = static_cast<Vertex>(a);
                v = first_of(nb);
                break;
            }
        }
        auto cover = [&](Vertex x) { return dense_edges - count_edges(g_, dense - closed_nbhd(g_, x)); };
        auto cu = cover(u), cv = cover(v);
        Vertex x = cv > cu ? v : u;
        if (search_ != nullptr && search_->options().check_structure && 2 * std::max(cu, cv) < dense_edges)
            throw std::logic_error("halving: no endpoint covers half of the denser side; input is not aakbb-free");

        std::vector<VertexSet> sets{r.x, r.yl, r.yr, r.z};
        auto out = sets;
        VertexSet single(g_.n());
        single.set(x);
        remove_all(out, single);
        branch(Refined{out[0], out[1], out[2], out[3]}, credit, node(parent, "exclude", 0));
        auto in = sets;
        remove_all(in, closed_nbhd(g_, x));
        Sol c = credit;
        c.add(x, w_[x]);
        branch(Refined{in[0], in[1], in[2], in[3]}, c, node(parent, "include", w_[x]));
    }

    const OrderedGraph &g_;
    const std::vector<std::int64_t> &w_;
    int k_;
    const InstanceSink &emit_;
    Search *search_;
};

class AakbbSolver {
public:
    AakbbSolver(const OrderedGraph &g, const std::vector<std::int64_t> &w, int k, Search &search)
        : g_(g), w_(w), k_(k), search_(search)
    {
    }

    auto solve(const StructuredInstance &inst, long id) -> Sol
    {
        if (search_.options().check_structure && (count_edges(g_, inst.x) != 0 || count_edges(g_, inst.z) != 0))
            throw std::logic_error("structured instance with an edge inside X or Z; input is not aakbb-free");
        auto mu = inst.measure();
        if (mu == 0) {
            std::vector<int> side(g_.n(), -1);
            for (Vertex v : members(inst.x))
                side[v] = 0;
            for (Vertex v : members(inst.z))
                side[v] = 1;
            return mwis_bipartite(g_, w_, inst.x | inst.z, &side);
        }
        if (mu == 1) {
            Vertex y = first_of(inst.y);
            StructuredInstance out{inst.x, VertexSet(g_.n()), inst.z};
            Sol best = solve(out, search_.node(id, "exclude", 0));
            const auto &nb = g_.row(y);
            StructuredInstance in{inst.x - nb, VertexSet(g_.n()), inst.z - nb};
            Sol take = solve(in, search_.node(id, "include", w_[y]));
            take.add(y, w_[y]);
            return better(take, best) ? take : best;
        }
        Sol best;
        bool any = false;
        halve_workspace(
            g_, w_, inst, k_,
            [&](const StructuredInstance &next, const Sol &credit) {
                Sol s = solve(next, search_.node(id, "halve", credit.value));
                s.absorb(credit);
                if (!any || better(s, best)) {
                    best = std::move(s);
                    any = true;
                }
            },
            &search_, id);
        return best;
    }

private:
    const OrderedGraph &g_;
    const std::vector<std::int64_t> &w_;
    int k_;
    Search &search_;
};

// ---------------------------------------------------------------- ababk

auto insert_link(const Chain &c, int at, VertexSet link, char type) -> Chain
{
    Chain out = c;
    out.links.insert(out.links.begin() + at, std::move(link));
    out.type.insert(out.type.begin() + at, type);
    return out;
}

class Refiner {
public:
    Refiner(const OrderedGraph &g, const std::vector<std::int64_t> &w, int j, int k, const ChainSink &emit,
            Search *search)
        : g_(g), w_(w), j_(j), k_(k), emit_(emit), search_(search)
    {
    }

    void run(const Chain &c, long parent)
    {
        int r = c.size(), n = g_.n();
        if (r < 3)
            throw std::invalid_argument("a chain needs at least three links");
        if (j_ < 0 || j_ >= r)
            throw std::invalid_argument("link index out of range");
        auto start = [&](const std::vector<Vertex> &guess, Chain y) {
            Sol credit;
            for (Vertex v : guess)
                credit.add(v, w_[v]);
            remove_all(y.links, closed_nbhd(g_, guess));
            tree(y, credit, node(parent, "guess", credit.value));
        };
        if (0 < j_ && j_ < r - 1) {
            // first k and last k solution vertices in X_j
            for_each_independent(g_, members(c.links[j_]), 2 * k_, [&](const std::vector<Vertex> &guess) {
                Chain y = c;
                if (static_cast<int>(guess.size()) == 2 * k_) {
                    if (k_ > 0)
                        y.links[j_] &= range_set(n, guess[k_ - 1] + 1, guess[k_]);
                }
                else
                    y.links[j_].reset();
                start(guess, std::move(y));
            });
            return;
        }
        // last k solution vertices in X_1 and first k in X_r
        auto first = members(c.links[0]), last = members(c.links[r - 1]);
        for_each_independent(g_, first, k_, [&](const std::vector<Vertex> &i1) {
            auto blocked = open_nbhd(g_, i1);
            for_each_independent(g_, last, k_, [&](const std::vector<Vertex> &ir) {
                if (std::any_of(ir.begin(), ir.end(), [&](Vertex v) { return blocked.test(v); }))
                    return;
                Chain y = c;
                if (static_cast<int>(i1.size()) == k_) {
                    if (k_ > 0)
                        y.links[0] &= range_set(n, 0, i1.front());
                }
                else
                    y.links[0].reset();
                if (static_cast<int>(ir.size()) == k_) {
                    if (k_ > 0)
                        y.links[r - 1] &= range_set(n, ir.back() + 1, n);
                }
                else
                    y.links[r - 1].reset();
                auto guess = i1;
                guess.insert(guess.end(), ir.begin(), ir.end());
                start(guess, std::move(y));
            });
        });
    }

private:
    auto node(long parent, const char *action, std::int64_t credit) -> long
    {
        return search_ != nullptr ? search_->node(parent, action, credit) : 0;
    }

    // Links are cyclic here: the predecessor of the first link is the last.
    void tree(const Chain &y, const Sol &credit, long parent)
    {
        int r = y.size(), n = g_.n();
        const VertexSet &cur = y.links[j_];
        const VertexSet &pred = y.links[(j_ + r - 1) % r];
        const VertexSet &succ = y.links[(j_ + 1) % r];
        VertexSet to_pred(n), to_succ(n);
        for (auto v = cur.find_first(); v != VertexSet::npos; v = cur.find_next(v)) {
            if (g_.row(static_cast<Vertex>(v)).intersects(pred))
                to_pred.set(v);
            if (g_.row(static_cast<Vertex>(v)).intersects(succ))
                to_succ.set(v);
        }
        char t = y.type[j_];
        if (to_pred.none()) {
            emit_(insert_link(y, j_, VertexSet(n), t), credit);
            return;
        }
        if (to_succ.none()) {
            emit_(insert_link(y, j_ + 1, VertexSet(n), t), credit);
            return;
        }
        Vertex us = first_of(to_succ), vs = last_of(to_pred);
        if (vs < us) {
            auto head = cur & range_set(n, 0, vs + 1);
            Chain z = insert_link(y, j_, head, t);
            z.links[j_ + 1] -= head;
            emit_(z, credit);
            return;
        }

        auto span = cur & range_set(n, us, vs + 1);
        auto crossing = [&](const VertexSet &alive) {
            std::size_t e = 0;
            auto s = span & alive;
            for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
                e += (g_.row(static_cast<Vertex>(v)) & (pred | succ) & alive).count();
            return e;
        };
        VertexSet everything(n);
        everything.set();
        std::size_t e1 = 0, e2 = 0;
        for (auto v = span.find_first(); v != VertexSet::npos; v = span.find_next(v)) {
            e1 += (g_.row(static_cast<Vertex>(v)) & pred).count();
            e2 += (g_.row(static_cast<Vertex>(v)) & succ).count();
        }
        auto total = e1 + e2;
        auto touched = span & (to_pred | to_succ);

        // Greedy independent U grown away from the anchor; U, the anchor and
        // one anchor neighbour across the chain dominate the heavier edge set.
        std::vector<Vertex> cand;
        bool from_front = e1 >= e2;
        Vertex anchor = from_front ? us : vs;
        std::vector<Vertex> blockers{anchor};
        while (static_cast<int>(cand.size()) < k_) {
            auto free = touched - closed_nbhd(g_, blockers);
            if (free.none())
                break;
            Vertex x = from_front ? first_of(free) : last_of(free);
            cand.push_back(x);
            blockers.push_back(x);
        }
        cand.push_back(anchor);
        cand.push_back(from_front ? first_of(g_.row(us) & succ) : last_of(g_.row(vs) & pred));
        std::sort(cand.begin(), cand.end());

        Vertex best = -1;
        std::size_t best_cover = 0;
        for (Vertex x : cand) {
            auto cover = total - crossing(everything - closed_nbhd(g_, x));
            if (best < 0 || cover > best_cover) {
                best = x;
                best_cover = cover;
            }
        }
        if (search_ != nullptr && search_->options().check_structure &&
            best_cover * static_cast<std::size_t>(2 * k_ + 4) < total)
            throw std::logic_error("chain refinement: no vertex covers enough crossing edges; input is not ababk-free");

        Chain out = y;
        VertexSet single(n);
        single.set(best);
        remove_all(out.links, single);
        tree(out, credit, node(parent, "exclude", 0));
        Chain in = y;
        remove_all(in.links, closed_nbhd(g_, best));
        Sol c = credit;
        c.add(best, w_[best]);
        tree(in, c, node(parent, "include", w_[best]));
    }

    const OrderedGraph &g_;
    const std::vector<std::int64_t> &w_;
    int j_, k_;
    const ChainSink &emit_;
    Search *search_;
};

auto chain_of(int n, const std::vector<Vertex> &vs) -> Chain
{
    Chain c;
    auto m = static_cast<int>(vs.size());
    int b1 = (m + 2) / 3, b2 = (2 * m + 2) / 3;
    c.links.assign(3, VertexSet(n));
    c.type = {'A', 'B', 'C'};
    for (int i = 0; i < m; ++i)
        c.links[i < b1 ? 0 : i < b2 ? 1 : 2].set(vs[i]);
    return c;
}

class AbabkSolver {
public:
    AbabkSolver(const OrderedGraph &g, const std::vector<std::int64_t> &w, int k, Search &search)
        : g_(g), w_(w), k_(k), search_(search)
    {
    }

    auto solve_part(const VertexSet &part, long parent) -> Sol
    {
        long id = search_.node(parent, "part", 0);
        auto vs = members(part);
        Sol best;
        if (vs.size() <= 2) {
            if (vs.size() == 2 && g_.adjacent(vs[0], vs[1])) {
                Vertex v = w_[vs[1]] > w_[vs[0]] ? vs[1] : vs[0];
                best.add(v, w_[v]);
            }
            else
                for (Vertex v : vs)
                    best.add(v, w_[v]);
            return best;
        }
        return solve_chain(chain_of(g_.n(), vs), id);
    }

private:
    auto smallest(const Chain &c, char type) const -> int
    {
        int at = -1;
        for (int i = 0; i < c.size(); ++i)
            if (c.type[i] == type && (at < 0 || c.links[i].count() < c.links[at].count()))
                at = i;
        return at;
    }

    auto solve_chain(const Chain &c, long id) -> Sol
    {
        if (search_.options().check_structure && !is_chain(g_, c))
            throw std::logic_error("edge between non-consecutive links; input is not ababk-free");
        std::array<int, 3> at{};
        for (int t = 0; t < 3; ++t) {
            at[t] = smallest(c, static_cast<char>('A' + t));
            if (!c.links[at[t]].any())
                continue;
            Sol best;
            bool any = false;
            refine_chain(
                g_, w_, c, at[t], k_,
                [&](const Chain &next, const Sol &credit) {
                    Sol s = solve_chain(next, search_.node(id, "refine", credit.value));
                    s.absorb(credit);
                    if (!any || better(s, best)) {
                        best = std::move(s);
                        any = true;
                    }
                },
                &search_, id);
            return best;
        }
        // the three empty links cut the chain into independent parts
        std::array<VertexSet, 3> parts{VertexSet(g_.n()), VertexSet(g_.n()), VertexSet(g_.n())};
        for (int i = 0; i < c.size(); ++i) {
            if (i == at[0] || i == at[1] || i == at[2])
                continue;
            int p = i < at[0] || i > at[2] ? 0 : i < at[1] ? 1 : 2;
            parts[p] |= c.links[i];
        }
        Sol total;
        for (const auto &p : parts)
            total.absorb(solve_part(p, id));
        return total;
    }

    const OrderedGraph &g_;
    const std::vector<std::int64_t> &w_;
    int k_;
    Search &search_;
};

} // namespace

// ---------------------------------------------------------------- public

auto enumerate_seagulls(const OrderedGraph &g) -> std::vector<Seagull>
{
    std::vector<Seagull> out;
    for (Vertex x = 0; x < g.n(); ++x)
        for (Vertex y : g.neighbors(x))
            if (y > x)
                for (Vertex z : g.neighbors(y))
                    if (z > y)
                        out.push_back({x, y, z});
    return out;
}

auto count_seagulls(const OrderedGraph &g, const VertexSet &alive) -> std::int64_t
{
    return SeagullIndex(g).count(alive);
}

auto branch_vertex_aabb(const OrderedGraph &g, const VertexSet &alive) -> Vertex
{
    return SeagullIndex(g).branch_vertex(alive);
}

auto branch_vertex_aabb(const OrderedGraph &g) -> Vertex { return branch_vertex_aabb(g, g.full_set()); }

auto solve_aabb(const OrderedGraph &g, const Weights &w, const SolveOptions &opt) -> Solution
{
    Search search(opt);
    AabbSolver s(g, w.scaled(), search);
    return search.finish(s.solve(g.full_set(), -1, "aabb", 0), w);
}

void halve_workspace(const OrderedGraph &g, const std::vector<std::int64_t> &w, const StructuredInstance &inst,
                     int k, const InstanceSink &emit, Search *search, long parent)
{
    if (k < 1)
        throw std::invalid_argument("halving needs k >= 1");
    if (inst.measure() < 2)
        throw std::invalid_argument("halving needs a workspace of at least two vertices");
    Halver(g, w, k, emit, search).run(inst, parent);
}

auto halve_workspace(const OrderedGraph &g, const Weights &w, const StructuredInstance &inst, int k)
    -> std::vector<Branch<StructuredInstance>>
{
    std::vector<Branch<StructuredInstance>> out;
    halve_workspace(g, w.scaled(), inst, k,
                    [&](const StructuredInstance &s, const Sol &c) { out.push_back({s, c}); });
    return out;
}

auto solve_aakbb(const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt) -> Solution
{
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    if (k == 0)
        return solve_aabb(g, w, opt);
    Search search(opt);
    long root = search.node(-1, "aakbb");
    AakbbSolver s(g, w.scaled(), k, search);
    StructuredInstance start{g.empty_set(), g.full_set(), g.empty_set()};
    return search.finish(s.solve(start, root), w);
}

auto Chain::all() const -> VertexSet
{
    if (links.empty())
        return {};
    VertexSet s = links.front();
    for (const auto &l : links)
        s |= l;
    return s;
}

auto initial_chain(int n) -> Chain
{
    std::vector<Vertex> vs(n);
    for (Vertex v = 0; v < n; ++v)
        vs[v] = v;
    return chain_of(n, vs);
}

auto is_chain(const OrderedGraph &g, const Chain &c) -> bool
{
    int r = c.size();
    std::vector<int> link(g.n(), -1);
    Vertex prev = -1;
    for (int i = 0; i < r; ++i)
        for (auto v = c.links[i].find_first(); v != VertexSet::npos; v = c.links[i].find_next(v)) {
            if (link[v] >= 0 || static_cast<Vertex>(v) < prev)
                return false;
            link[v] = i;
            prev = static_cast<Vertex>(v);
        }
    for (auto [u, v] : g.edges()) {
        int a = link[u], b = link[v];
        if (a < 0 || b < 0 || a == b || b == a + 1 || (a == 0 && b == r - 1))
            continue;
        return false;
    }
    return true;
}

void refine_chain(const OrderedGraph &g, const std::vector<std::int64_t> &w, const Chain &c, int j, int k,
                  const ChainSink &emit, Search *search, long parent)
{
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    Refiner(g, w, j, k, emit, search).run(c, parent);
}

auto refine_chain(const OrderedGraph &g, const Weights &w, const Chain &c, int j, int k)
    -> std::vector<Branch<Chain>>
{
    std::vector<Branch<Chain>> out;
    refine_chain(g, w.scaled(), c, j, k, [&](const Chain &z, const Sol &cr) { out.push_back({z, cr}); });
    return out;
}

auto solve_ababk(const OrderedGraph &g, const Weights &w, int k, const SolveOptions &opt) -> Solution
{
    if (k < 0)
        throw std::invalid_argument("k must be non-negative");
    Search search(opt);
    AbabkSolver s(g, w.scaled(), k, search);
    return search.finish(s.solve_part(g.full_set(), -1), w);
}

} // namespace omwis
