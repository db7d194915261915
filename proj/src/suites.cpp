#include "omwis/suites.hpp"

#include "omwis/bipartite.hpp"
#include "omwis/classify.hpp"
#include "omwis/dispatch.hpp"
#include "omwis/hardness.hpp"
#include "omwis/oracle.hpp"
#include "omwis/poly.hpp"
#include "omwis/qpoly.hpp"
#include "omwis/subexp.hpp"

#include <array>
#include <chrono>
#include <map>
#include <sstream>

namespace omwis {

namespace {

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }
    void trial() { ++r_.trials; }
    // records a violation with a description the first time
    void check(bool ok, const std::function<std::string()> &why)
    {
        if (ok)
            return;
        if (r_.violations++ == 0)
            r_.note = why();
    }
    void note(std::string s)
    {
        if (r_.violations == 0)
            r_.note = std::move(s);
    }
    auto result() -> SuiteResult { return r_; }

private:
    SuiteResult r_;
};

auto describe(const OrderedGraph &g) -> std::string { return format_pattern(g); }

auto pick_n(Rng &rng, int lo, int hi) -> int { return lo + static_cast<int>(rng.below(hi - lo + 1)); }

auto alpha_of(const OrderedGraph &g, const Weights &w, const VertexSet &keep) -> Rational
{
    auto sub = induced(g, keep);
    return alpha_brute(sub.graph, w.restrict_to(sub.origin)).weight;
}

auto precedes(const VertexSet &a, const VertexSet &b) -> bool
{
    return a.none() || b.none() || last_of(a) < first_of(b);
}

// exhaustive where affordable, branch-and-reduce on the larger outputs
auto unit_alpha(const OrderedGraph &g) -> std::int64_t
{
    if (g.n() <= 30)
        return static_cast<std::int64_t>(alpha_brute(g, Weights::unit(g.n()), 30).witness.size());
    return alpha_unit(g);
}

auto credit_ok(const OrderedGraph &g, const Weights &w, const Sol &c, const VertexSet &parent,
               const VertexSet &rest) -> bool
{
    bool ok = is_independent(g, c.set);
    std::int64_t sum = 0;
    for (Vertex v : c.set) {
        sum += w.scaled()[v];
        ok = ok && parent.test(v) && !rest.test(v) && !g.row(v).intersects(rest);
    }
    return ok && sum == c.value;
}

struct SolverCase {
    std::string name;
    OrderedGraph pattern;
    std::function<Solution(const OrderedGraph &, const Weights &)> solve;
};

auto solver_cases() -> std::vector<SolverCase>
{
    std::vector<SolverCase> out;
    out.push_back({"p3free", pat_p3(), [](auto &g, auto &w) { return solve_p3free(g, w); }});
    out.push_back({"chordfree", pat_chord(), [](auto &g, auto &w) { return solve_chordfree(g, w, false); }});
    out.push_back({"chordrev", pat_chordrev(), [](auto &g, auto &w) { return solve_chordfree(g, w, true); }});
    for (int k = 0; k <= 2; ++k)
        out.push_back({"oneedgek" + std::to_string(k), pat_oneedge(k),
                       [k](auto &g, auto &w) { return solve_oneedgek(g, w, k); }});
    out.push_back({"aabb", pat_aakbb(0), [](auto &g, auto &w) { return solve_aabb(g, w); }});
    for (int k = 1; k <= 2; ++k)
        out.push_back({"aakbb" + std::to_string(k), pat_aakbb(k),
                       [k](auto &g, auto &w) { return solve_aakbb(g, w, k); }});
    for (int k = 0; k <= 2; ++k)
        out.push_back({"ababk" + std::to_string(k), pat_ababk(k),
                       [k](auto &g, auto &w) { return solve_ababk(g, w, k); }});
    for (int k = 0; k <= 2; ++k)
        out.push_back({"abbak" + std::to_string(k), pat_abbak(k),
                       [k](auto &g, auto &w) { return solve_abbak(g, w, k); }});
    return out;
}

auto oracle_suite(const SolverCase &c) -> std::function<SuiteResult(long, Rng &)>
{
    return [c](long trials, Rng &rng) {
        Tally t("oracle " + c.name);
        while (t.result().trials < trials) {
            int n = pick_n(rng, 1, 13);
            auto g = random_free_graph(n, rng.uniform(), {c.pattern}, rng);
            if (!is_free(g, c.pattern))
                continue;
            auto w = random_weights(n, rng);
            t.trial();
            auto got = c.solve(g, w);
            auto want = alpha_brute(g, w);
            Rational sum(0);
            for (Vertex v : got.witness)
                sum += w[v];
            t.check(got.weight == want.weight && is_independent(g, got.witness) && sum == got.weight, [&] {
                return "graph " + describe(g) + " got " + format_rational(got.weight) + " want " +
                       format_rational(want.weight);
            });
        }
        return t.result();
    };
}

auto seagull_bipartite(long trials, Rng &rng) -> SuiteResult
{
    Tally t("seagull-free graphs are 2-colourable");
    while (t.result().trials < trials) {
        auto g = random_free_graph(pick_n(rng, 1, 12), rng.uniform(), {pat_p3()}, rng, MatchMode::Subgraph);
        if (!enumerate_seagulls(g).empty())
            continue;
        t.trial();
        bool ok = true;
        try {
            auto side = two_coloring(g, g.full_set());
            for (auto [u, v] : g.edges())
                ok = ok && side[u] != side[v];
        }
        catch (const NotBipartite &) {
            ok = false;
        }
        t.check(ok, [&] { return "graph " + describe(g); });
    }
    return t.result();
}

auto seagull_pairs(long trials, Rng &rng) -> SuiteResult
{
    Tally t("seagulls touch pairwise in aabb-free graphs");
    while (t.result().trials < trials) {
        auto g = random_free_graph(pick_n(rng, 3, 12), rng.uniform(), {pat_aakbb(0)}, rng);
        t.trial();
        auto all = enumerate_seagulls(g);
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = a + 1; b < all.size(); ++b) {
                std::array<Vertex, 3> p{all[a].x, all[a].y, all[a].z}, q{all[b].x, all[b].y, all[b].z};
                bool touch = false;
                for (Vertex u : p)
                    for (Vertex v : q)
                        touch = touch || u == v || g.adjacent(u, v);
                t.check(touch, [&] { return "graph " + describe(g); });
            }
    }
    return t.result();
}

auto connected_graph(Rng &rng, int lo, int hi, const std::vector<OrderedGraph> &forbidden) -> OrderedGraph
{
    for (;;) {
        int n = pick_n(rng, lo, hi);
        double p = 0.2 + 0.6 * rng.uniform();
        auto g = forbidden.empty() ? random_graph(n, p, rng) : random_free_graph(n, p, forbidden, rng);
        if (components(g, g.full_set()).size() == 1)
            return g;
    }
}

auto segment_properties(long trials, Rng &rng) -> SuiteResult
{
    Tally t("segment decomposition");
    for (long i = 0; i < trials; ++i) {
        int k = static_cast<int>(rng.below(3));
        auto g = connected_graph(rng, 2, 12, {});
        t.trial();
        auto d = partition_segments(g);
        pick_guards(g, d, k);
        VertexSet seen(g.n());
        std::vector<int> owner(g.n(), -1);
        bool ok = true;
        for (std::size_t s = 0; s < d.segments.size(); ++s) {
            const auto &seg = d.segments[s];
            // consecutive intervals partitioning V
            ok = ok && !seg.z.intersects(seen);
            seen |= seg.z;
            ok = ok && seen == range_set(g.n(), 0, seg.y + 1);
            // closed by an edge ending at the last vertex
            ok = ok && g.adjacent(seg.x, seg.y) && seg.x <= first_of(seg.z) && last_of(seg.z) == seg.y;
            for (Vertex v : members(seg.z))
                owner[v] = static_cast<int>(s);
            // at most k guards on each side, independent and off the roof pair
            ok = ok && static_cast<int>(seg.first.size()) <= k && static_cast<int>(seg.last.size()) <= k;
            std::vector<Vertex> guard = seg.first;
            guard.insert(guard.end(), seg.last.begin(), seg.last.end());
            ok = ok && is_independent(g, guard);
            for (Vertex v : guard)
                ok = ok && seg.z.test(v) && !g.adjacent(v, seg.x) && !g.adjacent(v, seg.y);
        }
        ok = ok && seen == g.full_set();
        // edges stay inside a segment or reach the next one
        for (auto [u, v] : g.edges())
            ok = ok && (owner[u] == owner[v] || owner[v] == owner[u] + 1);
        t.check(ok, [&] { return "k=" + std::to_string(k) + " graph " + describe(g); });
    }
    return t.result();
}

auto guarded_independence(long trials, Rng &rng) -> SuiteResult
{
    Tally t("guarded segment interiors are independent");
    while (t.result().trials < trials) {
        int k = static_cast<int>(rng.below(3));
        int n = pick_n(rng, 2, 12);
        auto g = random_free_graph(n, rng.uniform(), {pat_abbak(k)}, rng);
        for (const auto &c : components(g, g.full_set())) {
            if (c.count() < 2)
                continue;
            t.trial();
            auto d = partition_segments(g, c);
            pick_guards(g, d, k);
            auto roof = members(d.roof);
            for (const auto &s : d.segments) {
                std::vector<Vertex> guard = roof;
                guard.insert(guard.end(), s.first.begin(), s.first.end());
                guard.insert(guard.end(), s.last.begin(), s.last.end());
                t.check(count_edges(g, s.z - closed_nbhd(g, guard)) == 0,
                        [&] { return "k=" + std::to_string(k) + " graph " + describe(g); });
            }
        }
    }
    return t.result();
}

auto chain_locality(long trials, Rng &rng) -> SuiteResult
{
    Tally t("chain refinements keep edge locality");
    for (long i = 0; i < trials; ++i) {
        int k = static_cast<int>(rng.below(2));
        int n = pick_n(rng, 3, 12);
        auto g = random_free_graph(n, rng.uniform(), {pat_ababk(k)}, rng);
        auto w = random_weights(n, rng);
        auto c = initial_chain(n);
        int j = static_cast<int>(rng.below(3));
        t.trial();
        auto why = [&] { return "k=" + std::to_string(k) + " j=" + std::to_string(j) + " " + describe(g); };
        Rational best(-1);
        for (const auto &[z, credit] : refine_chain(g, w, c, j, k)) {
            bool ok = z.size() == c.size() + 1 && is_chain(g, z);
            for (int x = 0; ok && x < c.size(); ++x) {
                if (x < j)
                    ok = z.links[x].is_subset_of(c.links[x]);
                else if (x > j)
                    ok = z.links[x + 1].is_subset_of(c.links[x]);
                ok = ok && z.type[x < j ? x : x + 1] == c.type[x];
            }
            ok = ok && (z.links[j] | z.links[j + 1]).is_subset_of(c.links[j]) && z.type[j] == c.type[j];
            ok = ok && credit_ok(g, w, credit, c.all(), z.all());
            t.check(ok, why);
            best = std::max(best, alpha_of(g, w, z.all()) + Rational(credit.value, w.scale()));
        }
        t.check(best == alpha_brute(g, w).weight, why);
    }
    return t.result();
}

auto line_outer(long trials, Rng &rng) -> SuiteResult
{
    Tally t("workspace halving");
    for (long i = 0; i < trials; ++i) {
        int k = 1 + static_cast<int>(rng.below(2));
        int n = pick_n(rng, 2, 12);
        auto g = random_free_graph(n, rng.uniform(), {pat_aakbb(k)}, rng);
        auto w = random_weights(n, rng);
        StructuredInstance inst{g.empty_set(), g.full_set(), g.empty_set()};
        t.trial();
        auto why = [&] { return "k=" + std::to_string(k) + " " + describe(g); };
        Rational best(-1);
        for (const auto &[next, credit] : halve_workspace(g, w, inst, k)) {
            // a subinstance: Y shrinks, X and Z stay independent and ordered
            bool ok = next.y.is_subset_of(inst.y) && next.x.is_subset_of(inst.x | inst.y) &&
                      next.z.is_subset_of(inst.z | inst.y) && count_edges(g, next.x) == 0 &&
                      count_edges(g, next.z) == 0 && precedes(next.x, next.y) && precedes(next.y, next.z);
            // the measure halves
            ok = ok && next.measure() <= (inst.measure() + 1) / 2;
            ok = ok && credit_ok(g, w, credit, inst.all(), next.all());
            t.check(ok, why);
            best = std::max(best, alpha_of(g, w, next.all()) + Rational(credit.value, w.scale()));
        }
        // the branches together preserve alpha
        t.check(best == alpha_brute(g, w).weight, why);
    }
    return t.result();
}

auto poljak(long trials, Rng &rng) -> SuiteResult
{
    Tally t("double subdivisions add exactly one each");
    for (long i = 0; i < trials; ++i) {
        auto g = random_graph(pick_n(rng, 1, 8), rng.uniform(), rng);
        t.trial();
        auto a = unit_alpha(g);
        auto es = g.edges();
        if (!es.empty()) {
            auto e = es[rng.below(es.size())];
            t.check(unit_alpha(subdivide_twice(g, e)) == a + 1, [&] { return "single, " + describe(g); });
        }
        auto full = gen_two_subdivision(g, 0, DummyScheme::LR).graph;
        t.check(unit_alpha(full) == a + static_cast<std::int64_t>(es.size()),
                [&] { return "full, " + describe(g); });
    }
    return t.result();
}

auto random_cnf(int vars, int clauses, Rng &rng) -> Cnf
{
    Cnf f;
    f.vars = vars;
    for (int c = 0; c < clauses; ++c) {
        std::vector<int> cl;
        while (cl.size() < 3) {
            int l = 1 + static_cast<int>(rng.below(vars));
            if (rng.chance(0.5))
                l = -l;
            if (std::find(cl.begin(), cl.end(), l) == cl.end())
                cl.push_back(l);
        }
        f.clauses.push_back(std::move(cl));
    }
    return f;
}

auto sat_suite(long trials, Rng &rng) -> SuiteResult
{
    Tally t("3sat reduction");
    long sat = 0;
    for (long i = 0; i < trials; ++i) {
        auto f = random_cnf(pick_n(rng, 3, 4), pick_n(rng, 1, 4), rng);
        auto out = gen_3sat(f);
        t.trial();
        auto r = verify_3sat(out, f, 24);
        sat += r.source_yes ? 1 : 0;
        t.check(r.ok(), [&] {
            std::ostringstream s;
            write_cnf(s, f);
            return "formula " + s.str();
        });
    }
    t.note(std::to_string(sat) + " of " + std::to_string(trials) + " satisfiable");
    return t.result();
}

// every ordered graph with at most max_n vertices, in a fixed order
auto all_small_graphs(int max_n) -> std::vector<OrderedGraph>
{
    std::vector<OrderedGraph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            OrderedGraph g(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1u)
                    g.add_edge(pairs[i].first, pairs[i].second);
            out.push_back(std::move(g));
        }
    }
    return out;
}

// Exhaustive over sources with <= 5 vertices at full scale; a reduced trial
// count samples the same list.
auto reduction_suite(const std::string &name, const std::function<ReductionOutput(const OrderedGraph &, std::int64_t)> &gen,
                     bool needs_edge) -> std::function<SuiteResult(long, Rng &)>
{
    return [=](long trials, Rng &rng) {
        Tally t(name);
        auto sources = all_small_graphs(5);
        std::vector<std::size_t> order(sources.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        if (trials < static_cast<long>(sources.size())) {
            std::shuffle(order.begin(), order.end(), rng);
            order.resize(trials);
        }
        for (auto idx : order) {
            const auto &g = sources[idx];
            if (needs_edge && g.m() == 0)
                continue;
            t.trial();
            auto a = unit_alpha(g);
            for (std::int64_t k : {a, a + 1}) {
                auto out = gen(g, k);
                auto r = verify_reduction(out, g, k, 20);
                t.check(r.ok(), [&] {
                    std::string bad;
                    for (const auto &[p, free] : r.free)
                        if (!free)
                            bad += " contains " + p;
                    return "source " + describe(g) + " k=" + std::to_string(k) + " alpha " +
                           std::to_string(r.alpha_out) + " threshold " + std::to_string(out.threshold) + bad;
                });
            }
        }
        return t.result();
    };
}

auto interchange_suite(const std::string &name, std::function<std::pair<Boundaried, Boundaried>()> make)
    -> std::function<SuiteResult(long, Rng &)>
{
    return [=](long trials, Rng &rng) {
        Tally t(name);
        auto [a, b] = make();
        for (long i = 0; i < trials; ++i) {
            int extra = pick_n(rng, 0, 10);
            double p = rng.uniform();
            t.trial();
            auto [x, y] = interchange_trial(a, b, extra, p, rng);
            t.check(x == y, [&] {
                return "host of " + std::to_string(extra) + " vertices: " + std::to_string(x) + " vs " +
                       std::to_string(y);
            });
        }
        return t.result();
    };
}

auto classifier_suite(long, Rng &) -> SuiteResult
{
    Tally t("classifier spot checks and monotonicity");
    const std::vector<std::pair<const char *, Complexity>> spots = {
        {"3:1-2,2-3", Complexity::Polynomial},          {"3:1-2,1-3", Complexity::Polynomial},
        {"4:1-4,2-3", Complexity::Subexponential},      {"5:1-5,2-4", Complexity::NPHard},
        {"4:1-2,3-4", Complexity::Quasipolynomial},     {"4:1-3,2-4", Complexity::Quasipolynomial},
        {"4:1-2,1-4", Complexity::NPHard},              {"4:1-2,1-4,3-4", Complexity::NPHard},
        {"6:1-2,3-4,5-6", Complexity::NPHard},
    };
    for (const auto &[lit, want] : spots) {
        t.trial();
        auto got = classify(parse_pattern(lit)).cls;
        t.check(got == want, [&] { return std::string(lit) + " classified " + to_string(got); });
    }
    t.trial();
    t.check(classify(mirror(pat_chord())).cls == Complexity::Polynomial && mirror(pat_chord()) == pat_chordrev(),
            [] { return std::string("chord mirror"); });
    // every induced subpattern arises by deleting vertices one at a time, so
    // single deletions over all patterns with <= 5 vertices cover every pair
    std::map<std::string, Complexity> cls;
    auto pats = all_small_graphs(5);
    for (const auto &h : pats)
        cls[describe(h)] = classify(h).cls;
    for (const auto &h : pats) {
        if (h.n() < 2)
            continue;
        for (Vertex v = 0; v < h.n(); ++v) {
            auto full = h.full_set();
            full.reset(v);
            auto sub = induced(h, full).graph;
            t.trial();
            t.check(cls[describe(sub)] <= cls[describe(h)],
                    [&] { return describe(sub) + " above " + describe(h); });
        }
        // the family list is closed under mirroring, so classes are too
        t.check(cls[describe(mirror(h))] == cls[describe(h)], [&] { return "mirror of " + describe(h); });
    }
    return t.result();
}

} // namespace

auto property_suites() -> std::vector<Suite>
{
    std::vector<Suite> out;
    for (const auto &c : solver_cases())
        out.push_back({"oracle " + c.name, 1, 500, oracle_suite(c)});
    out.push_back({"seagull-free graphs are 2-colourable", 2, 1000, seagull_bipartite});
    out.push_back({"seagulls touch pairwise in aabb-free graphs", 2, 1000, seagull_pairs});
    out.push_back({"segment decomposition", 2, 1000, segment_properties});
    out.push_back({"guarded segment interiors are independent", 2, 1000, guarded_independence});
    out.push_back({"chain refinements keep edge locality", 2, 1000, chain_locality});
    out.push_back({"workspace halving", 2, 1000, line_outer});
    out.push_back({"double subdivisions add exactly one each", 3, 200, poljak});
    out.push_back({"3sat reduction", 4, 200, sat_suite});
    for (auto s : {DummyScheme::LR, DummyScheme::RL, DummyScheme::RcoreL, DummyScheme::coreLR})
        out.push_back({"2-subdivision " + scheme_name(s), 4, 1 << 20,
                       reduction_suite("2-subdivision " + scheme_name(s),
                                       [s](const OrderedGraph &g, std::int64_t k) {
                                           return gen_two_subdivision(g, k, s);
                                       },
                                       false)});
    for (bool flip : {false, true}) {
        std::string name = std::string("long subdivision ") + (flip ? "flip" : "straight");
        out.push_back({name, 4, 1 << 20,
                       reduction_suite(name,
                                       [flip](const OrderedGraph &g, std::int64_t k) {
                                           return gen_long_subdivision(g, k, flip);
                                       },
                                       false)});
    }
    for (auto target : {TrainTarget::abxba, TrainTarget::abccab}) {
        std::string name = "train reduction " + target_name(target);
        out.push_back({name, 4, 1 << 20,
                       reduction_suite(name,
                                       [target](const OrderedGraph &g, std::int64_t k) {
                                           return gen_train_reduction(g, k, target);
                                       },
                                       true)});
    }
    out.push_back({"braiding pair", 5, 200, interchange_suite("braiding pair", braiding_pair)});
    for (auto target : {TrainTarget::abxba, TrainTarget::abccab})
        for (int l = 2; l <= 3; ++l)
            for (int j = 1; j < l; ++j) {
                std::string name = "swap gadget " + target_name(target) + " l=" + std::to_string(l) +
                                   " j=" + std::to_string(j);
                out.push_back({name, 5, 200, interchange_suite(name, [=] {
                                   return gadget_pair(swap_gadget(target, l, j));
                               })});
            }
    out.push_back({"classifier spot checks and monotonicity", 6, 1, classifier_suite});
    return out;
}

auto run_suite(const Suite &s, long trials, std::uint64_t seed) -> SuiteResult
{
    Rng rng(seed);
    auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
        r = s.run(trials, rng);
    }
    catch (const std::exception &e) {
        r.name = s.name;
        ++r.violations;
        r.note = std::string("exception: ") + e.what();
    }
    r.name = s.name;
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

auto performance_guards(Rng &rng) -> std::vector<PerfResult>
{
    struct Job {
        const char *name;
        int n;
        OrderedGraph pattern;
        double limit;
        std::function<Solution(const OrderedGraph &, const Weights &)> solve;
    };
    std::vector<Job> jobs = {
        {"aabb", 120, pat_aakbb(0), 60e3, [](auto &g, auto &w) { return solve_aabb(g, w); }},
        {"aakbb k=1", 60, pat_aakbb(1), 120e3, [](auto &g, auto &w) { return solve_aakbb(g, w, 1); }},
        {"abbak k=0", 40, pat_abbak(0), 120e3, [](auto &g, auto &w) { return solve_abbak(g, w, 0); }},
    };
    std::vector<PerfResult> out;
    for (const auto &j : jobs) {
        auto g = random_free_graph(j.n, 0.3, {j.pattern}, rng);
        auto w = random_weights(j.n, rng);
        PerfResult r;
        r.name = j.name;
        r.n = j.n;
        r.limit_millis = j.limit;
        auto start = std::chrono::steady_clock::now();
        auto s = j.solve(g, w);
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        r.correct = is_independent(g, s.witness) && s.weight == solve_generic(g, w).weight;
        out.push_back(r);
    }
    return out;
}

} // namespace omwis
