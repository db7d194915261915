#include "doctest.h"
#include "helpers.hpp"

#include "omwis/hardness.hpp"
#include "omwis/oracle.hpp"

#include <sstream>

using namespace omwis;

namespace {

auto alpha(const OrderedGraph &g) -> std::int64_t { return alpha_unit(g); }

auto random_cnf(int vars, int clauses, Rng &rng) -> Cnf
{
    Cnf f;
    f.vars = vars;
    for (int c = 0; c < clauses; ++c) {
        std::vector<int> cl;
        while (cl.size() < 3) {
            int l = static_cast<int>(rng.below(vars)) + 1;
            if (rng.chance(0.5))
                l = -l;
            if (std::find(cl.begin(), cl.end(), l) == cl.end())
                cl.push_back(l);
        }
        f.clauses.push_back(cl);
    }
    return f;
}

} // namespace

TEST_CASE("3sat layout by hand")
{
    Cnf f{3, {{1, -2, 3}}};
    auto out = gen_3sat(f);
    // v(x1) v(-x1) o1 | v(x2) o2 v(-x2) | v(x3) v(-x3) o3
    OrderedGraph want(9, {{0, 1}, {1, 2}, {3, 5}, {3, 4}, {6, 7}, {7, 8}, {2, 4}, {2, 8}, {4, 8}});
    CHECK(out.graph == want);
    CHECK(out.threshold == 4);
}

TEST_CASE("3sat examples")
{
    auto one = gen_3sat(Cnf{3, {{1, 2, 3}}});
    CHECK(one.graph.n() == 9);
    CHECK(alpha(one.graph) >= 4);

    Cnf all{3, {}};
    for (int mask = 0; mask < 8; ++mask)
        all.clauses.push_back({mask & 1 ? 1 : -1, mask & 2 ? 2 : -2, mask & 4 ? 3 : -3});
    CHECK(!satisfiable(all));
    CHECK(alpha(gen_3sat(all).graph) < 11);

    CHECK_THROWS_AS(gen_3sat(Cnf{3, {{1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(gen_3sat(Cnf{3, {{1, 1, 2}}}), std::invalid_argument);
    CHECK_THROWS_AS(gen_3sat(Cnf{3, {{1, 2, 4}}}), std::invalid_argument);
}

TEST_CASE("3sat soundness and freeness on random formulas")
{
    Rng rng(71);
    auto bad = parse_pattern("4:1-2,1-4");
    for (int t = 0; t < 200; ++t) {
        auto f = random_cnf(3 + static_cast<int>(rng.below(2)), 1 + static_cast<int>(rng.below(4)), rng);
        auto out = gen_3sat(f);
        CHECK((alpha(out.graph) >= out.threshold) == satisfiable(f));
        CHECK(is_free(out.graph, bad));
        // unsatisfiable formulas stay below by exactly the clique cover argument
        CHECK(alpha(out.graph) <= out.threshold);
    }
}

TEST_CASE("two-subdivision orders on K2")
{
    OrderedGraph k2(2, {{0, 1}});
    auto lr = gen_two_subdivision(k2, 1, DummyScheme::LR).graph;
    CHECK(lr == OrderedGraph(4, {{0, 2}, {2, 3}, {1, 3}}));
    auto rl = gen_two_subdivision(k2, 1, DummyScheme::RL).graph;
    CHECK(rl == OrderedGraph(4, {{0, 3}, {2, 3}, {1, 2}}));
    auto rcl = gen_two_subdivision(k2, 1, DummyScheme::RcoreL).graph;
    CHECK(rcl == OrderedGraph(4, {{1, 3}, {0, 3}, {0, 2}}));
    for (auto s : {DummyScheme::LR, DummyScheme::RL, DummyScheme::RcoreL, DummyScheme::coreLR}) {
        auto out = gen_two_subdivision(k2, 1, s);
        CHECK(alpha(out.graph) == 2);
        CHECK(out.threshold == 2);
    }
}

TEST_CASE("two-subdivision offsets and sweeps")
{
    Rng rng(72);
    for (int t = 0; t < 120; ++t) {
        int n = 1 + static_cast<int>(rng.below(6));
        auto g = random_graph(n, rng.uniform(), rng);
        std::int64_t a = alpha(g);
        for (auto s : {DummyScheme::LR, DummyScheme::RL, DummyScheme::RcoreL, DummyScheme::coreLR}) {
            auto out = gen_two_subdivision(g, a, s);
            CHECK(out.graph.n() == n + 2 * static_cast<int>(g.m()));
            auto r = verify_reduction(out, g, a, 14);
            CHECK(r.offset_exact);
            CHECK(r.equivalent);
            CHECK(r.ok());
            auto r2 = verify_reduction(gen_two_subdivision(g, a + 1, s), g, a + 1, 14);
            CHECK(!r2.output_yes);
            CHECK(r2.equivalent);
        }
    }
    auto k3 = OrderedGraph(3, {{0, 1}, {0, 2}, {1, 2}});
    auto out = gen_two_subdivision(k3, 1, DummyScheme::RcoreL);
    CHECK(alpha(out.graph) == 4);
    CHECK(is_free(out.graph, parse_pattern("6:1-2,3-4,5-6"), MatchMode::Subgraph));
    CHECK(is_free(out.graph, parse_pattern("4:1-2,1-4,3-4"), MatchMode::Subgraph));
}

TEST_CASE("long subdivision by hand")
{
    OrderedGraph k2(2, {{0, 1}});
    auto out = gen_long_subdivision(k2, 1, false);
    // 0 | u1 w0 w1 v1 with the core vertex 1 at position 1
    CHECK(out.graph == OrderedGraph(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}));
    CHECK(out.offset == 2);
    CHECK(alpha(out.graph) == 3);

    // P3: edge 1 is a path with 4 inner vertices, edge 2 with 6
    OrderedGraph p3(3, {{0, 1}, {1, 2}});
    auto s = gen_long_subdivision(p3, 2, false);
    CHECK(s.graph.n() == 13);
    CHECK(s.offset == 5);
    CHECK(alpha(s.graph) == 7);
    CHECK(is_free(s.graph, parse_pattern("6:1-6,2-5"), MatchMode::Subgraph));
    CHECK(is_free(s.graph, parse_pattern("6:1-6,2-4,3-5"), MatchMode::Subgraph));

    OrderedGraph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    auto f = gen_long_subdivision(k3, 1, true);
    CHECK(is_free(f.graph, parse_pattern("6:1-4,2-5,3-6"), MatchMode::Subgraph));
}

TEST_CASE("long subdivision offsets and sweeps")
{
    Rng rng(73);
    for (int t = 0; t < 80; ++t) {
        int n = 1 + static_cast<int>(rng.below(5));
        auto g = random_graph(n, rng.uniform(), rng);
        std::int64_t a = alpha(g);
        for (bool flip : {false, true}) {
            auto out = gen_long_subdivision(g, a, flip);
            auto r = verify_reduction(out, g, a, 14);
            CHECK(r.ok());
            // every edge became an odd path, so the graph stays a subdivision
            CHECK(out.graph.m() == out.graph.n() - n + g.m());
        }
    }
}

TEST_CASE("train basics")
{
    Train a{OrderedGraph(3, {{0, 2}}), {0}, {2}};
    check_train(a);
    CHECK_THROWS_AS(check_train(Train{OrderedGraph(3, {{0, 1}}), {0, 1}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(check_train(Train{OrderedGraph(3), {1}, {2}}), std::invalid_argument);
    auto c = couple_trains(a, a);
    CHECK(c.graph == OrderedGraph(5, {{0, 2}, {2, 4}}));
    CHECK(c.inputs == std::vector<Vertex>{0});
    CHECK(c.outputs == std::vector<Vertex>{4});
    Train two{OrderedGraph(4), {0, 1}, {2, 3}};
    Train three{OrderedGraph(6), {0, 1, 2}, {3, 4, 5}};
    CHECK_THROWS_AS(couple_trains(two, three), std::invalid_argument);

    // coupling through an identity gadget adds one to each path
    auto id = identity_gadget(2);
    Train src{OrderedGraph(4, {{0, 2}, {1, 3}}), {}, {2, 3}};
    auto joined = couple_trains(src, id.train);
    CHECK(alpha(joined.graph) == alpha(src.graph) + 2);
}

TEST_CASE("coupling abba-free trains stays abba-free")
{
    Rng rng(74);
    auto abba = parse_pattern("4:1-4,2-3");
    for (int t = 0; t < 300; ++t) {
        auto make = [&](int in, int out) {
            int n = in + out + static_cast<int>(rng.below(4));
            auto g = random_free_graph(n, rng.uniform(), {abba}, rng, MatchMode::Subgraph);
            for (auto [u, v] : g.edges())
                if ((u < in && v < in) || (u >= n - out && v >= n - out))
                    g.remove_edge(u, v);
            Train tr{g, {}, {}};
            for (int i = 0; i < in; ++i)
                tr.inputs.push_back(i);
            for (int i = 0; i < out; ++i)
                tr.outputs.push_back(n - out + i);
            return tr;
        };
        int mid = 1 + static_cast<int>(rng.below(3));
        auto a = make(static_cast<int>(rng.below(3)), mid);
        auto b = make(mid, static_cast<int>(rng.below(3)));
        CHECK(is_free(couple_trains(a, b).graph, abba, MatchMode::Subgraph));
    }
}

TEST_CASE("swap gadget shapes")
{
    auto x = swap_gadget(TrainTarget::abxba, 2, 1);
    CHECK(x.train.graph.n() == 11);
    CHECK(x.kvec == std::vector<int>{4, 6});
    CHECK(x.sigma == std::vector<int>{1, 0});
    auto y = swap_gadget(TrainTarget::abccab, 2, 1);
    CHECK(y.kvec == std::vector<int>{5, 5});
    CHECK(y.train.graph.n() == 10);
    CHECK(is_free(y.train.graph, parse_pattern("6:1-5,2-6,3-4"), MatchMode::Subgraph));
    CHECK(swap_gadget(TrainTarget::abccab, 4, 2).kvec == std::vector<int>{3, 5, 5, 3});
    CHECK(swap_gadget(TrainTarget::abxba, 4, 2).kvec == std::vector<int>{4, 4, 6, 4});
    CHECK_THROWS_AS(swap_gadget(TrainTarget::abxba, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(swap_gadget(TrainTarget::abxba, 3, 0), std::invalid_argument);

    // abccab gadgets are already linear forests of the promised shape
    for (int l = 2; l <= 4; ++l)
        for (int j = 1; j < l; ++j) {
            auto g = swap_gadget(TrainTarget::abccab, l, j);
            auto [p, forest] = gadget_pair(g);
            CHECK(p.graph.m() == forest.graph.m());
            CHECK(p.graph.n() == forest.graph.n());
        }
}

TEST_CASE("swap gadgets avoid their targets")
{
    auto abxba = parse_pattern("5:1-5,2-4");
    auto abccab = parse_pattern("6:1-5,2-6,3-4");
    for (int l = 2; l <= 5; ++l)
        for (int j = 1; j < l; ++j) {
            CHECK(is_free(swap_gadget(TrainTarget::abxba, l, j).train.graph, abxba));
            CHECK(is_free(swap_gadget(TrainTarget::abccab, l, j).train.graph, abccab));
        }
    CHECK(is_free(identity_gadget(4).train.graph, abxba));
    CHECK(is_free(identity_gadget(4).train.graph, abccab));
}

TEST_CASE("composition rules")
{
    auto s = swap_gadget(TrainTarget::abxba, 2, 1);
    auto twice = compose_gadgets(s, s);
    CHECK(twice.sigma == std::vector<int>{0, 1});
    CHECK(twice.kvec == std::vector<int>{9, 9});
    auto with_id = compose_gadgets(s, identity_gadget(2));
    CHECK(with_id.sigma == s.sigma);
    CHECK(with_id.kvec == std::vector<int>{5, 7});
    CHECK_THROWS_AS(compose_gadgets(s, identity_gadget(3)), std::invalid_argument);

    std::vector<int> rev{2, 1, 0};
    CHECK(bubble_swaps(rev).size() == 3u);
    for (auto t : {TrainTarget::abxba, TrainTarget::abccab}) {
        auto g = realize_permutation(t, rev);
        CHECK(g.sigma == rev);
        for (int k : g.kvec)
            CHECK((k - g.kvec[0]) % 2 == 0);
    }
    CHECK(bubble_swaps({0, 1, 2}).empty());
}

TEST_CASE("braiding pair is interchangeable")
{
    Rng rng(75);
    auto [g1, g2] = braiding_pair();
    // the trivial host
    CHECK(alpha(g1.graph) == alpha(g2.graph));
    for (int t = 0; t < 200; ++t) {
        auto [a, b] = interchange_trial(g1, g2, static_cast<int>(rng.below(9)), rng.uniform(), rng);
        CHECK(a == b);
    }
}

TEST_CASE("swap gadgets are interchangeable with their forests")
{
    Rng rng(76);
    for (auto t : {TrainTarget::abxba, TrainTarget::abccab})
        for (int l = 2; l <= 3; ++l)
            for (int j = 1; j < l; ++j) {
                auto [p, forest] = gadget_pair(swap_gadget(t, l, j));
                for (int trial = 0; trial < 60; ++trial) {
                    auto [a, b] = interchange_trial(p, forest, static_cast<int>(rng.below(8)), rng.uniform(), rng);
                    CHECK(a == b);
                }
            }
    // a composed gadget as well
    auto [p, forest] = gadget_pair(realize_permutation(TrainTarget::abxba, {2, 0, 1}));
    for (int trial = 0; trial < 40; ++trial) {
        auto [a, b] = interchange_trial(p, forest, static_cast<int>(rng.below(8)), rng.uniform(), rng);
        CHECK(a == b);
    }
}

TEST_CASE("a wrong forest is caught")
{
    auto g = swap_gadget(TrainTarget::abxba, 2, 1);
    auto [p, forest] = gadget_pair(g);
    forest.graph = OrderedGraph(forest.graph.n());
    Rng rng(77);
    bool differs = false;
    for (int trial = 0; trial < 50 && !differs; ++trial) {
        auto [a, b] = interchange_trial(p, forest, 3, 0.5, rng);
        differs = a != b;
    }
    CHECK(differs);
}

TEST_CASE("train reduction")
{
    OrderedGraph k2(2, {{0, 1}});
    for (auto t : {TrainTarget::abxba, TrainTarget::abccab}) {
        auto out = gen_train_reduction(k2, 1, t);
        CHECK(out.meta.at("swaps") == "0");
        CHECK(alpha(out.graph) == 1 + out.offset);
    }
    OrderedGraph p3(3, {{0, 1}, {1, 2}});
    auto x = gen_train_reduction(p3, 2, TrainTarget::abxba);
    CHECK(is_free(x.graph, parse_pattern("5:1-5,2-4")));
    auto y = gen_train_reduction(p3, 2, TrainTarget::abccab);
    CHECK(is_free(y.graph, parse_pattern("6:1-5,2-6,3-4")));
    CHECK_THROWS_AS(gen_train_reduction(OrderedGraph(3), 1, TrainTarget::abxba), std::invalid_argument);

    Rng rng(78);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng.below(3));
        auto g = random_graph(n, rng.uniform(), rng);
        if (g.m() == 0)
            continue;
        std::int64_t a = alpha(g);
        for (auto target : {TrainTarget::abxba, TrainTarget::abccab}) {
            auto out = gen_train_reduction(g, a, target);
            auto r = verify_reduction(out, g, a, 14);
            CHECK(r.ok());
        }
    }
}

TEST_CASE("catalogs and file round trip")
{
    CHECK(scheme_catalog("LR").checked.empty());
    CHECK(scheme_catalog("LR").unchecked.size() == 8u);
    CHECK(scheme_catalog("coreLR").checked.size() == 2u);
    CHECK_THROWS_AS(scheme_catalog("nope"), std::invalid_argument);

    OrderedGraph p3(3, {{0, 1}, {1, 2}});
    auto out = gen_two_subdivision(p3, 2, DummyScheme::coreLR);
    std::stringstream ss;
    write_graph(ss, out.graph, nullptr, out.meta);
    auto back = reduction_from_file(read_graph(ss));
    CHECK(back.graph == out.graph);
    CHECK(back.threshold == out.threshold);
    CHECK(back.offset == out.offset);
    CHECK(back.scheme == "coreLR");
    auto r = verify_reduction(back, p3, 2, 24);
    CHECK(r.engine == "brute");
    CHECK(r.ok());
    CHECK(r.free.at("abbcca"));
}
