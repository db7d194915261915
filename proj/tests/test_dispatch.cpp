#include "doctest.h"
#include "helpers.hpp"

#include "omwis/dispatch.hpp"
#include "omwis/oracle.hpp"

using namespace omwis;
using omwis::testing::weight_of;

TEST_CASE("strip isolated ends")
{
    CHECK(*strip_ends(parse_pattern("5:2-3,3-4")) == pat_p3());
    CHECK(*strip_ends(parse_pattern("4:1-2")) == parse_pattern("3:1-2"));
    CHECK(*strip_ends(parse_pattern("3:2-3")) == parse_pattern("2:1-2"));
    CHECK(!strip_ends(pat_p3()));
    CHECK(strip_ends(parse_pattern("1:"))->n() == 0);
}

TEST_CASE("pacman branches preserve alpha")
{
    Rng rng(401);
    for (int t = 0; t < 150; ++t) {
        int n = static_cast<int>(rng.below(11));
        auto g = random_graph(n, rng.uniform(), rng);
        auto w = random_weights(n, rng);
        auto out = pacman_reduce(g, w, ext(pat_p3(), 1));
        CHECK(out.inner == pat_p3());
        Rational best(-1);
        for (const auto &[keep, credit] : out.branches) {
            auto sub = induced(g, keep);
            auto a = alpha_brute(sub.graph, w.restrict_to(sub.origin)).weight + Rational(credit.value, w.scale());
            best = std::max(best, a);
            CHECK(is_independent(g, credit.set));
        }
        CHECK(best == alpha_brute(g, w).weight);
    }
    auto none = pacman_reduce(OrderedGraph(0), Weights::unit(0), parse_pattern("3:2-3"));
    REQUIRE(none.branches.size() == 1u);
    CHECK(none.branches[0].credit.value == 0);
    CHECK_THROWS_AS(pacman_reduce(OrderedGraph(2), Weights::unit(2), pat_p3()), std::invalid_argument);
}

TEST_CASE("pacman branches are free of the inner pattern")
{
    Rng rng(402);
    auto h = ext(pat_abbak(0), 1);
    for (int t = 0; t < 60; ++t) {
        int n = 4 + static_cast<int>(rng.below(7));
        auto g = random_free_graph(n, rng.uniform(), {h}, rng);
        for (const auto &b : pacman_reduce(g, Weights::unit(n), h).branches)
            CHECK(is_free(induced(g, b.instance).graph, pat_abbak(0)));
    }
}

TEST_CASE("routing table")
{
    auto algo = [](const char *p) { return plan_route(parse_pattern(p)).algo; };
    CHECK(algo("3:1-2,2-3") == "p3free");
    CHECK(algo("3:1-2,1-3") == "chordfree");
    CHECK(algo("3:1-3,2-3") == "chordrev");
    CHECK(algo("4:1-4") == "oneedgek");
    CHECK(algo("4:1-2,3-4") == "aabb");
    CHECK(algo("5:1-2,4-5") == "aakbb");
    CHECK(algo("4:1-3,2-4") == "ababk");
    CHECK(algo("4:1-4,2-3") == "abbak");
    CHECK(algo("5:1-5,2-4") == "generic");
    CHECK(algo("1:") == "generic");
    auto r = plan_route(ext(pat_abbak(0), 2));
    CHECK(r.algo == "abbak");
    CHECK(r.k == 0);
    CHECK(r.layers == 2);
    r = plan_route(pat_ababk(2));
    CHECK(r.k == 2);
    CHECK(r.layers == 0);
    CHECK(plan_route(parse_pattern("4:1-4")).k == 2);
}

TEST_CASE("generic branch and bound")
{
    CHECK(solve_generic(OrderedGraph(5), Weights::unit(5)).weight == Rational(5));
    OrderedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(solve_generic(k4, Weights({1, 2, 3, 4})).weight == Rational(4));
    Rng rng(403);
    for (int t = 0; t < 300; ++t) {
        int n = static_cast<int>(rng.below(19));
        auto g = random_graph(n, rng.uniform(), rng);
        auto w = random_weights(n, rng);
        auto got = solve_generic(g, w);
        CHECK(got.weight == alpha_brute(g, w).weight);
        CHECK_NOTHROW(validate_solution(g, w, got));
    }
}

TEST_CASE("automatic routing matches the oracle")
{
    Rng rng(404);
    std::vector<OrderedGraph> pats = {pat_p3(),           pat_chord(),        pat_chordrev(),
                                      pat_oneedge(1),     pat_aakbb(0),       pat_aakbb(1),
                                      pat_ababk(0),       pat_ababk(1),       pat_abbak(0),
                                      pat_abbak(1),       ext(pat_p3(), 1),   ext(pat_abbak(0), 2),
                                      parse_pattern("3:1-2"), parse_pattern("5:1-5,2-4"), parse_pattern("2:1-2")};
    for (const auto &h : pats)
        for (int t = 0; t < 25; ++t) {
            int n = static_cast<int>(rng.below(11));
            auto g = random_free_graph(n, rng.uniform(), {h}, rng);
            auto w = random_weights(n, rng);
            auto got = solve_auto(g, w, h);
            CHECK(got.solution.weight == alpha_brute(g, w).weight);
            CHECK_NOTHROW(validate_solution(g, w, got.solution));
        }
}

TEST_CASE("validation")
{
    OrderedGraph p3(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(validate_free(p3, pat_p3()), ValidationError);
    CHECK_NOTHROW(validate_free(p3, pat_chord()));
    Solution bad;
    bad.weight = Rational(2);
    bad.witness = {0, 1};
    CHECK_THROWS_AS(validate_solution(p3, Weights::unit(3), bad), ValidationError);
    bad.witness = {0, 2};
    CHECK_NOTHROW(validate_solution(p3, Weights::unit(3), bad));
    bad.weight = Rational(3);
    CHECK_THROWS_AS(validate_solution(p3, Weights::unit(3), bad), ValidationError);
}
