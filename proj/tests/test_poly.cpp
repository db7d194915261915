#include "doctest.h"
#include "helpers.hpp"

#include "omwis/oracle.hpp"
#include "omwis/poly.hpp"

using namespace omwis;
using omwis::testing::weight_of;

namespace {

void check_against_oracle(const OrderedGraph &g, const Weights &w, const Solution &got)
{
    auto want = alpha_brute(g, w);
    CHECK(got.weight == want.weight);
    CHECK(is_independent(g, got.witness));
    CHECK(weight_of(w, got.witness) == got.weight);
}

} // namespace

TEST_CASE("p3-free antichain")
{
    Rng rng(101);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng.below(12));
        auto g = random_free_graph(n, rng.uniform(), {pat_p3()}, rng);
        auto w = random_weights(n, rng);
        check_against_oracle(g, w, solve_p3free(g, w));
    }
    // transitive tournament: one vertex of maximum weight
    OrderedGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(solve_p3free(k4, Weights({1, 5, 2, 3})).weight == Rational(5));
}

TEST_CASE("chord-free greedy, both orientations")
{
    Rng rng(102);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng.below(12));
        auto w = random_weights(n, rng);
        auto g = random_free_graph(n, rng.uniform(), {pat_chord()}, rng);
        check_against_oracle(g, w, solve_chordfree(g, w));
        auto h = random_free_graph(n, rng.uniform(), {pat_chordrev()}, rng);
        check_against_oracle(h, w, solve_chordfree(h, w, true));
    }
}

TEST_CASE("oneedge(k) table")
{
    Rng rng(103);
    for (int k = 0; k <= 3; ++k)
        for (int t = 0; t < 150; ++t) {
            int n = 1 + static_cast<int>(rng.below(12));
            auto g = random_free_graph(n, rng.uniform(), {pat_oneedge(k)}, rng);
            auto w = random_weights(n, rng);
            check_against_oracle(g, w, solve_oneedgek(g, w, k));
        }
    // k = 0 forces an edgeless graph: everything is taken
    CHECK(solve_oneedgek(OrderedGraph(3), Weights({1, 2, 3}), 0).weight == Rational(6));
}
