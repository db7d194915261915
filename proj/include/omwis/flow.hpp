#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace omwis {

// Dinic max-flow on int64 capacities.
class MaxFlow {
public:
    static constexpr std::int64_t infinite = std::numeric_limits<std::int64_t>::max() / 4;

    explicit MaxFlow(int nodes);
    auto add_arc(int from, int to, std::int64_t cap) -> int;
    auto run(int s, int t) -> std::int64_t;
    // nodes reachable from s in the residual network after run()
    auto residual_reach(int s) const -> std::vector<char>;

private:
    struct Arc {
        int to;
        std::int64_t cap;
    };
    auto bfs(int s, int t) -> bool;
    auto dfs(int v, int t, std::int64_t pushed) -> std::int64_t;

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> level_, next_;
};

} // namespace omwis
