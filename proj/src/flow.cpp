#include "omwis/flow.hpp"

#include <algorithm>
#include <deque>

namespace omwis {

MaxFlow::MaxFlow(int nodes) : out_(nodes), level_(nodes), next_(nodes) {}

auto MaxFlow::add_arc(int from, int to, std::int64_t cap) -> int
{
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap});
    out_[from].push_back(id);
    arcs_.push_back({from, 0});
    out_[to].push_back(id + 1);
    return id;
}

auto MaxFlow::bfs(int s, int t) -> bool
{
    std::fill(level_.begin(), level_.end(), -1);
    level_[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int id : out_[v]) {
            const auto &a = arcs_[id];
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[v] + 1;
                q.push_back(a.to);
            }
        }
    }
    return level_[t] >= 0;
}

auto MaxFlow::dfs(int v, int t, std::int64_t pushed) -> std::int64_t
{
    if (v == t)
        return pushed;
    for (int &i = next_[v]; i < static_cast<int>(out_[v].size()); ++i) {
        int id = out_[v][i];
        auto &a = arcs_[id];
        if (a.cap <= 0 || level_[a.to] != level_[v] + 1)
            continue;
        auto got = dfs(a.to, t, std::min(pushed, a.cap));
        if (got > 0) {
            a.cap -= got;
            arcs_[id ^ 1].cap += got;
            return got;
        }
    }
    return 0;
}

auto MaxFlow::run(int s, int t) -> std::int64_t
{
    std::int64_t flow = 0;
    while (bfs(s, t)) {
        std::fill(next_.begin(), next_.end(), 0);
        while (auto f = dfs(s, t, infinite))
            flow += f;
    }
    return flow;
}

auto MaxFlow::residual_reach(int s) const -> std::vector<char>
{
    std::vector<char> seen(out_.size(), 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int id : out_[v]) {
            const auto &a = arcs_[id];
            if (a.cap > 0 && !seen[a.to]) {
                seen[a.to] = 1;
                q.push_back(a.to);
            }
        }
    }
    return seen;
}

} // namespace omwis
