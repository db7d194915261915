#include "doctest.h"
#include "helpers.hpp"

#include "omwis/classify.hpp"

using namespace omwis;

namespace {

auto cls(const char *literal) { return classify(parse_pattern(literal)).cls; }

auto all_patterns(int max_n) -> std::vector<OrderedGraph>
{
    std::vector<OrderedGraph> out;
    for (int n = 0; n <= max_n; ++n) {
        std::vector<Edge> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
            OrderedGraph h(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1)
                    h.add_edge(pairs[i].first, pairs[i].second);
            out.push_back(h);
        }
    }
    return out;
}

} // namespace

TEST_CASE("classifier spot checks")
{
    CHECK(cls("3:1-2,2-3") == Complexity::Polynomial);
    CHECK(cls("3:1-2,1-3") == Complexity::Polynomial);
    CHECK(cls("3:1-3,2-3") == Complexity::Polynomial);
    CHECK(cls("4:1-4,2-3") == Complexity::Subexponential);
    CHECK(cls("5:1-5,2-4") == Complexity::NPHard);
    CHECK(cls("4:1-2,3-4") == Complexity::Quasipolynomial);
    CHECK(cls("4:1-3,2-4") == Complexity::Quasipolynomial);
    CHECK(cls("4:1-2,1-4") == Complexity::NPHard);
    CHECK(cls("4:1-2,1-4,3-4") == Complexity::NPHard);
    CHECK(cls("6:1-2,3-4,5-6") == Complexity::NPHard);
    CHECK(classify(parse_pattern("1:")).degenerate);
    CHECK(classify(parse_pattern("0:")).degenerate);
    CHECK(cls("5:2-3,3-4") == Complexity::Polynomial);
    CHECK(cls("8:3-6,4-5") == Complexity::Subexponential);
}

TEST_CASE("classification is monotone under induced subpatterns")
{
    auto pats = all_patterns(4);
    std::vector<Complexity> c;
    for (const auto &h : pats)
        c.push_back(classify(h).cls);
    int violations = 0;
    for (std::size_t i = 0; i < pats.size(); ++i)
        for (std::size_t j = 0; j < pats.size(); ++j)
            if (pats[i].n() < pats[j].n() && is_induced_subpattern(pats[i], pats[j]) && c[i] > c[j])
                ++violations;
    CHECK(violations == 0);
}

TEST_CASE("pattern specs")
{
    CHECK(resolve_pattern("3:1-2,2-3") == pat_p3());
    CHECK(resolve_pattern(" p3 ") == pat_p3());
    CHECK(resolve_pattern("abbak(2)") == pat_abbak(2));
    CHECK(resolve_pattern("ababk") == pat_ababk(0));
    CHECK(resolve_pattern("abba") == pat_abbak(0));
    CHECK(resolve_pattern("aabb") == pat_aakbb(0));
    CHECK(resolve_pattern("abab") == pat_ababk(0));
    CHECK(resolve_pattern("ext(chord,2)") == ext(pat_chord(), 2));
    CHECK(resolve_pattern("ext(aakbb(1), 1)") == ext(pat_aakbb(1), 1));
    CHECK(resolve_pattern("ext(4:1-3,2-4,0)") == pat_ababk(0));
    CHECK(resolve_pattern("abxba").n() == 5);
    CHECK(resolve_pattern("abcabc").m() == 3u);
    for (const char *bad : {"", "nope", "abbak(-1)", "abbak(x)", "ext(p3)", "abbak(1"})
        CHECK_THROWS_AS(resolve_pattern(bad), std::invalid_argument);
}
