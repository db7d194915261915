#include "omwis/classify.hpp"

#include "omwis/pattern.hpp"

#include <cctype>
#include <functional>
#include <map>

namespace omwis {

auto to_string(Complexity c) -> std::string
{
    switch (c) {
    case Complexity::Polynomial:
        return "Polynomial";
    case Complexity::Quasipolynomial:
        return "Quasipolynomial";
    case Complexity::Subexponential:
        return "Subexponential";
    case Complexity::NPHard:
        return "NPHard";
    }
    return "?";
}

namespace {

struct Family {
    const char *name;
    Complexity cls;
    std::function<OrderedGraph(int)> make;
};

auto families() -> const std::vector<Family> &
{
    static const std::vector<Family> list = {
        {"p3", Complexity::Polynomial, [](int) { return pat_p3(); }},
        {"chord", Complexity::Polynomial, [](int) { return pat_chord(); }},
        {"chordrev", Complexity::Polynomial, [](int) { return pat_chordrev(); }},
        {"oneedge", Complexity::Polynomial, pat_oneedge},
        {"aakbb", Complexity::Quasipolynomial, pat_aakbb},
        {"ababk", Complexity::Quasipolynomial, pat_ababk},
        {"abbak", Complexity::Subexponential, pat_abbak},
    };
    return list;
}

} // namespace

auto classify(const OrderedGraph &h) -> Classification
{
    Classification c;
    int k = h.n();
    if (k <= 1) {
        c.cls = Complexity::Polynomial;
        c.degenerate = true;
        c.family = "trivial";
        return c;
    }
    for (const auto &f : families())
        if (is_induced_subpattern(h, ext(f.make(k), k))) {
            c.cls = f.cls;
            c.family = f.name;
            for (int pad = 0; pad <= k; ++pad)
                for (int gap = 0; gap <= k; ++gap)
                    if (is_induced_subpattern(h, ext(f.make(gap), pad))) {
                        c.k = gap;
                        c.pad = pad;
                        return c;
                    }
            return c;
        }
    c.cls = Complexity::NPHard;
    return c;
}

auto family_pattern(const std::string &family, int k) -> OrderedGraph
{
    for (const auto &f : families())
        if (family == f.name)
            return f.make(k);
    throw std::invalid_argument("unknown family: " + family);
}

namespace {

auto trim(const std::string &s) -> std::string
{
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

auto parse_gap(const std::string &s, const std::string &spec) -> int
{
    std::size_t used = 0;
    int k = -1;
    try {
        k = std::stoi(s, &used);
    }
    catch (const std::exception &) {
    }
    if (k < 0 || used != s.size())
        throw std::invalid_argument("bad parameter in pattern spec: " + spec);
    return k;
}

const std::map<std::string, std::string> named_patterns = {
    {"abba", "4:1-4,2-3"},          {"aabb", "4:1-2,3-4"},      {"abab", "4:1-3,2-4"},
    {"abxba", "5:1-5,2-4"},         {"abccab", "6:1-5,2-6,3-4"}, {"bad", "4:1-2,1-4"},
    {"badc", "4:1-2,1-4,3-4"},      {"aabbcc", "6:1-2,3-4,5-6"}, {"abbcca", "6:1-6,2-3,4-5"},
    {"abxxba", "6:1-6,2-5"},        {"abcbca", "6:1-6,2-4,3-5"}, {"abcabc", "6:1-4,2-5,3-6"},
};

} // namespace

auto resolve_pattern(const std::string &raw) -> OrderedGraph
{
    auto spec = trim(raw);
    if (spec.empty())
        throw std::invalid_argument("empty pattern spec");
    if (std::isdigit(static_cast<unsigned char>(spec[0])))
        return parse_pattern(spec);
    auto open = spec.find('(');
    if (open == std::string::npos) {
        if (auto it = named_patterns.find(spec); it != named_patterns.end())
            return parse_pattern(it->second);
        return family_pattern(spec, 0);
    }
    if (spec.back() != ')')
        throw std::invalid_argument("unbalanced pattern spec: " + spec);
    auto head = trim(spec.substr(0, open));
    auto args = spec.substr(open + 1, spec.size() - open - 2);
    if (head == "ext") {
        auto comma = args.rfind(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("ext needs a pattern and a padding: " + spec);
        return ext(resolve_pattern(args.substr(0, comma)), parse_gap(trim(args.substr(comma + 1)), spec));
    }
    return family_pattern(head, parse_gap(trim(args), spec));
}

} // namespace omwis
