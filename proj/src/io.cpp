#include "omwis/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace omwis {

namespace {

auto trim(std::string s) -> std::string
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

void parse_meta(const std::string &comment, std::map<std::string, std::string> &meta)
{
    std::istringstream ss(comment);
    std::string tag;
    ss >> tag;
    if (tag != "omwis")
        return;
    std::string kv;
    while (ss >> kv) {
        auto eq = kv.find('=');
        if (eq != std::string::npos)
            meta[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
}

} // namespace

auto read_graph(std::istream &in) -> GraphFile
{
    GraphFile gf;
    std::vector<std::string> lines;
    std::string raw;
    int lineno = 0;
    std::vector<int> linenos;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) {
            parse_meta(raw.substr(hash + 1), gf.meta);
            raw = raw.substr(0, hash);
        }
        auto t = trim(raw);
        if (!t.empty()) {
            lines.push_back(t);
            linenos.push_back(lineno);
        }
    }
    if (lines.empty())
        throw std::invalid_argument("empty graph file");
    auto fail = [&](std::size_t i, const std::string &why) {
        throw std::invalid_argument("line " + std::to_string(linenos[i]) + ": " + why);
    };
    long long n = -1, m = -1;
    {
        std::istringstream hs(lines[0]);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
            fail(0, "expected header 'n m'");
    }
    gf.graph = OrderedGraph(static_cast<int>(n));
    std::size_t i = 1;
    std::vector<Rational> w(n, Rational(1));
    if (i < lines.size() && lines[i].find('-') == std::string::npos) {
        std::istringstream ws(lines[i]);
        std::string tok;
        long long count = 0;
        while (ws >> tok) {
            if (count >= n)
                fail(i, "too many weights");
            try {
                w[count] = parse_rational(tok);
            }
            catch (const std::exception &e) {
                fail(i, e.what());
            }
            if (w[count] <= Rational(0))
                fail(i, "weights must be positive");
            ++count;
        }
        if (count != n)
            fail(i, "expected " + std::to_string(n) + " weights");
        ++i;
    }
    gf.weights = Weights(std::move(w));
    long long seen = 0;
    for (; i < lines.size(); ++i) {
        const auto &l = lines[i];
        auto dash = l.find('-');
        if (dash == std::string::npos)
            fail(i, "expected edge 'u-v'");
        long long u = 0, v = 0;
        try {
            std::size_t a = 0, b = 0;
            auto ls = trim(l.substr(0, dash)), rs = trim(l.substr(dash + 1));
            u = std::stoll(ls, &a);
            v = std::stoll(rs, &b);
            if (a != ls.size() || b != rs.size())
                fail(i, "expected edge 'u-v'");
        }
        catch (const std::logic_error &) {
            fail(i, "expected edge 'u-v'");
        }
        if (u < 1 || v < 1 || u > n || v > n)
            fail(i, "vertex out of range");
        if (u == v)
            fail(i, "self-loop");
        if (gf.graph.adjacent(static_cast<int>(u - 1), static_cast<int>(v - 1)))
            fail(i, "duplicate edge");
        gf.graph.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        ++seen;
    }
    if (seen != m)
        throw std::invalid_argument("header declares " + std::to_string(m) + " edges, found " +
                                    std::to_string(seen));
    return gf;
}

auto read_graph_file(const std::string &path) -> GraphFile
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream &out, const OrderedGraph &g, const Weights *w,
                 const std::map<std::string, std::string> &meta)
{
    if (!meta.empty()) {
        out << "# omwis";
        for (const auto &[k, v] : meta)
            out << ' ' << k << '=' << v;
        out << '\n';
    }
    out << g.n() << ' ' << g.m() << '\n';
    if (w != nullptr && !w->is_unit()) {
        for (int v = 0; v < g.n(); ++v)
            out << (v ? " " : "") << format_rational((*w)[v]);
        out << '\n';
    }
    for (auto [u, v] : g.edges())
        out << u + 1 << '-' << v + 1 << '\n';
}

auto read_cnf(std::istream &in) -> Cnf
{
    Cnf f;
    std::string line;
    bool header = false;
    std::vector<int> cur;
    long long declared = -1;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t[0] == 'c' || t[0] == '%')
            continue;
        std::istringstream ss(t);
        if (t[0] == 'p') {
            std::string p, cnf;
            if (!(ss >> p >> cnf >> f.vars >> declared) || cnf != "cnf" || f.vars < 0)
                throw std::invalid_argument("bad DIMACS header");
            header = true;
            continue;
        }
        if (!header)
            throw std::invalid_argument("DIMACS clause before header");
        long long lit = 0;
        while (ss >> lit) {
            if (lit == 0) {
                f.clauses.push_back(cur);
                cur.clear();
                continue;
            }
            if (lit > f.vars || -lit > f.vars)
                throw std::invalid_argument("literal out of range");
            cur.push_back(static_cast<int>(lit));
        }
        if (!ss.eof())
            throw std::invalid_argument("bad DIMACS token");
    }
    if (!header)
        throw std::invalid_argument("missing DIMACS header");
    if (!cur.empty())
        f.clauses.push_back(cur);
    if (declared >= 0 && static_cast<long long>(f.clauses.size()) != declared)
        throw std::invalid_argument("clause count does not match header");
    return f;
}

void write_cnf(std::ostream &out, const Cnf &f)
{
    out << "p cnf " << f.vars << ' ' << f.clauses.size() << '\n';
    for (const auto &c : f.clauses) {
        for (int l : c)
            out << l << ' ';
        out << "0\n";
    }
}

} // namespace omwis
