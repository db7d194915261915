#include "omwis/bipartite.hpp"
#include "omwis/classify.hpp"
#include "omwis/dispatch.hpp"
#include "omwis/hardness.hpp"
#include "omwis/io.hpp"
#include "omwis/oracle.hpp"
#include "omwis/random.hpp"
#include "omwis/suites.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace omwis;
using nlohmann::json;

namespace {

struct Globals {
    std::uint64_t seed = 1;
    int oracle_cap = default_oracle_cap;
    bool deterministic = false;
    bool validate = false;
    bool json_out = false;
    std::string trace;
    std::optional<int> tau;
};

// exit 1: usage, I/O and oracle limits; exit 2: validation and structure failures
struct Failure : std::runtime_error {
    Failure(int code, const std::string &what) : std::runtime_error(what), code(code) {}
    int code;
};

auto millis_of(const Globals &g, double ms) -> double { return g.deterministic ? 0.0 : ms; }

auto witness_json(const std::vector<Vertex> &s) -> json
{
    json out = json::array();
    for (Vertex v : s)
        out.push_back(v + 1);
    return out;
}

void emit(const json &j) { std::cout << j.dump(2) << '\n'; }

// the pattern a named algorithm relies on
auto algo_pattern(const std::string &algo, int k) -> OrderedGraph
{
    if (algo == "p3free")
        return pat_p3();
    if (algo == "chordfree")
        return pat_chord();
    if (algo == "chordrev")
        return pat_chordrev();
    if (algo == "oneedgek")
        return pat_oneedge(k);
    if (algo == "aabb")
        return pat_aakbb(0);
    if (algo == "aakbb")
        return pat_aakbb(k);
    if (algo == "ababk")
        return pat_ababk(k);
    if (algo == "abbak")
        return pat_abbak(k);
    throw std::invalid_argument("no pattern for algorithm " + algo);
}

auto options_of(const Globals &g) -> SolveOptions
{
    SolveOptions opt;
    opt.tau = g.tau;
    return opt;
}

struct Run {
    Solution solution;
    std::string algo;
    int k = 0;
    int layers = 0;
};

// auto with a pattern routes through the classifier; auto without one is generic
auto run_solver(const OrderedGraph &g, const Weights &w, const std::optional<OrderedGraph> &h,
                const std::string &algo, int k, const SolveOptions &opt) -> Run
{
    Run r;
    if (algo == "auto") {
        if (!h) {
            r.solution = solve_generic(g, w, opt);
            r.algo = "generic";
            return r;
        }
        auto a = solve_auto(g, w, *h, opt);
        r.solution = a.solution;
        r.algo = a.route.algo;
        r.k = a.route.k;
        r.layers = a.route.layers;
        return r;
    }
    r.solution = solve_with(algo, g, w, k, opt);
    r.algo = algo;
    r.k = k;
    return r;
}

auto cmd_solve(const Globals &gl, const std::string &graph, const std::string &pattern, const std::string &algo,
               int k) -> int
{
    auto f = read_graph_file(graph);
    std::optional<OrderedGraph> h;
    if (!pattern.empty())
        h = resolve_pattern(pattern);
    if (gl.validate) {
        if (h)
            validate_free(f.graph, *h);
        else if (algo != "auto" && algo != "generic")
            validate_free(f.graph, algo_pattern(algo, k));
    }
    auto opt = options_of(gl);
    std::ofstream trace_file;
    std::optional<Tracer> tracer;
    if (!gl.trace.empty()) {
        trace_file.open(gl.trace);
        if (!trace_file)
            throw std::runtime_error("cannot open " + gl.trace);
        tracer.emplace(trace_file);
        opt.trace = &*tracer;
    }
    auto r = run_solver(f.graph, f.weights, h, algo, k, opt);
    if (gl.validate)
        validate_solution(f.graph, f.weights, r.solution);
    json out = {{"alpha", format_rational(r.solution.weight)},
                {"witness", witness_json(r.solution.witness)},
                {"nodes", r.solution.nodes},
                {"millis", millis_of(gl, r.solution.millis)},
                {"algo", r.algo},
                {"k", r.k},
                {"layers", r.layers},
                {"n", f.graph.n()},
                {"m", f.graph.m()},
                {"seed", gl.seed}};
    emit(out);
    return 0;
}

auto cmd_classify(const std::string &pattern) -> int
{
    auto h = resolve_pattern(pattern);
    auto c = classify(h);
    auto route = plan_route(h);
    json out = {{"pattern", format_pattern(h)},
                {"class", to_string(c.cls)},
                {"family", c.family.empty() ? json(nullptr) : json(c.family)},
                {"k", c.family.empty() ? json(nullptr) : json(c.k)},
                {"pad", c.pad},
                {"degenerate", c.degenerate},
                {"route", {{"algo", route.algo}, {"k", route.k}, {"layers", route.layers}}}};
    emit(out);
    return 0;
}

void write_output(const Globals &gl, const std::string &path, const OrderedGraph &g, const Weights *w,
                  const std::map<std::string, std::string> &meta)
{
    if (path.empty() || path == "-") {
        write_graph(std::cout, g, w, meta);
    }
    else {
        std::ofstream out(path);
        if (!out)
            throw std::runtime_error("cannot open " + path);
        write_graph(out, g, w, meta);
    }
    if (gl.json_out && !path.empty() && path != "-") {
        json j = {{"file", path}, {"n", g.n()}, {"m", g.m()}};
        for (const auto &[key, v] : meta)
            j[key] = v;
        emit(j);
    }
}

auto cmd_verify(const Globals &gl, const std::string &out_path, const std::string &src_path,
                std::optional<std::int64_t> k) -> int
{
    auto out = reduction_from_file(read_graph_file(out_path));
    VerifyReport r;
    if (out.scheme == "3sat") {
        std::ifstream in(src_path);
        if (!in)
            throw std::runtime_error("cannot open " + src_path);
        r = verify_3sat(out, read_cnf(in), gl.oracle_cap);
    }
    else {
        if (!k) {
            auto it = out.meta.find("k");
            if (it == out.meta.end())
                throw std::invalid_argument("--k missing and not recorded in " + out_path);
            k = std::stoll(it->second);
        }
        r = verify_reduction(out, read_graph_file(src_path).graph, *k, gl.oracle_cap);
    }
    json j = {{"scheme", r.scheme},
              {"threshold", out.threshold},
              {"offset", out.offset},
              {"alpha_out", r.alpha_out},
              {"alpha_src", r.alpha_src},
              {"source_yes", r.source_yes},
              {"output_yes", r.output_yes},
              {"equivalent", r.equivalent},
              {"offset_exact", r.offset_exact},
              {"engine", r.engine},
              {"free", r.free},
              {"unchecked", r.unchecked},
              {"ok", r.ok()}};
    emit(j);
    return r.ok() ? 0 : 2;
}

struct BenchSpec {
    std::string suite = "aabb";
    std::string algo = "auto";
    int k = 0;
    std::vector<int> sizes{10, 20, 40};
    int reps = 3;
    double p = 0.3;
    std::string csv;
    int jobs = 1;
};

struct BenchRow {
    std::string id;
    int n = 0;
    std::size_t m = 0;
    std::string algo;
    std::string alpha;
    std::uint64_t nodes = 0;
    double millis = 0.0;
    std::string oracle; // ok, mismatch, skipped
};

auto cmd_bench(const Globals &gl, const BenchSpec &spec) -> int
{
    auto h = resolve_pattern(spec.suite);
    struct Job {
        int n, rep;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (int n : spec.sizes)
        for (int rep = 0; rep < spec.reps; ++rep)
            jobs.push_back({n, rep, gl.seed ^ (0x9e3779b97f4a7c15ULL * (jobs.size() + 1))});
    std::vector<BenchRow> rows(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::mutex sink;
    std::size_t next = 0;
    auto work = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard lock(sink);
                if (next == jobs.size())
                    return;
                i = next++;
            }
            const auto &job = jobs[i];
            try {
                Rng rng(job.seed);
                auto g = random_free_graph(job.n, spec.p, {h}, rng);
                auto w = random_weights(job.n, rng);
                auto r = run_solver(g, w, h, spec.algo, spec.k, options_of(gl));
                BenchRow row{spec.suite + "-n" + std::to_string(job.n) + "-r" + std::to_string(job.rep),
                             job.n,
                             g.m(),
                             r.algo,
                             format_rational(r.solution.weight),
                             r.solution.nodes,
                             millis_of(gl, r.solution.millis),
                             "skipped"};
                if (job.n <= gl.oracle_cap)
                    row.oracle = alpha_brute(g, w, gl.oracle_cap).weight == r.solution.weight ? "ok" : "mismatch";
                std::lock_guard lock(sink);
                rows[i] = std::move(row);
            }
            catch (const std::exception &e) {
                std::lock_guard lock(sink);
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, spec.jobs); ++t)
        pool.emplace_back(work);
    for (auto &t : pool)
        t.join();
    for (std::size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty())
            throw std::logic_error("run " + std::to_string(i) + ": " + errors[i]);

    std::ofstream file;
    std::ostream *out = &std::cout;
    if (!spec.csv.empty() && spec.csv != "-") {
        file.open(spec.csv);
        if (!file)
            throw std::runtime_error("cannot open " + spec.csv);
        out = &file;
    }
    bool mismatch = false;
    if (gl.json_out) {
        json arr = json::array();
        for (const auto &r : rows)
            arr.push_back({{"id", r.id}, {"n", r.n}, {"m", r.m}, {"algo", r.algo}, {"alpha", r.alpha},
                           {"nodes", r.nodes}, {"millis", r.millis}, {"oracle", r.oracle}});
        *out << json{{"seed", gl.seed}, {"suite", spec.suite}, {"rows", arr}}.dump(2) << '\n';
    }
    else {
        *out << "# seed=" << gl.seed << " suite=" << spec.suite << '\n';
        *out << "id,n,m,algo,alpha,nodes,millis,oracle\n";
        for (const auto &r : rows)
            *out << r.id << ',' << r.n << ',' << r.m << ',' << r.algo << ',' << r.alpha << ',' << r.nodes << ','
                 << r.millis << ',' << r.oracle << '\n';
    }
    for (const auto &r : rows)
        mismatch = mismatch || r.oracle == "mismatch";
    return mismatch ? 2 : 0;
}

auto cmd_selftest(const Globals &gl, long cap) -> int
{
    json suites = json::array();
    bool all = true;
    std::uint64_t i = 0;
    for (const auto &s : property_suites()) {
        auto r = run_suite(s, std::min(s.trials, cap), gl.seed + 7919 * ++i);
        all = all && r.pass();
        suites.push_back({{"name", r.name},
                          {"criterion", s.criterion},
                          {"trials", r.trials},
                          {"violations", r.violations},
                          {"pass", r.pass()},
                          {"note", r.note},
                          {"millis", millis_of(gl, r.millis)}});
    }
    emit({{"seed", gl.seed}, {"suites", suites}, {"pass", all}});
    return all ? 0 : 2;
}

auto parse_sizes(const std::string &s) -> std::vector<int>
{
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ','))
        out.push_back(std::stoi(tok));
    if (out.empty())
        throw std::invalid_argument("empty --sizes");
    return out;
}

void fail_json(const std::string &kind, const std::string &what)
{
    std::cout << json{{"error", kind}, {"message", what}}.dump() << '\n';
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact maximum weight independent set in ordered pattern-free graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    int tau = 0;
    app.add_option("--seed", gl.seed, "seed for random suites")->capture_default_str();
    app.add_option("--oracle-cap", gl.oracle_cap, "largest n checked by exhaustive search")->capture_default_str();
    app.add_flag("--deterministic", gl.deterministic, "report zero times so output is byte-identical");
    app.add_flag("--validate", gl.validate, "check pattern-freeness and the returned witness");
    app.add_flag("--json", gl.json_out, "JSON instead of CSV or graph text where both exist");
    app.add_option("--trace", gl.trace, "branch tree as JSON lines");
    auto *tau_opt = app.add_option("--tau-override", tau, "abbak degree threshold");

    std::string graph, pattern, algo = "auto", out_path, src_path, cnf_path, scheme, variant, target;
    int k = 0;
    std::int64_t kk = 0;

    auto *solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("--graph", graph, "graph file")->required();
    solve->add_option("--pattern", pattern, "forbidden pattern spec");
    solve->add_option("--algo", algo, "auto, generic, p3free, chordfree, chordrev, oneedgek, aabb, aakbb, ababk, abbak")
        ->capture_default_str();
    solve->add_option("--k", k, "gap parameter for a named algorithm");

    auto *cls = app.add_subcommand("classify", "complexity class of a pattern");
    cls->add_option("--pattern", pattern, "pattern spec")->required();

    auto *gen = app.add_subcommand("gen", "write a reduction output or a random instance");
    gen->require_subcommand(1);
    auto *g3 = gen->add_subcommand("3sat", "formula to graph");
    g3->add_option("--cnf", cnf_path, "DIMACS file")->required();
    auto *gs = gen->add_subcommand("subdiv2", "two-subdivision");
    gs->add_option("--scheme", scheme, "LR, RL, RcoreL or coreLR")->required();
    auto *gl2 = gen->add_subcommand("longsub", "long subdivision");
    gl2->add_option("--variant", variant, "straight or flip")->required();
    auto *gt = gen->add_subcommand("train", "train reduction");
    gt->add_option("--target", target, "abxba or abccab")->required();
    for (auto *sub : {gs, gl2, gt}) {
        sub->add_option("--graph", graph, "source graph")->required();
        sub->add_option("--k", kk, "target independent set size")->required();
    }
    int rn = 10;
    double rp = 0.3;
    bool rweights = false;
    auto *gr = gen->add_subcommand("random", "random pattern-free instance");
    gr->add_option("--n", rn)->capture_default_str();
    gr->add_option("--p", rp, "edge probability")->capture_default_str();
    gr->add_option("--pattern", pattern, "pattern to avoid");
    gr->add_flag("--weights", rweights, "random rational weights");
    for (auto *sub : {g3, gs, gl2, gt, gr}) {
        sub->add_option("--out", out_path, "output file, default stdout");
        sub->fallthrough();
    }

    auto *ver = app.add_subcommand("verify", "check a reduction output against its source");
    ver->add_option("--out", out_path, "reduction output")->required();
    ver->add_option("--src", src_path, "source graph or formula")->required();
    auto *kopt = ver->add_option("--k", kk, "target (read from the output when omitted)");

    BenchSpec bench_spec;
    std::string sizes = "10,20,40";
    auto *bench = app.add_subcommand("bench", "timed runs on random pattern-free instances");
    bench->add_option("--suite", bench_spec.suite, "pattern spec of the instance family")->capture_default_str();
    bench->add_option("--algo", bench_spec.algo)->capture_default_str();
    bench->add_option("--k", bench_spec.k);
    bench->add_option("--sizes", sizes, "comma-separated n")->capture_default_str();
    bench->add_option("--reps", bench_spec.reps)->capture_default_str();
    bench->add_option("--p", bench_spec.p, "edge probability")->capture_default_str();
    bench->add_option("--csv", bench_spec.csv, "output file, default stdout");
    bench->add_option("--jobs", bench_spec.jobs)->capture_default_str();

    long selftest_cap = 50;
    auto *self = app.add_subcommand("selftest", "property suites at reduced scale");
    self->add_option("--trials", selftest_cap, "trial cap per suite")->capture_default_str();

    for (auto *sub : {solve, cls, gen, ver, bench, self})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e) {
        fail_json("usage", e.what());
        return 1;
    }

    try {
        if (*tau_opt)
            gl.tau = tau;
        if (*solve)
            return cmd_solve(gl, graph, pattern, algo, k);
        if (*cls)
            return cmd_classify(pattern);
        if (*ver)
            return cmd_verify(gl, out_path, src_path, *kopt ? std::optional<std::int64_t>(kk) : std::nullopt);
        if (*bench) {
            bench_spec.sizes = parse_sizes(sizes);
            return cmd_bench(gl, bench_spec);
        }
        if (*self)
            return cmd_selftest(gl, selftest_cap);
        if (*g3) {
            std::ifstream in(cnf_path);
            if (!in)
                throw std::runtime_error("cannot open " + cnf_path);
            auto o = gen_3sat(read_cnf(in));
            write_output(gl, out_path, o.graph, nullptr, o.meta);
        }
        else if (*gs) {
            auto o = gen_two_subdivision(read_graph_file(graph).graph, kk, parse_dummy_scheme(scheme));
            write_output(gl, out_path, o.graph, nullptr, o.meta);
        }
        else if (*gl2) {
            if (variant != "straight" && variant != "flip")
                throw std::invalid_argument("unknown variant: " + variant);
            auto o = gen_long_subdivision(read_graph_file(graph).graph, kk, variant == "flip");
            write_output(gl, out_path, o.graph, nullptr, o.meta);
        }
        else if (*gt) {
            auto o = gen_train_reduction(read_graph_file(graph).graph, kk, parse_train_target(target));
            write_output(gl, out_path, o.graph, nullptr, o.meta);
        }
        else if (*gr) {
            Rng rng(gl.seed);
            std::vector<OrderedGraph> avoid;
            if (!pattern.empty())
                avoid.push_back(resolve_pattern(pattern));
            auto g = avoid.empty() ? random_graph(rn, rp, rng) : random_free_graph(rn, rp, avoid, rng);
            auto w = rweights ? random_weights(rn, rng) : Weights::unit(rn);
            std::map<std::string, std::string> meta = {{"seed", std::to_string(gl.seed)}};
            if (!pattern.empty())
                meta["free_of"] = format_pattern(avoid[0]);
            write_output(gl, out_path, g, rweights ? &w : nullptr, meta);
        }
        return 0;
    }
    catch (const ValidationError &e) {
        fail_json("validation", e.what());
        return 2;
    }
    catch (const NotBipartite &e) {
        fail_json("structure", e.what());
        return 2;
    }
    catch (const std::length_error &e) {
        fail_json("oracle_cap", e.what());
        return 1;
    }
    catch (const std::invalid_argument &e) {
        fail_json("usage", e.what());
        return 1;
    }
    catch (const std::out_of_range &e) {
        fail_json("usage", e.what());
        return 1;
    }
    catch (const std::logic_error &e) {
        fail_json("structure", e.what());
        return 2;
    }
    catch (const std::exception &e) {
        fail_json("io", e.what());
        return 1;
    }
}
