#include "hidecover/generators.hpp"
#include "hidecover/io.hpp"
#include "hidecover/oracles.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>

using namespace hidecover;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_failed = 2;

struct Options {
    std::string input;
    std::string output;
    std::size_t samples = 1000;
    bool no_validate = false;
    bool vertices = false;
    std::size_t limit = 18;
    std::uint64_t seed = 1;
    std::string family;
    std::size_t n = 0;
    std::vector<std::size_t> chains;
    std::vector<std::size_t> sizes{1000, 2000, 4000, 8000};
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void print_violations(const VerificationReport& r) {
    for (const Violation& v : r.violations) {
        std::cerr << "violation: " << v.kind;
        if (v.piece) std::cerr << " piece " << *v.piece + 1;
        for (const Point& p : v.witness) std::cerr << ' ' << p;
        std::cerr << '\n';
    }
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

// Checks a document's hidden set and cover against its polygon and records
// the verdicts.  Funnel documents must certify |H| = |C|; pseudotriangle
// documents must meet |C| <= 2|H|.
bool verify_document(SolutionDocument& doc, std::size_t samples) {
    const Polygon poly = Polygon::trusted(doc.polygon);
    const Solution& s = doc.solution;
    VerificationReport hidden = check_hidden_set(poly, s.hidden);
    VerificationReport cover =
        s.cover.mode == CoverMode::Full ? check_cover(poly, s.cover, samples) : check_vertex_cover(poly, s.cover);
    doc.verdicts.hidden_set = hidden.valid();
    doc.verdicts.cover = cover.valid();
    doc.verdicts.homestead = hidden.valid() && cover.valid() && s.hidden.size() == s.cover.size();
    doc.verdicts.violations = hidden.violations.size() + cover.violations.size();
    print_violations(hidden);
    print_violations(cover);

    bool ok = hidden.valid() && cover.valid();
    if (doc.polygon_class == "funnel" && !*doc.verdicts.homestead) {
        std::cerr << "violation: |H| = " << s.hidden.size() << " but |C| = " << s.cover.size() << '\n';
        ok = false;
    }
    if (s.cover.size() > 2 * s.hidden.size()) {
        std::cerr << "violation: |C| = " << s.cover.size() << " exceeds 2|H| = " << 2 * s.hidden.size() << '\n';
        ok = false;
    }
    return ok;
}

Classification load(const Options& o, std::vector<Point>& input_vertices) {
    const Polygon poly = parse_polygon(read_input(o.input), !o.no_validate);
    input_vertices = poly.vertices();
    return classify(poly);
}

int emit(SolutionDocument& doc, const Options& o) {
    const bool ok = verify_document(doc, o.samples);
    write_output(o.output, to_json(doc));
    std::cerr << doc.polygon_class << ": |H| = " << doc.solution.hidden.size() << ", |C| = " << doc.solution.cover.size()
              << (ok ? ", verified\n" : ", verification FAILED\n");
    return ok ? exit_ok : exit_failed;
}

int run_classify(const Options& o) {
    std::vector<Point> v;
    const Classification c = load(o, v);
    std::cout << to_string(c.kind);
    if (c.funnel) std::cout << " n=" << c.funnel->size() << " t=" << c.funnel->t();
    if (c.pseudo) std::cout << " n=" << c.pseudo->size() << " t=" << c.pseudo->t() << " s=" << c.pseudo->s();
    std::cout << '\n';
    return exit_ok;
}

int run_solve(const Options& o, bool vertex_mode) {
    SolutionDocument doc;
    doc.source = o.input;
    const Classification c = load(o, doc.polygon);
    if (!c.funnel) throw PreconditionError("input is " + to_string(c.kind) + ", not a funnel");
    doc.polygon_class = "funnel";
    const auto start = std::chrono::steady_clock::now();
    Solution s = vertex_mode ? solve_funnel_vertices(*c.funnel) : solve_funnel(*c.funnel);
    doc.elapsed_ms = ms_since(start);
    doc.solution = to_input_frame(std::move(s), c.relabel);
    return emit(doc, o);
}

int run_pseudo(const Options& o) {
    SolutionDocument doc;
    doc.source = o.input;
    const Classification c = load(o, doc.polygon);
    const auto start = std::chrono::steady_clock::now();
    Solution s;
    if (c.funnel) {
        s = o.vertices ? solve_funnel_vertices(*c.funnel) : solve_funnel(*c.funnel);
    } else if (c.pseudo) {
        s = o.vertices ? solve_pseudo_vertices(*c.pseudo) : solve_pseudo(*c.pseudo);
    } else {
        throw PreconditionError("input is " + to_string(c.kind) + ", not a pseudotriangle");
    }
    doc.elapsed_ms = ms_since(start);
    doc.polygon_class = to_string(c.kind);
    doc.solution = to_input_frame(std::move(s), c.relabel);
    return emit(doc, o);
}

int run_verify(const Options& o) {
    SolutionDocument doc = solution_from_json(read_input(o.input));
    doc.polygon = validate_simple(doc.polygon).vertices();
    const bool ok = verify_document(doc, o.samples);
    std::cout << (ok ? "valid" : "invalid") << ": hidden set " << (*doc.verdicts.hidden_set ? "ok" : "bad")
              << ", cover " << (*doc.verdicts.cover ? "ok" : "bad") << ", |H| = " << doc.solution.hidden.size()
              << ", |C| = " << doc.solution.cover.size() << '\n';
    return ok ? exit_ok : exit_failed;
}

int run_oracle(const Options& o) {
    const Polygon poly = parse_polygon(read_input(o.input), !o.no_validate);
    const HiddenVertexSet h = brute_force_hvs(poly, o.limit);
    std::cout << h.size << "\n{";
    for (std::size_t i = 0; i < h.vertices.size(); ++i) std::cout << (i ? "," : "") << h.vertices[i] + 1;
    std::cout << "}\n";
    return exit_ok;
}

int run_gen(const Options& o) {
    GenConfig cfg;
    cfg.seed = o.seed;
    std::vector<Point> v;
    if (o.family == "funnel") {
        cfg.n = o.n ? o.n : 10;
        v = gen_funnel(cfg).polygon.vertices();
    } else {
        if (!o.chains.empty() && o.chains.size() != 3) throw std::invalid_argument("--chains takes three sizes");
        if (o.chains.size() == 3) cfg.chains = {o.chains[0], o.chains[1], o.chains[2]};
        v = gen_pseudotriangle(cfg).polygon.vertices();
    }
    write_output(o.output, format_polygon(v));
    return exit_ok;
}

int run_render(const Options& o) {
    write_output(o.output, render_svg(solution_from_json(read_input(o.input))));
    return exit_ok;
}

int run_bench(const Options& o) {
    std::printf("%8s %14s %8s %10s %14s %8s %10s\n", "n", "full-preds", "ratio", "full-ms", "vertex-preds", "ratio",
                "vertex-ms");
    std::uint64_t prev_full = 0, prev_vertex = 0;
    for (std::size_t n : o.sizes) {
        GenConfig cfg;
        cfg.n = n;
        cfg.seed = o.seed;
        const FunnelPolygon f = gen_funnel(cfg);
        auto start = std::chrono::steady_clock::now();
        const Solution full = solve_funnel(f);
        const double full_ms = ms_since(start);
        start = std::chrono::steady_clock::now();
        const Solution vert = solve_funnel_vertices(f);
        const double vertex_ms = ms_since(start);
        const std::uint64_t pf = full.stats.predicates, pv = vert.stats.predicates;
        auto ratio = [](std::uint64_t now, std::uint64_t before) {
            return before ? static_cast<double>(now) / static_cast<double>(before) : 0.0;
        };
        std::printf("%8zu %14llu %8.3f %10.2f %14llu %8.3f %10.2f\n", n, static_cast<unsigned long long>(pf),
                    ratio(pf, prev_full), full_ms, static_cast<unsigned long long>(pv), ratio(pv, prev_vertex),
                    vertex_ms);
        prev_full = pf;
        prev_vertex = pv;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hidden sets and convex covers of funnels and pseudotriangles"};
    app.require_subcommand(1);
    Options o;

    auto polygon_input = [&](CLI::App* cmd) {
        cmd->add_option("--input,-i", o.input, "polygon file (default: stdin)");
        cmd->add_flag("--no-validate", o.no_validate, "skip the simplicity check");
    };
    auto solution_output = [&](CLI::App* cmd) {
        cmd->add_option("--output,-o", o.output, "solution JSON (default: stdout)");
        cmd->add_option("--samples", o.samples, "random coverage samples")->check(CLI::NonNegativeNumber);
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "report the polygon class");
    polygon_input(classify_cmd);

    CLI::App* solve_cmd = app.add_subcommand("solve", "hidden points and convex decomposition of a funnel");
    polygon_input(solve_cmd);
    solution_output(solve_cmd);

    CLI::App* vertices_cmd = app.add_subcommand("solve-vertices", "hidden vertices and vertex cover of a funnel");
    polygon_input(vertices_cmd);
    solution_output(vertices_cmd);

    CLI::App* pseudo_cmd = app.add_subcommand("pseudo-approx", "split-and-solve on a pseudotriangle");
    polygon_input(pseudo_cmd);
    solution_output(pseudo_cmd);
    pseudo_cmd->add_flag("--vertices", o.vertices, "restrict to polygon vertices");

    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check a solution document");
    verify_cmd->add_option("--input,-i", o.input, "solution JSON (default: stdin)");
    verify_cmd->add_option("--samples", o.samples, "random coverage samples")->check(CLI::NonNegativeNumber);

    CLI::App* oracle_cmd = app.add_subcommand("oracle-hvs", "exact maximum hidden vertex set by brute force");
    polygon_input(oracle_cmd);
    oracle_cmd->add_option("--limit", o.limit, "largest vertex count to attempt")->check(CLI::Range(1, 63));

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a polygon");
    gen_cmd->add_option("family", o.family, "funnel or pseudo")->required()->check(CLI::IsMember({"funnel", "pseudo"}));
    gen_cmd->add_option("--n", o.n, "funnel vertex count")->check(CLI::Range(3, 1 << 24));
    gen_cmd->add_option("--chains", o.chains, "pseudotriangle chain edge counts n1,n2,n3")->delimiter(',');
    gen_cmd->add_option("--seed", o.seed, "random seed");
    gen_cmd->add_option("--output,-o", o.output, "polygon file (default: stdout)");

    CLI::App* render_cmd = app.add_subcommand("render", "draw a solution document as SVG");
    render_cmd->add_option("--input,-i", o.input, "solution JSON (default: stdin)");
    render_cmd->add_option("--output,-o", o.output, "SVG file (default: stdout)");

    CLI::App* bench_cmd = app.add_subcommand("bench", "predicate counts and timings on generated funnels");
    bench_cmd->add_option("--sizes", o.sizes, "funnel sizes")->delimiter(',');
    bench_cmd->add_option("--seed", o.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*classify_cmd) return run_classify(o);
        if (*solve_cmd) return run_solve(o, false);
        if (*vertices_cmd) return run_solve(o, true);
        if (*pseudo_cmd) return run_pseudo(o);
        if (*verify_cmd) return run_verify(o);
        if (*oracle_cmd) return run_oracle(o);
        if (*gen_cmd) return run_gen(o);
        if (*render_cmd) return run_render(o);
        if (*bench_cmd) return run_bench(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
