#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "isoembed/families.hpp"
#include "isoembed/geomspec.hpp"
#include "isoembed/io.hpp"
#include "isoembed/schoenberg.hpp"
#include "isoembed/structure.hpp"

namespace isoembed::cli {

namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double tol = kDefaultTol;
    std::string metric;
    std::string graph;
    std::string out;
    int base = 0;
    bool dot = false;
    bool details = false;
    bool real = false;
    bool as_graph = false;
    std::uint64_t budget = kDefaultMapBudget;
    std::vector<double> f1;
    std::vector<double> f2;
    std::string family;
    int n = 0;
    int k = 0;
    std::int64_t z = 0;
    std::string pairs;
    int dim = 2;
    std::uint64_t seed = 0;
    int max_n = kMaxTheoremVertices;
    unsigned threads = 0;
};

void emit(std::ostream& out, const Json& j) { out << io::dump(j) << '\n'; }

MetricSpace load_metric(const Options& o) { return io::metric_from_json(io::read_json_file(o.metric), o.tol); }
WeightedGraph load_graph(const Options& o) { return io::graph_from_json(io::read_json_file(o.graph)); }

std::vector<int> to_indices(const std::vector<double>& values, const char* flag) {
    std::vector<int> idx;
    for (double v : values) {
        if (v != std::floor(v)) throw UsageError(std::string(flag) + ": point indices must be integers");
        idx.push_back(static_cast<int>(v));
    }
    return idx;
}

Json cmd_validate(const Options& o) {
    const auto m = load_metric(o);
    Json j;
    j["valid"] = true;
    j["n"] = m.size();
    j["max_distance"] = m.max_distance();
    return j;
}

Json structure_details(const WeightedGraph& g, const StructureClass& c) {
    Json j;
    j["order"] = c.order;
    Json missing = Json::array();
    for (auto [u, v] : c.missing_edges) missing.push_back(Json::array({u, v}));
    j["missing_edges"] = std::move(missing);
    if (g.is_connected()) {
        const auto conn = connectivity_report(g);
        Json cuts = Json::array();
        for (const auto& cut : conn.two_cuts) cuts.push_back(Json::array({cut.u, cut.v, cut.adjacent}));
        j["is_path"] = conn.is_path;
        j["is_2_connected"] = conn.is_2_connected;
        j["is_3_connected"] = conn.is_3_connected;
        j["two_cuts"] = std::move(cuts);
        if (auto p = match_pivot_structure(g)) {
            j["pivot"] = Json{{"order", p->order}, {"k", p->pivot}};
        } else {
            j["pivot"] = nullptr;
        }
    }
    return j;
}

Json cmd_classify(const Options& o) {
    if (o.metric.empty() == o.graph.empty()) throw UsageError("classify: give exactly one of --metric or --graph");
    std::optional<MetricSpace> metric;
    std::optional<WeightedGraph> shape;
    StructureClass cls;
    if (!o.metric.empty()) {
        metric = load_metric(o);
        shape = critical_graph(*metric, o.tol).graph();
        cls = metric->size() == 4 ? classify_4point(*metric, o.tol) : classify_unweighted(*shape);
    } else {
        shape = load_graph(o);
        cls = classify_unweighted(*shape);
        metric = shortest_path_metric(*shape);
    }
    Json j;
    j["class"] = std::string(tag_name(cls.tag));
    j["embeddable"] = is_embeddable(*metric, o.tol).embeddable;
    if (o.details) j["details"] = structure_details(*shape, cls);
    return j;
}

Json cmd_fiedler(const Options& o) {
    const auto g = load_graph(o);
    const auto x = load_metric(o);
    const auto r = geometric_fiedler(g, x, o.budget);
    Json j;
    j["value"] = r.value;
    j["argmin"] = r.argmin;
    j["classic_lambda2"] = classic_lambda2(g);
    j["maps_searched"] = r.maps_searched;
    return j;
}

Json cmd_ortho(const Options& o) {
    const auto g = load_graph(o);
    Json j;
    if (o.real) {
        if (!o.metric.empty()) throw UsageError("ortho: --real and --metric are exclusive");
        const auto [h1, h2] = real_valued_maps(g, o.f1, o.f2);
        double inner = 0.0;
        for (int v = 0; v < g.size(); ++v) inner += g.degree(v) * o.f1[v] * o.f2[v];
        j["defect"] = orthogonality_defect(h1, h2);
        j["weighted_inner"] = inner;
    } else {
        if (o.metric.empty()) throw UsageError("ortho: --metric is required unless --real is given");
        const auto x = load_metric(o);
        const HarmonicMap h1(g, x, to_indices(o.f1, "--f1"));
        const HarmonicMap h2(g, x, to_indices(o.f2, "--f2"));
        j["defect"] = orthogonality_defect(h1, h2);
    }
    return j;
}

FamilySpec family_from(const Options& o) {
    const std::string& f = o.family;
    if (f == "path") return PathFamily{o.n};
    if (f == "cycle") return CycleFamily{o.n};
    if (f == "complete") return CompleteFamily{o.n};
    if (f == "claw") return ClawFamily{};
    if (f == "claw-plus-edge") return ClawPlusEdgeFamily{};
    if (f == "config-a") return FigureOneFamily{FigureOneConfig::A};
    if (f == "config-b") return FigureOneFamily{FigureOneConfig::B};
    if (f == "config-c") return FigureOneFamily{FigureOneConfig::C};
    if (f == "snk") return SnkFamily{o.n, o.k};
    if (f == "random") return RandomEuclideanFamily{o.n, o.dim, o.seed};
    if (f == "pythagorean") {
        PythagoreanK4eFamily p;
        p.z = o.z;
        if (o.pairs.empty()) {
            const auto found = pythagorean_pairs(o.z);
            for (int i = 0; i < 3; ++i) p.pairs[i] = found[i];
        } else {
            std::istringstream in(o.pairs);
            std::string item;
            int i = 0;
            while (std::getline(in, item, ',')) {
                const auto colon = item.find(':');
                if (i >= 3 || colon == std::string::npos) throw UsageError("--pairs: expected p:q,p:q,p:q");
                p.pairs[i++] = {std::stoll(item.substr(0, colon)), std::stoll(item.substr(colon + 1))};
            }
            if (i != 3) throw UsageError("--pairs: expected exactly three p:q pairs");
        }
        return p;
    }
    throw UsageError("--family: unknown family '" + f + "'");
}

Json cmd_gen(const Options& o) {
    const FamilySpec spec = family_from(o);
    return o.as_graph ? io::graph_to_json(family_graph(spec)) : io::metric_to_json(generate(spec));
}

Json cmd_verify(const Options& o, std::ostream& err) {
    auto progress = [&err](int n, std::uint64_t done, std::uint64_t total) {
        err << "n=" << n << ": " << done << "/" << total << " masks\n";
    };
    const auto r = verify_unweighted_theorem(o.max_n, o.tol, progress, o.threads);
    Json ce = Json::array();
    for (const auto& c : r.counterexamples) {
        ce.push_back(Json{{"n", c.n},
                          {"mask", c.mask},
                          {"embeddable", c.embeddable},
                          {"class", std::string(tag_name(c.tag))},
                          {"lambda_max", c.lambda_max}});
    }
    Json j;
    j["counterexamples"] = std::move(ce);
    j["max_n"] = o.max_n;
    j["graphs_checked"] = r.graphs_checked;
    j["masks_scanned"] = r.masks_scanned;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Hilbert-space embeddability of finite metric spaces", "isoembed"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--tol", o.tol, "Numerical tolerance")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "Check the metric axioms");
    validate->add_option("--metric", o.metric, "Metric JSON file")->required();

    auto* critgraph = app.add_subcommand("critgraph", "Critical graph of a metric");
    critgraph->add_option("--metric", o.metric, "Metric JSON file")->required();
    critgraph->add_flag("--dot", o.dot, "Emit Graphviz DOT instead of JSON");

    auto* test_embed = app.add_subcommand("test-embed", "Hilbert embeddability test with witness");
    test_embed->add_option("--metric", o.metric, "Metric JSON file")->required();

    auto* embed = app.add_subcommand("embed", "Euclidean coordinates realizing the metric");
    embed->add_option("--metric", o.metric, "Metric JSON file")->required();
    embed->add_option("--base", o.base, "Base point index")->capture_default_str();

    auto* classify = app.add_subcommand("classify", "Structure class of a metric's critical graph or of a graph");
    classify->add_option("--metric", o.metric, "Metric JSON file");
    classify->add_option("--graph", o.graph, "Graph JSON file");
    classify->add_flag("--details", o.details, "Include certificate, connectivity and pivot data");

    auto* fiedler = app.add_subcommand("fiedler", "Geometric Fiedler value by exhaustive search");
    fiedler->add_option("--graph", o.graph, "Graph JSON file")->required();
    fiedler->add_option("--metric", o.metric, "Target metric JSON file")->required();
    fiedler->add_option("--budget", o.budget, "Maximum number of maps")->capture_default_str();

    auto* ortho = app.add_subcommand("ortho", "Orthogonality defect of two maps");
    ortho->add_option("--graph", o.graph, "Graph JSON file")->required();
    ortho->add_option("--metric", o.metric, "Target metric JSON file");
    ortho->add_option("--f1", o.f1, "First map (comma separated)")->required()->delimiter(',');
    ortho->add_option("--f2", o.f2, "Second map (comma separated)")->required()->delimiter(',');
    ortho->add_flag("--real", o.real, "Treat maps as real values instead of point indices");

    auto* gen = app.add_subcommand("gen", "Generate a metric family");
    gen->add_option("--family", o.family,
                    "path|cycle|complete|claw|claw-plus-edge|config-a|config-b|config-c|pythagorean|snk|random")
        ->required();
    gen->add_option("--n", o.n, "Number of points");
    gen->add_option("--k", o.k, "Pivot position for snk");
    gen->add_option("--z", o.z, "Height z for pythagorean");
    gen->add_option("--pairs", o.pairs, "Factor pairs p:q,p:q,p:q for pythagorean");
    gen->add_option("--dim", o.dim, "Dimension for random")->capture_default_str();
    gen->add_option("--seed", o.seed, "Seed for random")->capture_default_str();
    gen->add_option("--out", o.out, "Output file (default: standard output)");
    gen->add_flag("--as-graph", o.as_graph, "Emit the family's graph instead of its metric");

    auto* verify = app.add_subcommand("verify-theorem", "Exhaustive check over all small unweighted graphs");
    verify->add_option("--max-n", o.max_n, "Largest vertex count")->capture_default_str();
    verify->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        Json result;
        if (*validate) result = cmd_validate(o);
        else if (*critgraph) {
            const auto m = load_metric(o);
            const auto cg = critical_graph(m, o.tol);
            if (o.dot) {
                out << to_dot(cg, m.labels());
                return kOk;
            }
            result = io::graph_to_json(cg.graph());
        } else if (*test_embed) {
            const auto m = load_metric(o);
            result = io::report_to_json(is_embeddable(m, o.tol), kernel_trace_profile(m));
        } else if (*embed) {
            result = io::embedding_to_json(embed_coordinates(load_metric(o), o.base, o.tol));
        } else if (*classify) result = cmd_classify(o);
        else if (*fiedler) result = cmd_fiedler(o);
        else if (*ortho) result = cmd_ortho(o);
        else if (*gen) {
            result = cmd_gen(o);
            if (!o.out.empty()) {
                std::ofstream file(o.out);
                if (!file) throw Error(ErrorKind::ParseError, "cannot write " + o.out);
                emit(file, result);
                return kOk;
            }
        } else if (*verify) result = cmd_verify(o, err);
        emit(out, result);
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        emit(out, Json{{"error", std::string(e.name())}, {"message", e.what()}});
        return kDomainError;
    }
}

}  // namespace isoembed::cli
