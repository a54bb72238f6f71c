// eca-infodyn command line: evolve space-time fields, run the information
// classification, and search/verify coarse-graining transitions.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ecainfo/classify.hpp"
#include "ecainfo/coarse_grain.hpp"
#include "ecainfo/harness.hpp"
#include "ecainfo/parallel.hpp"
#include "ecainfo/version.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct EvolveOptions {
    int rule = 30;
    std::string input = "single";
    std::uint32_t steps = 250;
    std::uint32_t width = 101;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string out_dir = ".";
};

struct ClassifyOptions {
    std::string input = "random";
    int n_inputs = 20;
    std::uint64_t seed = 42;
    std::uint32_t width = 101;
    std::uint32_t steps = 250;
    std::uint32_t burn_in = 50;
    int k = 1;
    int l = 1;
    int threads = 0;
    std::string out_dir = ".";
};

struct CoarseOptions {
    std::optional<int> rule;
    bool all = false;
    int n_max = 3;
    bool show_zero = false;
    int threads = 0;
    std::string classification_csv;
    std::string out_dir = ".";
};

ecainfo::Configuration make_evolve_input(const EvolveOptions& opt) {
    using namespace ecainfo;
    if (opt.input == "single") return single_cell_input(opt.width);
    if (opt.input == "random") return random_input(opt.width, opt.seed);
    if (opt.input.rfind("density:", 0) == 0) {
        const int n_black = std::stoi(opt.input.substr(8));
        if (n_black < 0) throw CLI::ValidationError("--input", "density count must be >= 0");
        return structured_input(opt.width, static_cast<std::uint32_t>(n_black), opt.seed);
    }
    throw CLI::ValidationError("--input", "expected single, random or density:<n>");
}

int run_evolve(const EvolveOptions& opt) {
    using namespace ecainfo;
    const Rule rule{static_cast<std::uint8_t>(opt.rule)};
    const SpacetimeField field = evolve(make_evolve_input(opt), rule, opt.steps);

    std::filesystem::create_directories(opt.out_dir);
    const std::string stem = "evolve_rule" + std::to_string(opt.rule);
    std::filesystem::path path;
    if (opt.format == "text") {
        path = std::filesystem::path(opt.out_dir) / (stem + ".txt");
        write_file(path, field_text(field));
    } else if (opt.format == "binary") {
        path = std::filesystem::path(opt.out_dir) / (stem + ".bin");
        write_file(path, field_binary(field));
    } else {
        throw CLI::ValidationError("--format", "expected text or binary");
    }
    std::cout << "wrote " << path.string() << " (" << field.rows.size() << " rows x "
              << field.width() << " cells)\n";
    return 0;
}

int run_classify(const ClassifyOptions& opt) {
    using namespace ecainfo;
    ExperimentConfig cfg;
    cfg.width = opt.width;
    cfg.steps = opt.steps;
    cfg.burn_in = opt.burn_in;
    cfg.n_inputs = opt.n_inputs;
    cfg.te = TEConfig{opt.k, opt.l};
    cfg.master_seed = opt.seed;
    if (opt.input == "random")
        cfg.ensemble = InputKind::random_uniform;
    else if (opt.input == "density")
        cfg.ensemble = InputKind::structured_density;
    else
        throw CLI::ValidationError("--input", "classify needs an ensemble: random or density");
    cfg.validate();

    const unsigned threads = resolve_thread_count(opt.threads);
    const std::string started = utc_timestamp();
    std::cout << kToolName << " classify: 88 representatives, " << cfg.n_inputs << " "
              << input_kind_name(cfg.ensemble) << " inputs, seed " << cfg.master_seed << ", "
              << threads << " threads\n";
    const ClassificationResult result = run_classification(cfg, static_cast<int>(threads));
    const ClassifyRunPaths paths = write_classify_outputs(result, threads, opt.out_dir, started);

    int counts[3] = {0, 0, 0};
    for (const ClassificationRecord& rec : result.records)
        ++counts[static_cast<int>(rec.info_class) - 1];
    std::cout << "te_threshold = " << format_double(result.te_threshold) << " bits\n"
              << "classes: I1=" << counts[0] << " I2=" << counts[1] << " I3=" << counts[2] << "\n"
              << "wrote " << paths.records_csv.string() << "\n"
              << "wrote " << paths.manifest.string() << "\n";
    return 0;
}

int run_coarse(const CoarseOptions& opt) {
    using namespace ecainfo;
    if (opt.all == opt.rule.has_value())
        throw CLI::ValidationError("--rule", "give exactly one of --rule or --all");
    if (opt.n_max < 2 || opt.n_max > 4)
        throw CLI::ValidationError("--n-max", "supercell search depth must be in [2,4]");

    std::filesystem::create_directories(opt.out_dir);
    TransitionGraph graph;
    if (opt.all) {
        graph = build_transition_graph(opt.n_max, opt.threads);
    } else {
        const Rule given{static_cast<std::uint8_t>(*opt.rule)};
        const Rule rep = representative(given);
        if (rep != given)
            std::cout << "rule " << static_cast<int>(given.code) << " canonicalized to representative "
                      << static_cast<int>(rep.code) << "\n";
        graph.nodes.push_back(rep.code);
        for (const CoarseGrainingMap& map : search_transitions(rep, 2, opt.n_max)) {
            const std::uint8_t rep_b = representative(map.rule_b).code;
            TransitionEdge edge;
            edge.rep_a = rep.code;
            edge.rep_b = rep_b;
            edge.witness = map;
            edge.witness_count = 1;
            edge.self_loop = rep.code == rep_b;
            edge.to_zero = rep_b == 0;
            bool merged = false;
            for (TransitionEdge& e : graph.edges)
                if (e.rep_a == edge.rep_a && e.rep_b == edge.rep_b) {
                    ++e.witness_count;
                    merged = true;
                    break;
                }
            if (!merged) graph.edges.push_back(std::move(edge));
        }
    }

    const std::filesystem::path edges_path =
        std::filesystem::path(opt.out_dir) / "transitions.csv";
    write_file(edges_path, edge_list_csv(graph, opt.show_zero));
    std::cout << "wrote " << edges_path.string() << " (" << graph.edges.size() << " edges";
    if (!opt.show_zero) std::cout << ", rule-0 targets hidden";
    std::cout << ")\n";

    if (!opt.classification_csv.empty()) {
        const auto classes = parse_classification_csv(read_file(opt.classification_csv));
        const auto violations = validate_hierarchy(graph, classes);
        const std::filesystem::path report_path =
            std::filesystem::path(opt.out_dir) / "hierarchy_report.txt";
        write_file(report_path, hierarchy_report(violations));
        std::cout << violations.size() << " violations\n"
                  << "wrote " << report_path.string() << "\n";
        if (!violations.empty()) return kExitRuntime;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(ecainfo::kToolName) +
                 " - information-based classification of elementary cellular automata"};
    app.set_version_flag("--version", ecainfo::kToolVersion);
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    EvolveOptions ev;
    CLI::App* evolve = app.add_subcommand("evolve", "evolve one rule and dump the field");
    evolve->add_option("--rule", ev.rule, "rule code 0-255")->required()->check(CLI::Range(0, 255));
    evolve->add_option("--input", ev.input, "single | random | density:<n_black>");
    evolve->add_option("--steps", ev.steps, "time steps (default 250)");
    evolve->add_option("--width", ev.width, "ring width (default 101)");
    evolve->add_option("--seed", ev.seed, "seed for random/density inputs");
    evolve->add_option("--format", ev.format, "text | binary");
    evolve->add_option("--out", ev.out_dir, "output directory");

    ClassifyOptions cl;
    CLI::App* classify = app.add_subcommand("classify", "run the full information classification");
    classify->add_option("--input", cl.input, "ensemble kind: random | density");
    classify->add_option("--n-inputs", cl.n_inputs, "ensemble size (default 20)");
    classify->add_option("--seed", cl.seed, "master seed (default 42)");
    classify->add_option("--width", cl.width, "ring width (default 101, odd)");
    classify->add_option("--steps", cl.steps, "time steps (default 250)");
    classify->add_option("--burn-in", cl.burn_in, "rows discarded before analysis (default 50)");
    classify->add_option("--k", cl.k, "target history length (default 1)");
    classify->add_option("--l", cl.l, "source history length (default 1)");
    classify->add_option("--threads", cl.threads, "worker threads (0 = auto)");
    classify->add_option("--out", cl.out_dir, "output directory");

    CoarseOptions cg;
    CLI::App* coarse = app.add_subcommand("coarse-grain", "search coarse-graining transitions");
    coarse->add_option("--rule", cg.rule, "single rule to search")->check(CLI::Range(0, 255));
    coarse->add_flag("--all", cg.all, "search all 88 representatives");
    coarse->add_option("--n-max", cg.n_max, "max supercell size, 2-4 (default 3)");
    coarse->add_flag("--show-zero", cg.show_zero, "include transitions to rule zero");
    coarse->add_option("--classification", cg.classification_csv,
                       "classification CSV for the hierarchy report");
    coarse->add_option("--threads", cg.threads, "worker threads (0 = auto)");
    coarse->add_option("--out", cg.out_dir, "output directory");

    try {
        app.parse(argc, argv);
        if (evolve->parsed()) return run_evolve(ev);
        if (classify->parsed()) return run_classify(cl);
        if (coarse->parsed()) return run_coarse(cg);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints help/message
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
