// Command-line front end: run, sweep, oracle, analyze.

#include "pxom/harness.hpp"
#include "pxom/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

using namespace pxom;

namespace {

struct ConfigArgs {
    std::string path;
    std::vector<std::string> overrides;

    void attach(CLI::App* app)
    {
        app->add_option("-c,--config", path, "experiment config (INI)")->check(CLI::ExistingFile);
        app->add_option("-s,--set", overrides, "override, section.key=value")->take_all();
    }

    ExperimentConfig load() const
    {
        ExperimentConfig config = path.empty() ? ExperimentConfig{} : ExperimentConfig::load(path);
        for (const auto& o : overrides) {
            config.apply(o);
        }
        return config;
    }
};

/// Opens `path` for writing, or returns stdout for an empty path / "-".
std::ostream& output_stream(const std::string& path, std::ofstream& file)
{
    if (path.empty() || path == "-") {
        return std::cout;
    }
    file.open(path);
    if (!file) {
        throw std::runtime_error("cannot write " + path);
    }
    return file;
}

void print_report(const std::vector<RunRecord>& records)
{
    std::size_t ok = 0;
    std::vector<double> ffe;
    for (const auto& r : records) {
        if (r.success) {
            ++ok;
            ffe.push_back(static_cast<double>(*r.ffe_at_success));
        }
    }
    std::cerr << "success " << ok << '/' << records.size();
    if (auto m = median(ffe)) {
        std::cerr << ", median FFE " << std::fixed << std::setprecision(1) << *m << std::defaultfloat;
    }
    std::cerr << '\n';
}

DependencyCheck parse_check(const std::string& name)
{
    if (name == "nonlinear") return DependencyCheck::nonlinear;
    if (name == "nonmonotonic") return DependencyCheck::nonmonotonic;
    throw std::invalid_argument("unknown check '" + name + "'");
}

EndpointDistribution endpoints(const Problem& problem, std::size_t samples, std::uint64_t seed)
{
    if (samples == 0) {
        return fihc_endpoints_exact(problem);
    }
    Rng rng(seed);
    return fihc_endpoints_sampled(problem, samples, rng);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"pseudo-boolean optimizers with PX-like linkage-tree mixing"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "run a seed battery and write one CSV row per run");
    ConfigArgs run_args;
    run_args.attach(run_cmd);
    std::string run_output;
    run_cmd->add_option("-o,--output", run_output, "CSV path (default: run.output, else stdout)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run the seed battery over increasing sizes");
    ConfigArgs sweep_args;
    sweep_args.attach(sweep_cmd);
    std::vector<std::size_t> sweep_sizes;
    std::string sweep_output;
    sweep_cmd->add_option("--sizes", sweep_sizes, "sizes, ascending (default: sweep.sizes)")->delimiter(',');
    sweep_cmd->add_option("-o,--output", sweep_output, "CSV path for all runs");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth for small instances");
    oracle_cmd->require_subcommand(1);
    ConfigArgs oracle_args;

    auto* optima_cmd = oracle_cmd->add_subcommand("local-optima", "list all local optima");
    oracle_args.attach(optima_cmd);

    std::size_t samples = 0;
    std::uint64_t sample_seed = 1;
    auto* endpoints_cmd = oracle_cmd->add_subcommand("endpoints", "FIHC endpoint distribution");
    oracle_args.attach(endpoints_cmd);
    endpoints_cmd->add_option("--samples", samples, "Monte Carlo samples; 0 = exact");
    endpoints_cmd->add_option("--seed", sample_seed, "sampling seed");

    bool with_tree = false;
    auto* dsm_cmd = oracle_cmd->add_subcommand("dsm", "theoretical DSM from the FIHC endpoint distribution");
    oracle_args.attach(dsm_cmd);
    dsm_cmd->add_option("--samples", samples, "Monte Carlo samples; 0 = exact");
    dsm_cmd->add_option("--seed", sample_seed, "sampling seed");
    dsm_cmd->add_flag("--tree", with_tree, "also print the linkage tree");

    double ph = 0.0;
    double confidence = 0.99;
    int targets = 1;
    auto* popsize_cmd = oracle_cmd->add_subcommand("popsize", "population size for hybrid presence");
    popsize_cmd->add_option("--ph", ph, "per-member probability of one hybrid")->required();
    popsize_cmd->add_option("--confidence", confidence, "required probability");
    popsize_cmd->add_option("--targets", targets, "hybrids that must all appear (1-3)")->check(CLI::Range(1, 3));

    std::string check_name = "nonmonotonic";
    auto* vig_cmd = oracle_cmd->add_subcommand("vig", "exhaustive interaction graph");
    oracle_args.attach(vig_cmd);
    vig_cmd->add_option("--check", check_name, "nonlinear or nonmonotonic");

    std::string dsm_path;
    std::string parent1;
    std::string parent2;
    auto* pxlt_cmd = oracle_cmd->add_subcommand("pxlt", "PX-like linkage tree and LTopWS masks");
    pxlt_cmd->add_option("--dsm", dsm_path, "DSM dump")->required()->check(CLI::ExistingFile);
    pxlt_cmd->add_option("--p1", parent1, "first parent bits")->required();
    pxlt_cmd->add_option("--p2", parent2, "second parent bits")->required();

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "aggregate run CSVs into summary tables");
    std::vector<std::string> csv_paths;
    double analyze_threshold = 0.8;
    analyze_cmd->add_option("csv", csv_paths, "run CSV files")->required()->check(CLI::ExistingFile);
    analyze_cmd->add_option("--threshold", analyze_threshold, "success threshold for the size table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            const auto config = run_args.load();
            const auto problem = make_problem(config);
            const auto records = run(config, *problem);
            std::ofstream file;
            auto& out = output_stream(run_output.empty() ? config.output : run_output, file);
            write_csv_header(out);
            write_csv(out, records);
            print_report(records);
        } else if (*sweep_cmd) {
            const auto config = sweep_args.load();
            const auto sizes = sweep_sizes.empty() ? config.sweep_sizes : sweep_sizes;
            if (sizes.empty()) {
                throw std::invalid_argument("sweep: no sizes given");
            }
            const auto report = sweep(config, sizes, config.threshold);
            std::ofstream file;
            auto& out = output_stream(sweep_output.empty() ? config.output : sweep_output, file);
            write_csv_header(out);
            for (const auto& size : report.sizes) {
                write_csv(out, size.records);
            }
            for (const auto& size : report.sizes) {
                std::cerr << "n=" << size.n << " success " << std::fixed << std::setprecision(2)
                          << 100.0 * size.success_rate << "%" << std::defaultfloat << '\n';
            }
            std::cerr << "largest passing size: "
                      << (report.largest_passing ? std::to_string(*report.largest_passing) : "none") << '\n';
        } else if (*optima_cmd) {
            const auto problem = make_problem(oracle_args.load());
            for (const auto& bits : enumerate_local_optima(*problem)) {
                std::cout << format_bits(bits) << ' ' << problem->value(bits) << '\n';
            }
        } else if (*endpoints_cmd) {
            const auto problem = make_problem(oracle_args.load());
            std::cout << std::setprecision(10);
            for (const auto& [bits, p] : endpoints(*problem, samples, sample_seed)) {
                std::cout << format_bits(bits) << ' ' << p << '\n';
            }
        } else if (*dsm_cmd) {
            const auto problem = make_problem(oracle_args.load());
            const auto dsm = theoretical_dsm(problem->size(), endpoints(*problem, samples, sample_seed));
            dsm.write(std::cout);
            if (with_tree) {
                build_lt(dsm).write(std::cout);
            }
        } else if (*popsize_cmd) {
            std::cout << hybrid_presence_population_size(ph, confidence, static_cast<PresenceTarget>(targets)) << '\n';
        } else if (*vig_cmd) {
            const auto problem = make_problem(oracle_args.load());
            std::cout << exhaustive_vig(*problem, parse_check(check_name)).to_string();
        } else if (*pxlt_cmd) {
            std::ifstream in(dsm_path);
            const auto dsm = Dsm::read(in);
            const auto p1 = Solution::parse(parent1);
            const auto p2 = Solution::parse(parent2);
            const auto tree = build_px_lt(dsm, p1, p2);
            tree.write(std::cout);
            std::cout << "ltopws:";
            for (const auto& mask : ltop_ws(tree, hamming(p1.bits(), p2.bits()))) {
                std::cout << " {";
                for (std::size_t i = 0; i < mask.size(); ++i) {
                    std::cout << (i ? " " : "") << mask[i];
                }
                std::cout << '}';
            }
            std::cout << '\n';
        } else if (*analyze_cmd) {
            std::vector<RunRecord> records;
            for (const auto& path : csv_paths) {
                std::ifstream in(path);
                auto part = read_csv(in);
                records.insert(records.end(), part.begin(), part.end());
            }
            summarize(std::cout, records);
            std::cout << '\n';
            summarize_scalability(std::cout, records, analyze_threshold);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
