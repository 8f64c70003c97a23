// Command-line harness for the condition-number, norm-ratio, and CDF
// validation experiments. Writes CSV or JSON; exit code 0 on success,
// 2 on configuration errors, 3 on I/O errors.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "structmat/experiment.hpp"

namespace {

using structmat::ExperimentConfig;

struct CliOptions {
    std::string matrix_class = "general";
    std::vector<std::size_t> sizes;
    std::size_t trials = 0;
    std::string dist;
    double mu = 0.0;
    double sigma = 1.0;
    std::string norm = "2";
    std::uint64_t seed = 20260814;
    std::string out;
    std::string format = "csv";
    unsigned workers = 1;
    bool complex_entries = false;
};

void add_common_options(CLI::App* sub, CliOptions& opt) {
    sub->add_option("--class", opt.matrix_class, "Matrix class")
        ->transform(CLI::IsMember({"general", "toeplitz", "circulant", "hankel"}));
    sub->add_option("--sizes", opt.sizes, "Matrix orders (comma separated)")->delimiter(',');
    sub->add_option("--trials", opt.trials, "Trials per size");
    sub->add_option("--dist", opt.dist, "Entry distribution")
        ->transform(CLI::IsMember({"uniform", "gaussian"}));
    sub->add_option("--mu", opt.mu, "Gaussian mean");
    sub->add_option("--sigma", opt.sigma, "Gaussian standard deviation");
    sub->add_option("--norm", opt.norm, "Norm family for kappa")
        ->transform(CLI::IsMember({"1", "2", "inf", "fro"}));
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--out", opt.out, "Output path (default: stdout)");
    sub->add_option("--format", opt.format, "Output format")
        ->transform(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", opt.workers, "Worker thread count");
    sub->add_flag("--complex", opt.complex_entries, "Sample complex entries");
}

structmat::MatrixClass parse_class(const std::string& s) {
    if (s == "toeplitz") return structmat::MatrixClass::Toeplitz;
    if (s == "circulant") return structmat::MatrixClass::Circulant;
    if (s == "hankel") return structmat::MatrixClass::Hankel;
    return structmat::MatrixClass::General;
}

structmat::NormFamily parse_norm(const std::string& s) {
    if (s == "1") return structmat::NormFamily::One;
    if (s == "inf") return structmat::NormFamily::Infinity;
    if (s == "fro") return structmat::NormFamily::Frobenius;
    return structmat::NormFamily::Two;
}

std::vector<std::size_t> default_sizes(const std::string& command,
                                       structmat::MatrixClass cls) {
    if (command == "cdf") return {16, 64};
    if (cls == structmat::MatrixClass::Circulant)
        return {256, 512, 1024, 2048, 4096, 8192, 16384};
    return {32, 64, 128, 256, 512, 1024, 2048};
}

ExperimentConfig build_config(const std::string& command, const CLI::App* sub,
                              const CliOptions& opt) {
    ExperimentConfig config;
    config.matrix_class = parse_class(opt.matrix_class);
    config.sizes = sub->count("--sizes") ? opt.sizes : default_sizes(command, config.matrix_class);
    config.trials_per_size =
        sub->count("--trials") ? opt.trials : (command == "cdf" ? 10000 : 100);
    std::string dist = opt.dist;
    if (dist.empty()) dist = command == "cdf" ? "gaussian" : "uniform";
    config.model.dist = dist == "gaussian" ? structmat::Distribution::Gaussian
                                           : structmat::Distribution::UniformSym;
    if (!(opt.sigma > 0.0)) throw structmat::ConfigError("--sigma must be positive");
    config.model.gauss = structmat::GaussianParams{opt.mu, opt.sigma};
    config.norm_family = parse_norm(opt.norm);
    config.seed = opt.seed;
    config.format = opt.format == "json" ? structmat::OutputFormat::Json
                                         : structmat::OutputFormat::Csv;
    config.workers = opt.workers == 0 ? 1 : opt.workers;
    config.complex_entries = opt.complex_entries;
    return config;
}

int dispatch(const std::string& command, const ExperimentConfig& config,
             const std::string& out) {
    if (command == "condition")
        structmat::emit_report(structmat::run_condition_experiment(config), config, out);
    else if (command == "ratios")
        structmat::emit_report(structmat::run_norm_ratio_experiment(config), config, out);
    else
        structmat::emit_report(structmat::run_cdf_validation(config), config, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo experiments on random structured matrices"};
    app.require_subcommand(1);
    CliOptions opt;
    CLI::App* condition = app.add_subcommand(
        "condition", "Condition-number statistics per matrix class and size");
    CLI::App* ratios =
        app.add_subcommand("ratios", "Norm and inverse-norm ratio tables");
    CLI::App* cdf = app.add_subcommand(
        "cdf", "Analytic-vs-empirical CDF validation (Gaussian model)");
    for (CLI::App* sub : {condition, ratios, cdf}) add_common_options(sub, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    try {
        return dispatch(command, build_config(command, sub, opt), opt.out);
    } catch (const structmat::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const structmat::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
