// Benchmark driver: trains a broad-learning network incrementally with the
// selected algorithms and reports per-update accuracy, wall time, and
// modeled flops.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ibls/experiment.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

ibls::DataSource parse_data(const std::string& spec, ibls::Index label_cols, bool class_col) {
    ibls::DataSource src;
    if (spec.rfind("csv:", 0) == 0) {
        src.kind = ibls::DataKind::Csv;
        src.csv_path = spec.substr(4);
        src.label_columns = label_cols;
        src.class_column = class_col;
    } else if (spec.rfind("idx:", 0) == 0) {
        const auto parts = split(spec.substr(4), ',');
        if (parts.size() != 2)
            throw CLI::ValidationError("--data", "idx source needs idx:IMAGES,LABELS");
        src.kind = ibls::DataKind::Idx;
        src.idx_images = parts[0];
        src.idx_labels = parts[1];
    } else if (spec.rfind("synth:", 0) == 0) {
        const auto parts = split(spec.substr(6), ',');
        if (parts.size() < 3 || parts.size() > 4)
            throw CLI::ValidationError("--data", "synthetic source needs synth:N,Q,C[,NOISE]");
        src.kind = ibls::DataKind::Synthetic;
        src.synth.samples = std::stoll(parts[0]);
        src.synth.input_dim = std::stoll(parts[1]);
        src.synth.classes = std::stoll(parts[2]);
        if (parts.size() == 4) src.synth.noise = std::stod(parts[3]);
    } else {
        throw CLI::ValidationError("--data", "expected csv:PATH, idx:IMG,LBL, or synth:N,Q,C");
    }
    return src;
}

std::vector<ibls::AlgoKind> parse_algos(const std::string& list) {
    std::vector<ibls::AlgoKind> out;
    for (const std::string& name : split(list, ',')) {
        if (name == "existing")
            out.push_back(ibls::AlgoKind::Existing);
        else if (name == "recursive")
            out.push_back(ibls::AlgoKind::Recursive);
        else if (name == "sqrt")
            out.push_back(ibls::AlgoKind::Sqrt);
        else if (name == "standard-oracle")
            out.push_back(ibls::AlgoKind::StandardOracle);
        else
            throw CLI::ValidationError("--algos", "unknown algorithm '" + name + "'");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Incremental broad-learning ridge benchmark"};

    std::string data_spec;
    ibls::Index label_cols = 1;
    bool class_col = false;
    ibls::ExperimentConfig config;
    std::string lambda_list = "1e-4";
    std::string schedule_list;
    std::string algo_list = "recursive,sqrt";
    std::string out_path;
    std::string format = "table";

    app.add_option("--data", data_spec, "csv:PATH | idx:IMAGES,LABELS | synth:N,Q,C[,NOISE]")
        ->required();
    app.add_option("--label-cols", label_cols, "Trailing label columns in a CSV source");
    app.add_flag("--class-col", class_col,
                 "Treat the last CSV column as an integer class id (one-hot)");
    app.add_option("--feature-groups", config.network.feature_groups, "Feature groups (n)");
    app.add_option("--feature-nodes", config.network.feature_nodes_per_group,
                   "Feature nodes per group");
    app.add_option("--enh-groups", config.network.enhancement_groups, "Enhancement groups (m)");
    app.add_option("--enh-nodes", config.network.enhancement_nodes_per_group,
                   "Enhancement nodes per group");
    app.add_option("--lambda", lambda_list, "Comma-separated ridge parameters (> 0)");
    app.add_option("--initial-l", config.initial_l, "Initial training rows")->required();
    app.add_option("--schedule", schedule_list, "Comma-separated batch sizes p1,p2,...")
        ->required();
    app.add_option("--algos", algo_list,
                   "Subset of existing,recursive,sqrt,standard-oracle");
    app.add_option("--seed", config.seed, "Base RNG seed");
    app.add_option("--trials", config.trials, "Trials; timings are medians across trials");
    app.add_option("--out", out_path, "Output path (default stdout)");
    app.add_option("--format", format, "table | ndjson | csv")
        ->check(CLI::IsMember({"table", "ndjson", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        config.data = parse_data(data_spec, label_cols, class_col);
        config.algorithms = parse_algos(algo_list);
        config.lambdas.clear();
        for (const std::string& v : split(lambda_list, ',')) config.lambdas.push_back(std::stod(v));
        config.schedule.clear();
        for (const std::string& v : split(schedule_list, ','))
            config.schedule.push_back(std::stoll(v));
        config.validate();
    } catch (const std::exception& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 1;
    }

    try {
        const ibls::SnapshotReport report = ibls::run_experiment(config);
        const ibls::ReportFormat fmt = format == "ndjson" ? ibls::ReportFormat::Ndjson
                                       : format == "csv" ? ibls::ReportFormat::Csv
                                                         : ibls::ReportFormat::Table;
        if (out_path.empty()) {
            ibls::write_report(report, std::cout, fmt);
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot open output file " << out_path << '\n';
                return 1;
            }
            ibls::write_report(report, out, fmt);
        }
    } catch (const ibls::ParseError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const ibls::ScheduleExceedsData& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
