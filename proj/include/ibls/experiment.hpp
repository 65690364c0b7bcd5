#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ibls/data.hpp"
#include "ibls/network.hpp"
#include "ibls/update.hpp"

namespace ibls {

enum class AlgoKind { Existing, Recursive, Sqrt, StandardOracle };

std::string algo_name(AlgoKind a);

enum class DataKind { Csv, Idx, Synthetic };

struct DataSource {
    DataKind kind = DataKind::Synthetic;
    // csv
    std::string csv_path;
    Index label_columns = 1;
    bool class_column = false;
    // idx
    std::string idx_images;
    std::string idx_labels;
    // synthetic (training set; a held-out test set of samples/4 rows is
    // generated from the same teacher)
    SyntheticSpec synth;
    // fraction of file-based rows held out as the test set (tail rows)
    double test_fraction = 0.2;
};

struct ExperimentConfig {
    DataSource data;
    NetworkConfig network;  // input_dim is overwritten from the data
    std::vector<double> lambdas = {1e-4};
    Index initial_l = 1;
    std::vector<Index> schedule;
    std::vector<AlgoKind> algorithms = {AlgoKind::Recursive};
    Index trials = 1;
    std::uint64_t seed = 0;
    BaselineOptions baseline;

    void validate() const;
};

struct SnapshotRow {
    Index samples_seen = 0;
    std::string algorithm;
    double lambda = 0.0;
    double test_accuracy = 0.0;
    double update_seconds = 0.0;      // median over trials
    double cumulative_seconds = 0.0;
    double model_flops = 0.0;
    double speedup = 0.0;             // T_existing / T_this; 0 when not applicable
};

struct SnapshotReport {
    std::vector<SnapshotRow> rows;
};

SnapshotReport run_experiment(const ExperimentConfig& config);

enum class ReportFormat { Table, Ndjson, Csv };

void write_report(const SnapshotReport& report, std::ostream& out, ReportFormat format);

}  // namespace ibls
