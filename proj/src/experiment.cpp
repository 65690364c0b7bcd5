#include "ibls/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <ostream>

#include <nlohmann/json.hpp>

#include "ibls/flops.hpp"

namespace ibls {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct SplitData {
    Matrix x_train, y_train, x_test, y_test;
};

SplitData load_split(const DataSource& src, std::uint64_t seed) {
    if (src.kind == DataKind::Synthetic) {
        const Index n_train = src.synth.samples;
        const Index n_test = std::max<Index>(1, n_train / 4);
        // One draw covering train + test keeps the teacher shared and the
        // training rows independent of the test-set size.
        Dataset both = make_synthetic(SyntheticSpec{n_train + n_test, src.synth.input_dim,
                                                    src.synth.classes, src.synth.noise},
                                      seed);
        return SplitData{both.x.topRows(n_train), both.y.topRows(n_train),
                         both.x.bottomRows(n_test), both.y.bottomRows(n_test)};
    }
    Dataset all = src.kind == DataKind::Csv
                      ? (src.class_column ? load_csv_classes(src.csv_path)
                                          : load_csv(src.csv_path, src.label_columns))
                      : load_idx(src.idx_images, src.idx_labels);
    const Index n = all.samples();
    Index n_test = static_cast<Index>(static_cast<double>(n) * src.test_fraction);
    n_test = std::clamp<Index>(n_test, 1, n - 1);
    const Index n_train = n - n_test;
    return SplitData{all.x.topRows(n_train), all.y.topRows(n_train), all.x.bottomRows(n_test),
                     all.y.bottomRows(n_test)};
}

double update_flops(AlgoKind algo, Index p, Index k, Index l, Index c) {
    const FlopInputs fi{p, k, l, c};
    switch (algo) {
        case AlgoKind::Existing:
            return flops_existing(fi).value();
        case AlgoKind::Recursive:
            return flops_recursive(fi).value();
        case AlgoKind::Sqrt:
            return flops_sqrt(fi).value();
        case AlgoKind::StandardOracle: {
            // Direct refit on all l+p rows: Gram, Hermitian inverse, weights.
            const double lt = static_cast<double>(l + p);
            const double kd = static_cast<double>(k);
            const double cd = static_cast<double>(c);
            return lt * kd * kd + kd * kd * kd + 2.0 * lt * kd * cd + 2.0 * kd * kd * cd;
        }
    }
    return 0.0;
}

// One (algorithm, lambda) training pass; returns per-snapshot weights and
// update times. Snapshot 0 is the initial fit.
struct PassResult {
    std::vector<Matrix> weights;
    std::vector<double> times;
    std::vector<double> flops;
    std::vector<Index> samples_seen;
};

PassResult run_pass(AlgoKind algo, const Matrix& a_train, const Matrix& y_train,
                    RidgeParam lambda, Index initial_l, const std::vector<Index>& schedule,
                    const BaselineOptions& baseline_options) {
    const Index k = a_train.cols();
    const Index c = y_train.cols();
    PassResult res;

    const Matrix a0 = a_train.topRows(initial_l);
    const Matrix y0 = y_train.topRows(initial_l);

    std::optional<RecursiveState> rec;
    std::optional<SqrtState> sqr;
    std::optional<BaselineState> base;

    auto t0 = Clock::now();
    switch (algo) {
        case AlgoKind::Recursive:
            rec = init_recursive_state(a0, y0, lambda);
            res.weights.push_back(rec->w);
            break;
        case AlgoKind::Sqrt:
            sqr = init_sqrt_state(a0, y0, lambda);
            res.weights.push_back(sqr->w);
            break;
        case AlgoKind::Existing:
            base = init_baseline_state(a0, y0, lambda, baseline_options);
            res.weights.push_back(base->w);
            break;
        case AlgoKind::StandardOracle:
            res.weights.push_back(standard_ridge_solution(a0, y0, lambda));
            break;
    }
    res.times.push_back(seconds_since(t0));
    res.flops.push_back(0.0);
    res.samples_seen.push_back(initial_l);

    Index seen = initial_l;
    for (const Index p : schedule) {
        const IncrementBatch batch{a_train.middleRows(seen, p), y_train.middleRows(seen, p)};
        t0 = Clock::now();
        switch (algo) {
            case AlgoKind::Recursive:
                rec = update_recursive(*rec, batch);
                res.weights.push_back(rec->w);
                break;
            case AlgoKind::Sqrt:
                sqr = update_sqrt(*sqr, batch);
                res.weights.push_back(sqr->w);
                break;
            case AlgoKind::Existing:
                base = update_generalized_existing(*base, batch);
                res.weights.push_back(base->w);
                break;
            case AlgoKind::StandardOracle:
                res.weights.push_back(standard_ridge_solution(a_train.topRows(seen + p),
                                                              y_train.topRows(seen + p), lambda));
                break;
        }
        res.times.push_back(seconds_since(t0));
        res.flops.push_back(update_flops(algo, p, k, seen, c));
        seen += p;
        res.samples_seen.push_back(seen);
    }
    return res;
}

}  // namespace

std::string algo_name(AlgoKind a) {
    switch (a) {
        case AlgoKind::Existing:
            return "existing";
        case AlgoKind::Recursive:
            return "recursive";
        case AlgoKind::Sqrt:
            return "sqrt";
        case AlgoKind::StandardOracle:
            return "standard-oracle";
    }
    return "?";
}

void ExperimentConfig::validate() const {
    if (schedule.empty()) throw Error("ExperimentConfig: schedule must be nonempty");
    if (initial_l < 1) throw Error("ExperimentConfig: initial_l must be >= 1");
    if (lambdas.empty()) throw Error("ExperimentConfig: at least one lambda required");
    for (double v : lambdas)
        if (!(v > 0.0)) throw Error("ExperimentConfig: lambda values must be > 0");
    if (algorithms.empty()) throw Error("ExperimentConfig: at least one algorithm required");
    if (trials < 1) throw Error("ExperimentConfig: trials must be >= 1");
    for (Index p : schedule)
        if (p < 1) throw Error("ExperimentConfig: batch sizes must be >= 1");
}

SnapshotReport run_experiment(const ExperimentConfig& config) {
    config.validate();

    const Index n_snapshots = static_cast<Index>(config.schedule.size()) + 1;
    const Index needed =
        config.initial_l + std::accumulate(config.schedule.begin(), config.schedule.end(),
                                           Index{0});

    // timings[(algo, lambda, snapshot)] across trials
    struct Cell {
        std::vector<double> times;
        double accuracy = 0.0;
        double flops = 0.0;
        Index samples_seen = 0;
    };
    const auto n_algos = config.algorithms.size();
    const auto n_lambdas = config.lambdas.size();
    std::vector<Cell> cells(n_algos * n_lambdas * static_cast<std::size_t>(n_snapshots));
    const auto cell_at = [&](std::size_t ai, std::size_t li, Index si) -> Cell& {
        return cells[(ai * n_lambdas + li) * static_cast<std::size_t>(n_snapshots) +
                     static_cast<std::size_t>(si)];
    };

    for (Index trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t trial_seed = config.seed + static_cast<std::uint64_t>(trial);
        const SplitData data = load_split(config.data, trial_seed);
        if (needed > data.x_train.rows())
            throw ScheduleExceedsData("schedule needs " + std::to_string(needed) +
                                      " training rows, only " +
                                      std::to_string(data.x_train.rows()) + " available");

        NetworkConfig net = config.network;
        net.input_dim = data.x_train.cols();
        net.seed = trial_seed;
        const NetworkParams params = gen_params(net);
        const Matrix a_train = build_expanded(data.x_train, params, net);
        const Matrix a_test = build_expanded(data.x_test, params, net);

        for (std::size_t li = 0; li < n_lambdas; ++li) {
            const RidgeParam lambda(config.lambdas[li]);
            for (std::size_t ai = 0; ai < n_algos; ++ai) {
                const PassResult pass =
                    run_pass(config.algorithms[ai], a_train, data.y_train, lambda,
                             config.initial_l, config.schedule, config.baseline);
                for (Index si = 0; si < n_snapshots; ++si) {
                    Cell& cell = cell_at(ai, li, si);
                    cell.times.push_back(pass.times[si]);
                    if (trial == 0) {
                        cell.accuracy = accuracy(a_test * pass.weights[si], data.y_test);
                        cell.flops = pass.flops[si];
                        cell.samples_seen = pass.samples_seen[si];
                    }
                }
            }
        }
    }

    const auto find_algo = [&](AlgoKind kind) -> std::ptrdiff_t {
        const auto it =
            std::find(config.algorithms.begin(), config.algorithms.end(), kind);
        return it == config.algorithms.end() ? -1 : it - config.algorithms.begin();
    };
    const std::ptrdiff_t existing_idx = find_algo(AlgoKind::Existing);

    SnapshotReport report;
    for (std::size_t ai = 0; ai < n_algos; ++ai) {
        const AlgoKind kind = config.algorithms[ai];
        for (std::size_t li = 0; li < n_lambdas; ++li) {
            double cumulative = 0.0;
            for (Index si = 0; si < n_snapshots; ++si) {
                const Cell& cell = cell_at(ai, li, si);
                SnapshotRow row;
                row.samples_seen = cell.samples_seen;
                row.algorithm = algo_name(kind);
                row.lambda = config.lambdas[li];
                row.test_accuracy = cell.accuracy;
                row.update_seconds = median(cell.times);
                cumulative += row.update_seconds;
                row.cumulative_seconds = cumulative;
                row.model_flops = cell.flops;
                if (existing_idx >= 0 && si > 0 &&
                    (kind == AlgoKind::Recursive || kind == AlgoKind::Sqrt)) {
                    const double t_existing =
                        median(cell_at(static_cast<std::size_t>(existing_idx), li, si).times);
                    if (row.update_seconds > 0.0) row.speedup = t_existing / row.update_seconds;
                }
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

void write_report(const SnapshotReport& report, std::ostream& out, ReportFormat format) {
    if (format == ReportFormat::Ndjson) {
        for (const SnapshotRow& r : report.rows) {
            nlohmann::json j{{"samples_seen", r.samples_seen},
                             {"algorithm", r.algorithm},
                             {"lambda", r.lambda},
                             {"test_accuracy", r.test_accuracy},
                             {"update_seconds", r.update_seconds},
                             {"cumulative_seconds", r.cumulative_seconds},
                             {"model_flops", r.model_flops},
                             {"speedup", r.speedup}};
            out << j.dump() << '\n';
        }
        return;
    }
    if (format == ReportFormat::Csv) {
        out << "samples_seen,algorithm,lambda,test_accuracy,update_seconds,"
               "cumulative_seconds,model_flops,speedup\n";
        for (const SnapshotRow& r : report.rows) {
            char buf[256];
            std::snprintf(buf, sizeof(buf), "%lld,%s,%g,%.4f,%.6f,%.6f,%g,%.2f\n",
                          static_cast<long long>(r.samples_seen), r.algorithm.c_str(), r.lambda,
                          r.test_accuracy, r.update_seconds, r.cumulative_seconds, r.model_flops,
                          r.speedup);
            out << buf;
        }
        return;
    }
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%10s  %-15s  %-9s  %-8s  %-10s  %-10s  %-12s  %s\n",
                  "samples", "algorithm", "lambda", "accuracy", "update_s", "cumul_s", "flops",
                  "speedup");
    out << buf;
    for (const SnapshotRow& r : report.rows) {
        std::snprintf(buf, sizeof(buf),
                      "%10lld  %-15s  %-9g  %-8.4f  %-10.6f  %-10.6f  %-12g  ",
                      static_cast<long long>(r.samples_seen), r.algorithm.c_str(), r.lambda,
                      r.test_accuracy, r.update_seconds, r.cumulative_seconds, r.model_flops);
        out << buf;
        if (r.speedup > 0.0) {
            std::snprintf(buf, sizeof(buf), "%.2f", r.speedup);
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace ibls
