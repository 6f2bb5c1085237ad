#ifndef FAIRAUC_EXPERIMENT_HPP
#define FAIRAUC_EXPERIMENT_HPP

#include <string>
#include <vector>

#include "fairauc/acquisition.hpp"
#include "fairauc/auc.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

enum class PairMode { None, Simultaneous, Sequential };

struct ExperimentConfig {
    std::string data_path;
    std::string group_col = "group";
    std::string class_col = "y";
    std::vector<std::string> owned_cols;  // owned feature names; rest are candidates
    Strategy strategy;
    int rounds = 10;
    Scalar epsilon = 1e-6;
    bool use_protected = true;
    Scalar holdout = 0.0;  // evaluation fraction; 0 = in-sample
    bool zero_correlation = false;
    bool noisy = false;
    bool analytic_bias = false;
    bool log1p = false;
    ScorerKind scorer = ScorerKind::Fld;
    PairMode pair_mode = PairMode::None;
    std::uint64_t seed = 0;
    int bootstrap_resamples = 1000;
};

struct RoundCI {
    AucCI auc_a, auc_b, auc_all;
};

struct ParetoTrajectory {
    Scalar weight = 0;
    std::vector<RoundRecord> rounds;
};

struct Report {
    ExperimentConfig config;
    std::vector<RoundRecord> rounds;
    std::vector<RoundCI> cis;  // one per round record
    std::vector<ParetoTrajectory> pareto;
};

// Runs the configured acquisition on already-ingested data, attaching
// bootstrap CIs per round. The dataset is copied internally (noisy runs
// mutate their working copy).
Report run_experiment(const ExperimentConfig& cfg, const GroupedColumns& data);

// Weighted-strategy sweep; each weight gets its own fresh trajectory stored
// in the pareto section of the report.
Report run_sweep(const ExperimentConfig& cfg, const GroupedColumns& data,
                 const std::vector<Scalar>& weights);

// JSON (stable key order) is the authoritative report format; the CSV holds
// the per-round table only, 4-decimal values.
std::string report_to_json(const Report& report);
std::string rounds_to_csv(const Report& report, const std::vector<std::string>& names);

void write_file(const std::string& path, const std::string& contents);

}  // namespace fairauc

#endif
