#ifndef FAIRAUC_ACQUISITION_HPP
#define FAIRAUC_ACQUISITION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fairauc/moments.hpp"
#include "fairauc/scoring.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

enum class StrategyKind { FairAUC, MaxAUC, MinBias, Random, Weighted, BiasPenalty };

struct Strategy {
    StrategyKind kind = StrategyKind::FairAUC;
    Scalar weight = 1.0;  // Weighted / BiasPenalty mixing weight, in [0,1]
};

const char* strategy_name(StrategyKind kind);

struct RoundRecord {
    int round = 0;
    std::vector<int> features;  // acquired this round; empty for the baseline
    Scalar auc_a = 0, auc_b = 0, auc_all = 0;
    Scalar bias_value = 0;
    Group disadvantaged = Group::a;
    bool intervention = false;  // bias still exceeds epsilon after this round
    std::optional<Scalar> theory_bound;  // max candidate bound, FairAUC rounds
    std::optional<Scalar> lambda;        // noise level, noisy rounds
};

struct AcquisitionConfig {
    std::vector<int> owned;  // feature indices available from the start
    ScorerKind scorer = ScorerKind::Fld;
    bool use_protected = true;
    Scalar epsilon = 1e-6;
    bool zero_correlation = false;  // drop score-candidate covariances
    bool analytic_bias = false;     // FLD AUC instead of empirical for bias
    bool noisy = false;             // noise-scrub acquisitions for the advantaged group
    Scalar ridge = 0.0;
    std::uint64_t seed = 0;
    // Row partitions for --holdout; empty means all rows for both purposes.
    std::vector<Index> fit_rows;
    std::vector<Index> eval_rows;
};

struct AcquisitionState {
    AcquisitionConfig config;
    int round = 0;
    std::vector<int> acquired;  // Q(t), in acquisition order

    std::vector<int> active() const;  // owned + acquired
    std::vector<int> candidates(const GroupedColumns& data) const;
};

struct BiasReport {
    Scalar auc_a = 0, auc_b = 0, bias_value = 0;
    Group disadvantaged = Group::a;
};

// Per-group AUC of the current scores; ties designate group a disadvantaged.
BiasReport identify_bias(const AcquisitionState& state, const GroupedColumns& data,
                         const Vec& scores);

// Candidate -> 2-dim (score, candidate) FLD AUC for group g, in candidate
// order. In zero-correlation mode the covariance off-diagonals are dropped
// before inversion.
std::vector<std::pair<int, Scalar>> evaluate_candidates(const AcquisitionState& state,
                                                        const GroupedColumns& data,
                                                        const Vec& scores, Group g);

// Called once per completed round with the record and the refit scores;
// lets the experiment layer attach bootstrap CIs without replaying the run.
using RoundObserver = std::function<void(const RoundRecord&, const Vec&)>;

// The full loop: baseline record, then up to T acquisition rounds, stopping
// early once bias <= epsilon. Mutates data in noisy mode (the noisy column
// replaces the original so later rounds see it).
std::vector<RoundRecord> run(AcquisitionState& state, GroupedColumns& data,
                             const Strategy& strategy, int rounds,
                             const RoundObserver& observer = nullptr);

// Two-feature variants: best pair by 3-dim FLD AUC, or best single feature
// followed by the least-correlated remaining one. Each performs one full
// round (selection, acquisition, refit).
RoundRecord select_pair_simultaneous(AcquisitionState& state, GroupedColumns& data);
RoundRecord select_pair_sequential(AcquisitionState& state, GroupedColumns& data);

}  // namespace fairauc

#endif
