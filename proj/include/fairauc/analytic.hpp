#ifndef FAIRAUC_ANALYTIC_HPP
#define FAIRAUC_ANALYTIC_HPP

#include <vector>

#include "fairauc/bounds.hpp"
#include "fairauc/moments.hpp"
#include "fairauc/rng.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

// Population (not sampled) class-conditional moments of one group over the
// owned features followed by the candidate features.
struct AnalyticGroup {
    Vec mu0, mu1;
    Mat cov0, cov1;
};

struct AnalyticInstance {
    int d = 1;   // owned feature count
    int nc = 1;  // candidate count
    AnalyticGroup groups[2];
};

AnalyticInstance random_instance(int d, int nc, Rng& rng);

// Best-GLM AUC of the owned block alone.
Scalar owned_auc(const AnalyticGroup& g, int d);

// Population 2-dim (score, candidate) moments, where the score is the
// group's own FLD projection of the owned block.
ClassStats pair_stats(const AnalyticGroup& g, int d, int candidate);

// Best-GLM AUC over owned block plus one candidate.
Scalar full_auc_with(const AnalyticGroup& g, int d, int candidate);

// One analytic acquisition round: candidate evaluations and bound inputs for
// the disadvantaged group, the greedy selection, and the advantaged group's
// improvement at the selected feature.
struct AnalyticRound {
    Group disadvantaged = Group::a;
    Scalar auc_disadv_before = 0;
    std::vector<CandidateCheck> checks;  // pair-AUC improvement vs. bound
    int selected = -1;
    Scalar full_improvement = 0;  // owned+selected full-system improvement
    Scalar adv_improvement = 0;
    BoundInputs adv_inputs;
};

AnalyticRound analyze_round(const AnalyticInstance& inst);

}  // namespace fairauc

#endif
