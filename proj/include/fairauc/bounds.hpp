#ifndef FAIRAUC_BOUNDS_HPP
#define FAIRAUC_BOUNDS_HPP

#include <string>
#include <vector>

#include "fairauc/moments.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

// Ingredients of the per-round improvement lower bound:
//   gamma = headroom to AUC 1, beta = normalized class-mean separation of the
//   candidate, delta = normalized score-candidate class covariance.
struct BoundInputs {
    Scalar gamma = 0;
    Scalar beta = 0;
    Scalar delta = 0;
    int feature = -1;
};

// delta_v / sqrt(sum over classes of Var[Z | y]); stats2 is the 2-dim
// (score, candidate) summary for one group.
Scalar beta_of(const ClassStats& stats2);

// |sum over classes of Cov[S, Z | y]| / delta_v, clamped to 1 when the ratio
// exceeds 1 (the bound is vacuous there by design). Throws when delta_v = 0;
// callers short-circuit that case since beta = 0 already zeroes the bound.
Scalar delta_of(const ClassStats& stats2);

// (1/4) * gamma^{3/2} * beta^2 * (1 - delta)^2.
Scalar improvement_bound(const BoundInputs& b);

// Candidate-level evaluation for one acquisition round on analytic moments.
struct CandidateCheck {
    int feature = -1;
    Scalar improvement = 0;  // pair AUC minus current AUC, disadvantaged group
    Scalar bound = 0;
    Scalar margin = 0;  // improvement - bound
};

struct RoundReport {
    bool ok = true;
    int selected = -1;
    Scalar disadv_margin = 0;  // selected improvement minus max candidate bound
    Scalar adv_margin = 0;     // advantaged improvement minus its own bound
    std::vector<CandidateCheck> candidates;
    std::string detail;  // names the first violated candidate, empty when ok
};

// Verifies one round: every candidate's improvement exceeds its own bound,
// the selected feature's improvement exceeds the max candidate bound, and
// the advantaged group's improvement at the selected feature exceeds its own
// bound there. All quantities analytic.
RoundReport verify_round(Scalar auc_before_disadv,
                         const std::vector<CandidateCheck>& candidates, int selected,
                         Scalar adv_improvement, const BoundInputs& adv_inputs);

// Grid validation of the two analytic lemmas feeding the bound proof.
struct LemmaReport {
    bool ok = true;
    long points_invert = 0;
    long points_change = 0;
    Scalar invert_min_margin = 0;  // min of (-2 ln 2g) - alpha when antecedent holds
    Scalar change_min_margin = 0;  // min of lhs - rhs over the grid
    std::string detail;
};
LemmaReport lemma_checks();

}  // namespace fairauc

#endif
