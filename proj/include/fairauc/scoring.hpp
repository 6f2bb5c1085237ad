#ifndef FAIRAUC_SCORING_HPP
#define FAIRAUC_SCORING_HPP

#include <vector>

#include "fairauc/moments.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

enum class ScorerKind { Fld, Logistic };

// A fitted GLM scoring rule. Scores are the pre-link linear predictor; the
// link does not change AUC and the linear scale is numerically safer for the
// downstream covariance summaries.
struct ScoringRule {
    ScorerKind kind = ScorerKind::Fld;
    bool use_protected = true;
    // One entry per group when use_protected, a single pooled entry otherwise.
    std::vector<Vec> weights;
    std::vector<Scalar> intercepts;
    Scalar ridge = 0.0;
    bool perfect_separation = false;
};

// Closed-form FLD direction per group (or pooled).
ScoringRule fit_fld(const GroupedColumns& data, const std::vector<int>& acquired,
                    bool use_protected, Scalar ridge = 0.0,
                    const std::vector<Index>& fit_rows = {});

// Logistic regression via iteratively reweighted least squares with a 1e-6
// L2 stabilizer on the Hessian. Features are standardized internally and the
// reported weights are mapped back to the original scale. Under perfect
// separation the final-iteration weights are returned with the
// perfect_separation flag set.
ScoringRule fit_logistic(const GroupedColumns& data, const std::vector<int>& acquired,
                         bool use_protected, int max_iters = 100, Scalar tol = 1e-8,
                         const std::vector<Index>& fit_rows = {});

// Linear predictor per row, picking the row's group model when use_protected.
Vec score(const ScoringRule& rule, const GroupedColumns& data,
          const std::vector<int>& acquired);

}  // namespace fairauc

#endif
