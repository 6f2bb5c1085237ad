#ifndef FAIRAUC_NOISY_HPP
#define FAIRAUC_NOISY_HPP

#include <vector>

#include "fairauc/moments.hpp"
#include "fairauc/rng.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

// Outcome of choosing a noise level for one acquisition.
struct NoisePlan {
    Scalar lambda = 1.0;
    Group advantaged = Group::a;  // post-acquisition advantaged group
    Scalar achieved_bias = 0.0;
    Scalar auc_adv = 0.0;     // advantaged-group AUC with the noisy feature
    Scalar auc_disadv = 0.0;  // disadvantaged-group AUC (noise-free feature)
};

// lambda*z + (1-lambda)*N(0,1) on advantaged rows, z unchanged elsewhere.
Vec noisy_feature(const Vec& z, const std::vector<bool>& advantaged_mask, Scalar lambda,
                  Rng& rng);

// Closed-form AUC of (S, Z_lambda) for the group whose 2-dim (S, Z) summary
// is given: means (dmu_S, lambda*dmu_Z), covariance
// [[sS, lambda*rho], [lambda*rho, lambda^2*sZ + 2(1-lambda)^2]] where sS, sZ,
// rho are class-summed. The noise contributes variance 1 per class, hence
// 2(1-lambda)^2 after summing classes.
Scalar auc_with_noise(const ClassStats& stats2, Scalar lambda);

// Picks lambda so the bias after acquisition never exceeds prior_bias while
// neither group's AUC drops below its pre-acquisition value. When the
// disadvantaged group's post-acquisition AUC reaches the advantaged group's
// pre-acquisition AUC (Case A), bisects to bias 0; otherwise (Case B) no
// scaling helps and lambda = 0 keeps the advantaged group at its prior AUC.
NoisePlan solve_lambda(const ClassStats& stats_adv, const ClassStats& stats_disadv,
                       Group advantaged, Scalar prior_bias);

// Bisects to a caller-chosen bias target v within the achievable interval;
// throws RangeError carrying that interval otherwise.
NoisePlan target_bias_lambda(const ClassStats& stats_adv, const ClassStats& stats_disadv,
                             Group advantaged, Scalar target);

}  // namespace fairauc

#endif
