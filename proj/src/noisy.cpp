#include "fairauc/noisy.hpp"

#include <algorithm>
#include <cmath>

#include "fairauc/auc.hpp"
#include "fairauc/linalg.hpp"

namespace fairauc {

Vec noisy_feature(const Vec& z, const std::vector<bool>& advantaged_mask, Scalar lambda,
                  Rng& rng) {
    Vec out = z;
    for (Index i = 0; i < z.size(); ++i)
        if (advantaged_mask[static_cast<std::size_t>(i)])
            out(i) = lambda * z(i) + (1.0 - lambda) * rng.normal();
    return out;
}

Scalar auc_with_noise(const ClassStats& stats2, Scalar lambda) {
    const Vec dmu_raw = stats2.delta_mu();
    const Mat s = stats2.sigma_sum();
    Vec dmu(2);
    dmu << dmu_raw(0), lambda * dmu_raw(1);
    Mat cov(2, 2);
    const Scalar off = lambda * s(0, 1);
    cov << s(0, 0), off, off,
        lambda * lambda * s(1, 1) + 2.0 * (1.0 - lambda) * (1.0 - lambda);
    return normal_cdf(std::sqrt(quad_form(cov, dmu, 0.0)));
}

namespace {

// AUC on the score alone: drop the candidate coordinate.
Scalar score_only_auc(const ClassStats& stats2) {
    const Scalar dmu = stats2.delta_mu()(0);
    const Scalar var = stats2.sigma_sum()(0, 0);
    return normal_cdf(std::abs(dmu) / std::sqrt(var));
}

Scalar bias_at(const ClassStats& stats_adv, const ClassStats& stats_disadv,
               Scalar lambda) {
    return bias(auc_with_noise(stats_adv, lambda), pair_auc(stats_disadv, 0.0));
}

NoisePlan make_plan(const ClassStats& stats_adv, const ClassStats& stats_disadv,
                    Group advantaged, Scalar lambda) {
    NoisePlan plan;
    plan.lambda = lambda;
    plan.advantaged = advantaged;
    plan.auc_adv = auc_with_noise(stats_adv, lambda);
    plan.auc_disadv = pair_auc(stats_disadv, 0.0);
    plan.achieved_bias = bias(plan.auc_adv, plan.auc_disadv);
    return plan;
}

// Bisection for g(lambda) = bias_at(lambda) - target with g(lo) <= 0 <= g(hi)
// in the sense of bracketing a sign change; continuity of the bias in lambda
// guarantees convergence.
Scalar bisect_bias(const ClassStats& stats_adv, const ClassStats& stats_disadv,
                   Scalar target, Scalar lo, Scalar hi) {
    Scalar flo = bias_at(stats_adv, stats_disadv, lo) - target;
    for (int it = 0; it < 200; ++it) {
        const Scalar mid = 0.5 * (lo + hi);
        const Scalar fmid = bias_at(stats_adv, stats_disadv, mid) - target;
        if (std::abs(fmid) <= 1e-12 || hi - lo < 1e-10) return mid;
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

NoisePlan solve_lambda(const ClassStats& stats_adv, const ClassStats& stats_disadv,
                       Group advantaged, Scalar prior_bias) {
    (void)prior_bias;
    const Scalar adv_pre = score_only_auc(stats_adv);
    const Scalar adv_post = pair_auc(stats_adv, 0.0);
    const Scalar disadv_post = pair_auc(stats_disadv, 0.0);

    if (adv_post <= disadv_post)  // degenerate: already unbiased or flipped
        return make_plan(stats_adv, stats_disadv, advantaged, 1.0);
    if (disadv_post >= adv_pre) {
        // Case A: the advantaged curve sweeps from adv_pre up to adv_post and
        // crosses disadv_post; bisect the AUC gap to bias 0.
        Scalar lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
            const Scalar mid = 0.5 * (lo + hi);
            if (auc_with_noise(stats_adv, mid) < disadv_post)
                lo = mid;
            else
                hi = mid;
        }
        return make_plan(stats_adv, stats_disadv, advantaged, 0.5 * (lo + hi));
    }
    // Case B: even the fully scrubbed feature leaves the advantaged group
    // ahead; lambda = 0 holds its AUC at the prior value while the other
    // group keeps the full feature.
    return make_plan(stats_adv, stats_disadv, advantaged, 0.0);
}

NoisePlan target_bias_lambda(const ClassStats& stats_adv, const ClassStats& stats_disadv,
                             Group advantaged, Scalar target) {
    const Scalar bias_lo = solve_lambda(stats_adv, stats_disadv, advantaged,
                                        /*prior_bias=*/1.0)
                               .achieved_bias;
    const Scalar bias_hi = bias_at(stats_adv, stats_disadv, 1.0);
    const Scalar lo = std::min(bias_lo, bias_hi);
    const Scalar hi = std::max(bias_lo, bias_hi);
    if (target < lo - 1e-9 || target > hi + 1e-9)
        throw RangeError(lo, hi,
                         "target_bias_lambda: target bias outside achievable interval");

    const Scalar lam_lo =
        solve_lambda(stats_adv, stats_disadv, advantaged, 1.0).lambda;
    NoisePlan plan = make_plan(
        stats_adv, stats_disadv, advantaged,
        bisect_bias(stats_adv, stats_disadv, std::clamp(target, lo, hi), lam_lo, 1.0));
    return plan;
}

}  // namespace fairauc
