#include "fairauc/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "fairauc/linalg.hpp"

namespace fairauc {

Scalar beta_of(const ClassStats& stats2) {
    const Scalar var_sum = stats2.sigma0(1, 1) + stats2.sigma1(1, 1);
    if (!(var_sum > 0.0))
        throw std::domain_error("beta_of: candidate variance sum must be positive");
    return std::abs(stats2.delta_mu()(1)) / std::sqrt(var_sum);
}

Scalar delta_of(const ClassStats& stats2) {
    const Scalar dv = std::abs(stats2.delta_mu()(1));
    if (!(dv > 0.0))
        throw std::domain_error("delta_of: delta_v must be positive");
    const Scalar cov_sum = std::abs(stats2.sigma0(0, 1) + stats2.sigma1(0, 1));
    return std::min(cov_sum / dv, 1.0);
}

Scalar improvement_bound(const BoundInputs& b) {
    const Scalar core = b.beta * (1.0 - b.delta);
    return 0.25 * std::pow(b.gamma, 1.5) * core * core;
}

RoundReport verify_round(Scalar auc_before_disadv,
                         const std::vector<CandidateCheck>& candidates, int selected,
                         Scalar adv_improvement, const BoundInputs& adv_inputs) {
    // Floating-point slack on what are mathematically strict inequalities.
    constexpr Scalar slack = 1e-12;
    (void)auc_before_disadv;
    RoundReport report;
    report.selected = selected;
    report.candidates = candidates;

    Scalar max_bound = 0.0;
    Scalar selected_improvement = 0.0;
    for (const CandidateCheck& c : report.candidates) {
        max_bound = std::max(max_bound, c.bound);
        if (c.feature == selected) selected_improvement = c.improvement;
        if (c.margin < -slack && report.ok) {
            report.ok = false;
            report.detail = "candidate " + std::to_string(c.feature) +
                            " improvement below its bound by " +
                            std::to_string(-c.margin);
        }
    }
    report.disadv_margin = selected_improvement - max_bound;
    if (report.disadv_margin < -slack && report.ok) {
        report.ok = false;
        report.detail = "selected feature " + std::to_string(selected) +
                        " improvement below max candidate bound";
    }
    report.adv_margin = adv_improvement - improvement_bound(adv_inputs);
    if (report.adv_margin < -slack && report.ok) {
        report.ok = false;
        report.detail = "advantaged-group improvement below its bound at feature " +
                        std::to_string(selected);
    }
    return report;
}

LemmaReport lemma_checks() {
    LemmaReport report;
    report.invert_min_margin = std::numeric_limits<Scalar>::infinity();
    report.change_min_margin = std::numeric_limits<Scalar>::infinity();

    // Implication: Phi(sqrt(alpha)) < 1 - gamma  =>  alpha < -2 ln(2 gamma).
    for (int gi = 1; gi <= 100; ++gi) {
        const Scalar gamma = 0.005 * gi;  // (0, 0.5]
        for (int ai = 0; ai <= 120; ++ai) {
            const Scalar alpha = 0.1 * ai;  // [0, 12]
            ++report.points_invert;
            if (normal_cdf(std::sqrt(alpha)) >= 1.0 - gamma) continue;  // vacuous
            const Scalar margin = -2.0 * std::log(2.0 * gamma) - alpha;
            report.invert_min_margin = std::min(report.invert_min_margin, margin);
            if (margin <= 0.0 && report.ok) {
                report.ok = false;
                report.detail = "inversion implication fails at gamma=" +
                                std::to_string(gamma) + " alpha=" + std::to_string(alpha);
            }
        }
    }

    // Phi(sqrt(alpha+Delta)) - Phi(sqrt(alpha)) >=
    //   (2/sqrt(pi)) gamma^{3/2} Delta0 / (sqrt(2/e + Delta0) (2 + Delta0))
    // over gamma in (0, 1/2), alpha in (0, -2 ln 2 gamma), Delta >= Delta0.
    const Scalar gammas[] = {0.001, 0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.45, 0.49};
    const Scalar alpha_fracs[] = {1e-4, 0.05, 0.15, 0.3, 0.5, 0.7, 0.85, 0.95, 0.999};
    const Scalar delta0s[] = {1e-3, 0.01, 0.05, 0.1, 0.3, 0.5, 1.0, 2.0, 5.0, 10.0};
    const Scalar delta_mults[] = {1.0,  1.01, 1.1,  1.3,   1.7,   2.0,  3.0,
                                  4.0,  8.0,  16.0, 64.0,  256.0, 1024.0};
    for (Scalar gamma : gammas) {
        const Scalar cap = -2.0 * std::log(2.0 * gamma);
        if (!(cap > 0.0)) continue;
        for (Scalar fa : alpha_fracs) {
            const Scalar alpha = fa * cap;
            for (Scalar d0 : delta0s)
                for (Scalar dm : delta_mults) {
                    const Scalar d = d0 * dm;
                    const Scalar lhs = normal_cdf(std::sqrt(alpha + d)) -
                                       normal_cdf(std::sqrt(alpha));
                    const Scalar rhs = (2.0 / std::sqrt(M_PI)) *
                                       std::pow(gamma, 1.5) * d0 /
                                       (std::sqrt(2.0 / M_E + d0) * (2.0 + d0));
                    const Scalar margin = lhs - rhs;
                    ++report.points_change;
                    report.change_min_margin =
                        std::min(report.change_min_margin, margin);
                    if (margin < 0.0 && report.ok) {
                        report.ok = false;
                        report.detail = "change lower bound fails at gamma=" +
                                        std::to_string(gamma) +
                                        " alpha=" + std::to_string(alpha) +
                                        " Delta0=" + std::to_string(d0) +
                                        " Delta=" + std::to_string(d);
                    }
                }
        }
    }
    return report;
}

}  // namespace fairauc
