#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fairauc/analytic.hpp"
#include "fairauc/linalg.hpp"
#include "fairauc/auc.hpp"
#include "fairauc/noisy.hpp"
#include "fairauc/rng.hpp"

using namespace fairauc;

namespace {

ClassStats pair2(Scalar dmu_s, Scalar dmu_z, Scalar var_s, Scalar var_z, Scalar cov) {
    // per-class moments; the closed form consumes the class sums
    ClassStats s;
    s.mu0 = Vec::Zero(2);
    s.mu1 = Vec(2);
    s.mu1 << dmu_s, dmu_z;
    s.sigma0 = Mat(2, 2);
    s.sigma0 << var_s / 2, cov / 2, cov / 2, var_z / 2;
    s.sigma1 = s.sigma0;
    s.n0 = s.n1 = 2;
    return s;
}

}  // namespace

TEST_CASE("noisy_feature endpoints") {
    Rng rng(1);
    Vec z(6);
    z << 1, 2, 3, 4, 5, 6;
    const std::vector<bool> mask = {true, false, true, false, true, false};
    const Vec z1 = noisy_feature(z, mask, 1.0, rng);
    CHECK((z1.array() == z.array()).all());
    const Vec z0 = noisy_feature(z, mask, 0.0, rng);
    for (int i = 0; i < 6; ++i) {
        if (mask[i])
            CHECK(z0(i) != z(i));  // pure noise
        else
            CHECK(z0(i) == z(i));
    }
}

TEST_CASE("noisy_feature matches the target variance at scale") {
    Rng rng(2);
    const Index n = 60000;
    Vec z(n);
    for (Index i = 0; i < n; ++i) z(i) = 2.0 * rng.normal();
    const std::vector<bool> mask(n, true);
    const Scalar lambda = 0.6;
    const Vec zn = noisy_feature(z, mask, lambda, rng);
    const Scalar mean = zn.mean();
    const Scalar var = (zn.array() - mean).square().sum() / (n - 1);
    // Var = lambda^2 * 4 + (1-lambda)^2
    CHECK(std::abs(var - (lambda * lambda * 4.0 + 0.16)) < 0.05);
    CHECK(std::abs(mean) < 0.05);
}

TEST_CASE("auc_with_noise endpoints") {
    const ClassStats s = pair2(1.0, 0.8, 1.0, 1.5, 0.3);
    CHECK(auc_with_noise(s, 1.0) == doctest::Approx(pair_auc(s, 0.0)).epsilon(1e-12));
    // lambda 0: candidate is pure noise, AUC collapses to the score alone
    const Scalar s_only = normal_cdf(1.0 / std::sqrt(1.0));
    CHECK(auc_with_noise(s, 0.0) == doctest::Approx(s_only).epsilon(1e-12));
}

TEST_CASE("auc_with_noise matches Monte Carlo at an interior lambda") {
    const Scalar dmu_s = 0.9, dmu_z = 1.1, var_s = 1.3, var_z = 0.7, cov = 0.4;
    const ClassStats s = pair2(dmu_s, dmu_z, var_s, var_z, cov);
    const Scalar lambda = 0.45;
    Rng rng(17);
    const Index n = 200000;
    // per-class covariance of (S, Z) is half the class sum
    Mat c(2, 2);
    c << var_s / 2, cov / 2, cov / 2, var_z / 2;
    const Mat l = c.llt().matrixL();
    Vec sc(2 * n);
    std::vector<int> y(2 * n);
    for (Index i = 0; i < 2 * n; ++i) {
        const int yi = i < n ? 0 : 1;
        const Scalar g1 = rng.normal(), g2 = rng.normal();
        Scalar sv = l(0, 0) * g1;
        Scalar zv = l(1, 0) * g1 + l(1, 1) * g2;
        if (yi == 1) {
            sv += dmu_s;
            zv += dmu_z;
        }
        const Scalar z_noisy = lambda * zv + (1.0 - lambda) * rng.normal();
        // optimal direction for the noisy pair, from the closed-form moments
        const Scalar ss = var_s, rho = lambda * cov;
        const Scalar zz = lambda * lambda * var_z + 2.0 * (1.0 - lambda) * (1.0 - lambda);
        const Scalar det = ss * zz - rho * rho;
        const Scalar w_s = (zz * dmu_s - rho * lambda * dmu_z) / det;
        const Scalar w_z = (-rho * dmu_s + ss * lambda * dmu_z) / det;
        sc(i) = w_s * sv + w_z * z_noisy;
        y[i] = yi;
    }
    CHECK(std::abs(empirical_auc(sc, y) - auc_with_noise(s, lambda)) < 0.005);
}

TEST_CASE("auc_with_noise is monotone in lambda when the candidate helps") {
    const ClassStats s = pair2(1.0, 0.8, 1.0, 1.5, 0.0);
    Scalar prev = auc_with_noise(s, 0.0);
    for (int i = 1; i <= 20; ++i) {
        const Scalar cur = auc_with_noise(s, i / 20.0);
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }
}

TEST_CASE("solve_lambda: equal post AUCs need no intervention") {
    const ClassStats s = pair2(1.0, 0.8, 1.0, 1.5, 0.3);
    const NoisePlan plan = solve_lambda(s, s, Group::b, 0.1);
    CHECK(plan.lambda == 1.0);
    CHECK(plan.achieved_bias == doctest::Approx(0.0));
}

TEST_CASE("solve_lambda case A zeroes the bias") {
    // advantaged gains a lot from Z; disadvantaged post exceeds advantaged pre
    const ClassStats adv = pair2(1.0, 1.5, 1.0, 1.0, 0.0);
    const ClassStats dis = pair2(1.0, 0.8, 1.0, 1.0, 0.0);
    const Scalar adv_pre = normal_cdf(1.0);
    const Scalar dis_post = pair_auc(dis, 0.0);
    REQUIRE(dis_post > adv_pre);
    const Scalar prior = bias(adv_pre, normal_cdf(1.0));
    const NoisePlan plan = solve_lambda(adv, dis, Group::a, prior);
    CHECK(plan.lambda > 0.0);
    CHECK(plan.lambda < 1.0);
    CHECK(plan.achieved_bias <= 1e-8);
    CHECK(plan.auc_adv == doctest::Approx(dis_post).epsilon(1e-8));
    CHECK(plan.auc_disadv == doctest::Approx(dis_post).epsilon(1e-12));
}

TEST_CASE("solve_lambda case B freezes the advantaged group") {
    // disadvantaged barely improves; its post AUC stays below advantaged pre
    const ClassStats adv = pair2(1.5, 1.0, 1.0, 1.0, 0.0);
    const ClassStats dis = pair2(0.5, 0.05, 1.0, 1.0, 0.0);
    const Scalar adv_pre = normal_cdf(1.5 / 1.0);
    const Scalar dis_post = pair_auc(dis, 0.0);
    REQUIRE(dis_post < adv_pre);
    const Scalar prior = bias(adv_pre, normal_cdf(0.5));
    const NoisePlan plan = solve_lambda(adv, dis, Group::a, prior);
    CHECK(plan.lambda == 0.0);
    CHECK(plan.auc_adv == doctest::Approx(adv_pre).epsilon(1e-12));
    CHECK(plan.achieved_bias <= prior + 1e-12);
    CHECK(plan.achieved_bias == doctest::Approx(bias(adv_pre, dis_post)).epsilon(1e-12));
}

TEST_CASE("target_bias_lambda hits interior targets and rejects others") {
    const ClassStats adv = pair2(1.0, 1.5, 1.0, 1.0, 0.0);
    const ClassStats dis = pair2(1.0, 0.8, 1.0, 1.0, 0.0);
    const Scalar full_bias = bias(pair_auc(adv, 0.0), pair_auc(dis, 0.0));
    const Scalar target = 0.5 * full_bias;
    const NoisePlan plan = target_bias_lambda(adv, dis, Group::a, target);
    CHECK(plan.achieved_bias == doctest::Approx(target).epsilon(1e-6));
    CHECK(plan.lambda > 0.0);
    CHECK(plan.lambda < 1.0);
    // endpoints of the achievable interval
    const NoisePlan hi = target_bias_lambda(adv, dis, Group::a, full_bias);
    CHECK(hi.achieved_bias == doctest::Approx(full_bias).epsilon(1e-6));
    CHECK(hi.lambda > plan.lambda);
    CHECK_THROWS_AS(target_bias_lambda(adv, dis, Group::a, full_bias + 0.05), RangeError);
    try {
        target_bias_lambda(adv, dis, Group::a, full_bias + 0.05);
    } catch (const RangeError& e) {
        CHECK(e.lo <= e.hi);
        CHECK(e.hi == doctest::Approx(full_bias).epsilon(1e-9));
    }
}

TEST_CASE("solve_lambda ledger over random analytic instances") {
    Rng rng(2024);
    for (int i = 0; i < 20; ++i) {
        const AnalyticInstance inst = random_instance(2, 1, rng);
        const Scalar pre_a = owned_auc(inst.groups[0], 2);
        const Scalar pre_b = owned_auc(inst.groups[1], 2);
        const ClassStats pa = pair_stats(inst.groups[0], 2, 0);
        const ClassStats pb = pair_stats(inst.groups[1], 2, 0);
        const Scalar post_a = pair_auc(pa, 0.0);
        const Scalar post_b = pair_auc(pb, 0.0);
        const Group adv = post_a >= post_b ? Group::a : Group::b;
        const ClassStats& sa = adv == Group::a ? pa : pb;
        const ClassStats& sd = adv == Group::a ? pb : pa;
        const Scalar adv_pre = adv == Group::a ? pre_a : pre_b;
        const Scalar dis_pre = adv == Group::a ? pre_b : pre_a;
        const Scalar prior = bias(pre_a, pre_b);
        const NoisePlan plan = solve_lambda(sa, sd, adv, prior);
        CAPTURE(i);
        CHECK(plan.achieved_bias <= prior + 1e-9);
        CHECK(plan.auc_adv >= adv_pre - 1e-9);
        CHECK(plan.auc_disadv >= dis_pre - 1e-9);
    }
}
