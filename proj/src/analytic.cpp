#include "fairauc/analytic.hpp"

#include <cmath>

#include "fairauc/auc.hpp"
#include "fairauc/datagen.hpp"
#include "fairauc/linalg.hpp"

namespace fairauc {

namespace {

AnalyticGroup random_group(int m, Rng& rng) {
    AnalyticGroup g;
    g.mu0 = Vec(m);
    g.mu1 = Vec(m);
    for (int j = 0; j < m; ++j) {
        g.mu0(j) = rng.uniform(-1.0, 1.0);
        // Positive class shifted so most features carry some signal.
        g.mu1(j) = g.mu0(j) + rng.uniform(0.0, 1.0);
    }
    auto random_cov = [&]() {
        const Mat corr = random_pd_correlation(static_cast<int>(m), rng.raw());
        Vec scales(m);
        for (int j = 0; j < m; ++j) scales(j) = rng.uniform(0.5, 2.0);
        return Mat(scales.cwiseSqrt().asDiagonal() * corr *
                   scales.cwiseSqrt().asDiagonal());
    };
    g.cov0 = random_cov();
    g.cov1 = random_cov();
    return g;
}

// Assemble population ClassStats for an arbitrary coordinate subset.
ClassStats subset_stats(const AnalyticGroup& g, const std::vector<int>& idx) {
    const Index k = static_cast<Index>(idx.size());
    ClassStats s;
    s.mu0 = Vec(k);
    s.mu1 = Vec(k);
    s.sigma0 = Mat(k, k);
    s.sigma1 = Mat(k, k);
    s.n0 = s.n1 = 2;  // population stats; counts are nominal
    for (Index p = 0; p < k; ++p) {
        s.mu0(p) = g.mu0(idx[p]);
        s.mu1(p) = g.mu1(idx[p]);
        for (Index q = 0; q < k; ++q) {
            s.sigma0(p, q) = g.cov0(idx[p], idx[q]);
            s.sigma1(p, q) = g.cov1(idx[p], idx[q]);
        }
    }
    return s;
}

std::vector<int> owned_idx(int d) {
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) idx[static_cast<std::size_t>(j)] = j;
    return idx;
}

}  // namespace

AnalyticInstance random_instance(int d, int nc, Rng& rng) {
    AnalyticInstance inst;
    inst.d = d;
    inst.nc = nc;
    inst.groups[0] = random_group(d + nc, rng);
    inst.groups[1] = random_group(d + nc, rng);
    return inst;
}

Scalar owned_auc(const AnalyticGroup& g, int d) {
    return fld_auc(subset_stats(g, owned_idx(d)), 0.0);
}

ClassStats pair_stats(const AnalyticGroup& g, int d, int candidate) {
    const ClassStats owned = subset_stats(g, owned_idx(d));
    const Vec w = fld_direction(owned, 0.0);
    const int c = d + candidate;

    ClassStats s;
    s.mu0 = Vec(2);
    s.mu1 = Vec(2);
    s.sigma0 = Mat(2, 2);
    s.sigma1 = Mat(2, 2);
    s.n0 = s.n1 = 2;
    s.mu0 << w.dot(owned.mu0), g.mu0(c);
    s.mu1 << w.dot(owned.mu1), g.mu1(c);
    auto fill = [&](const Mat& cov, Mat& out) {
        const Scalar var_s = w.dot(cov.topLeftCorner(d, d) * w);
        const Scalar cov_sz = w.dot(cov.block(0, c, d, 1).col(0));
        out << var_s, cov_sz, cov_sz, cov(c, c);
    };
    fill(g.cov0, s.sigma0);
    fill(g.cov1, s.sigma1);
    return s;
}

Scalar full_auc_with(const AnalyticGroup& g, int d, int candidate) {
    std::vector<int> idx = owned_idx(d);
    idx.push_back(d + candidate);
    return fld_auc(subset_stats(g, idx), 0.0);
}

AnalyticRound analyze_round(const AnalyticInstance& inst) {
    AnalyticRound round;
    const Scalar auc_a = owned_auc(inst.groups[0], inst.d);
    const Scalar auc_b = owned_auc(inst.groups[1], inst.d);
    round.disadvantaged = auc_b < auc_a ? Group::b : Group::a;
    const AnalyticGroup& dis = inst.groups[static_cast<int>(round.disadvantaged)];
    const AnalyticGroup& adv =
        inst.groups[1 - static_cast<int>(round.disadvantaged)];
    round.auc_disadv_before = std::min(auc_a, auc_b);
    const Scalar gamma = 1.0 - round.auc_disadv_before;

    Scalar best_pair = 0.0;
    for (int c = 0; c < inst.nc; ++c) {
        const ClassStats st = pair_stats(dis, inst.d, c);
        CandidateCheck check;
        check.feature = c;
        check.improvement = pair_auc(st, 0.0) - round.auc_disadv_before;
        BoundInputs b;
        b.gamma = gamma;
        b.feature = c;
        if (std::abs(st.delta_mu()(1)) > 0.0) {
            b.beta = beta_of(st);
            b.delta = delta_of(st);
        }
        check.bound = improvement_bound(b);
        check.margin = check.improvement - check.bound;
        round.checks.push_back(check);
        if (round.selected < 0 || check.improvement > best_pair) {
            round.selected = c;
            best_pair = check.improvement;
        }
    }

    round.full_improvement =
        full_auc_with(dis, inst.d, round.selected) - round.auc_disadv_before;

    const Scalar adv_before = owned_auc(adv, inst.d);
    const ClassStats adv_st = pair_stats(adv, inst.d, round.selected);
    round.adv_improvement = pair_auc(adv_st, 0.0) - adv_before;
    round.adv_inputs.gamma = 1.0 - adv_before;
    round.adv_inputs.feature = round.selected;
    if (std::abs(adv_st.delta_mu()(1)) > 0.0) {
        round.adv_inputs.beta = beta_of(adv_st);
        round.adv_inputs.delta = delta_of(adv_st);
    }
    return round;
}

}  // namespace fairauc
