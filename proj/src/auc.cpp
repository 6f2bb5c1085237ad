#include "fairauc/auc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fairauc/linalg.hpp"

namespace fairauc {

Scalar binormal_auc(const Binormal1D& p) {
    if (!(p.var0 > 0.0) || !(p.var1 > 0.0))
        throw std::domain_error("binormal_auc: variances must be positive");
    return normal_cdf((p.mu1 - p.mu0) / std::sqrt(p.var0 + p.var1));
}

namespace {

// Rank-sum AUC over the rows listed in idx (indices into scores/labels).
Scalar rank_auc(const Vec& scores, const std::vector<int>& labels,
                std::vector<Index>& idx) {
    std::sort(idx.begin(), idx.end(),
              [&](Index i, Index j) { return scores(i) < scores(j); });
    const std::size_t n = idx.size();
    Scalar rank_sum_pos = 0.0;
    std::size_t n_pos = 0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && scores(idx[j]) == scores(idx[i])) ++j;
        // Average rank of the tie block [i, j): 1-based ranks i+1 .. j.
        const Scalar avg_rank = 0.5 * static_cast<Scalar>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k)
            if (labels[idx[k]] == 1) {
                rank_sum_pos += avg_rank;
                ++n_pos;
            }
        i = j;
    }
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0)
        throw std::domain_error("empirical_auc: both classes must be present");
    const Scalar u = rank_sum_pos -
                     0.5 * static_cast<Scalar>(n_pos) * static_cast<Scalar>(n_pos + 1);
    return u / (static_cast<Scalar>(n_pos) * static_cast<Scalar>(n_neg));
}

}  // namespace

Scalar empirical_auc(const Vec& scores, const std::vector<int>& labels) {
    std::vector<Index> idx(static_cast<std::size_t>(scores.size()));
    std::iota(idx.begin(), idx.end(), Index{0});
    return rank_auc(scores, labels, idx);
}

Scalar empirical_auc(const Vec& scores, const std::vector<int>& labels,
                     const std::vector<Index>& rows) {
    std::vector<Index> idx(rows);
    return rank_auc(scores, labels, idx);
}

Scalar bias(Scalar auc_a, Scalar auc_b) {
    const Scalar hi = std::max(auc_a, auc_b);
    if (!(hi > 0.0)) throw std::domain_error("bias: max AUC must be positive");
    return 1.0 - std::min(auc_a, auc_b) / hi;
}

Vec fld_direction(const ClassStats& stats, Scalar ridge) {
    return solve_spd(stats.sigma_sum(), stats.delta_mu(), ridge);
}

Scalar fld_auc(const ClassStats& stats, Scalar ridge) {
    return normal_cdf(std::sqrt(quad_form(stats.sigma_sum(), stats.delta_mu(), ridge)));
}

Scalar pair_auc(const ClassStats& stats2, Scalar ridge) {
    if (stats2.dim() != 2)
        throw std::domain_error("pair_auc: expected 2-dim stats");
    return fld_auc(stats2, ridge);
}

Scalar unconditional_variance(Scalar pi, const Binormal1D& p) {
    if (!(pi > 0.0 && pi < 1.0))
        throw std::domain_error("unconditional_variance: pi outside (0,1)");
    const Scalar dmu = p.mu1 - p.mu0;
    return pi * (1.0 - pi) * dmu * dmu + pi * p.var1 + (1.0 - pi) * p.var0;
}

AucCI bootstrap_auc_ci(const Vec& scores, const std::vector<int>& labels,
                       const std::vector<Index>& rows, int resamples,
                       std::uint64_t seed) {
    std::vector<Index> pos, neg;
    auto place = [&](Index i) { (labels[i] == 1 ? pos : neg).push_back(i); };
    if (rows.empty())
        for (Index i = 0; i < scores.size(); ++i) place(i);
    else
        for (Index i : rows) place(i);
    if (pos.empty() || neg.empty())
        throw std::domain_error("bootstrap_auc_ci: both classes must be present");

    AucCI ci;
    std::vector<Index> all(pos);
    all.insert(all.end(), neg.begin(), neg.end());
    ci.value = empirical_auc(scores, labels, all);

    Rng rng(seed);
    std::vector<Scalar> replicates;
    replicates.reserve(static_cast<std::size_t>(resamples));
    std::vector<Index> sample(all.size());
    for (int b = 0; b < resamples; ++b) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < pos.size(); ++i)
            sample[k++] = pos[rng.uniform_index(pos.size())];
        for (std::size_t i = 0; i < neg.size(); ++i)
            sample[k++] = neg[rng.uniform_index(neg.size())];
        replicates.push_back(empirical_auc(scores, labels, sample));
    }
    std::sort(replicates.begin(), replicates.end());
    const auto pick = [&](Scalar q) {
        const Scalar h = q * static_cast<Scalar>(replicates.size() - 1);
        const std::size_t i = static_cast<std::size_t>(h);
        const std::size_t j = std::min(i + 1, replicates.size() - 1);
        const Scalar w = h - static_cast<Scalar>(i);
        return (1.0 - w) * replicates[i] + w * replicates[j];
    };
    ci.lo = pick(0.025);
    ci.hi = pick(0.975);
    return ci;
}

}  // namespace fairauc
