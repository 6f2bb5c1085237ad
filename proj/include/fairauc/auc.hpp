#ifndef FAIRAUC_AUC_HPP
#define FAIRAUC_AUC_HPP

#include <vector>

#include "fairauc/moments.hpp"
#include "fairauc/rng.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

// One-dimensional binormal model: class-conditional normals.
struct Binormal1D {
    Scalar mu0 = 0, mu1 = 0;
    Scalar var0 = 1, var1 = 1;
};

// Phi(dmu / sqrt(var0 + var1)). Values below 0.5 (anti-informative feature)
// are returned as-is, never flipped.
Scalar binormal_auc(const Binormal1D& p);

// Mann-Whitney statistic with half credit on ties. Throws std::domain_error
// when only one class is present.
Scalar empirical_auc(const Vec& scores, const std::vector<int>& labels);

// Subset variant over explicit row indices.
Scalar empirical_auc(const Vec& scores, const std::vector<int>& labels,
                     const std::vector<Index>& rows);

// 1 - min/max of the two group AUCs.
Scalar bias(Scalar auc_a, Scalar auc_b);

// w* = (sigma0 + sigma1 + ridge*I)^{-1} (mu1 - mu0).
Vec fld_direction(const ClassStats& stats, Scalar ridge);

// Phi(sqrt(dmu^T (sigma0 + sigma1 + ridge*I)^{-1} dmu)): the best AUC any
// GLM on these features can reach under binormality.
Scalar fld_auc(const ClassStats& stats, Scalar ridge);

// fld_auc specialized to the 2-dim (score, candidate) system — the
// candidate-evaluation kernel.
Scalar pair_auc(const ClassStats& stats2, Scalar ridge);

// pi*(1-pi)*dmu^2 + pi*var1 + (1-pi)*var0.
Scalar unconditional_variance(Scalar pi, const Binormal1D& p);

// Percentile bootstrap CI, stratified by class (resampling positives and
// negatives separately), 1000 resamples by default.
struct AucCI {
    Scalar value = 0, lo = 0, hi = 0;
};
AucCI bootstrap_auc_ci(const Vec& scores, const std::vector<int>& labels,
                       const std::vector<Index>& rows, int resamples, std::uint64_t seed);

}  // namespace fairauc

#endif
