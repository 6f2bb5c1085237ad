#ifndef FAIRAUC_DATAGEN_HPP
#define FAIRAUC_DATAGEN_HPP

#include "fairauc/moments.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

struct GuyonConfig {
    Index n = 20000;
    int n_features = 50;
    int n_informative = 25;
    Scalar group_a_fraction = 0.7;
    Scalar base_rate = 0.25;
    Scalar separation = 0.4;  // class-mean gap per informative feature
    std::uint64_t seed = 0;
};

// Population class-conditional moments behind a generated dataset. Classes
// share a covariance within each group, but each group draws its own
// correlation structure — that asymmetry is what makes one group harder to
// score and drives the bias dynamics.
struct GroundTruth {
    Vec mu0, mu1;  // class-conditional means, identical across groups
    Mat cov_a, cov_b;
};

struct Generated {
    GroupedColumns data;
    GroundTruth truth;
};

// Binormal synthetic data: informative features with separated class means
// and a random correlation structure, plus independent pure-noise features.
Generated gen_guyon(const GuyonConfig& cfg);

struct GammaConfig {
    Scalar neg_shape = 1.0, neg_rate = 1.0;
    Scalar pos_shape = 2.0, pos_rate = 2.0;
    Index n = 20000;
    int n_informative = 25;
    int n_uninformative = 25;
    Scalar group_a_fraction = 0.95;
    Scalar base_rate = 0.25;
    std::uint64_t seed = 0;
};

// Per-class gamma marginals tied together by a Gaussian copula over a random
// correlation matrix. Uninformative features use the negative-class marginal
// for both classes.
GroupedColumns gen_gamma(const GammaConfig& cfg);

GammaConfig gamma_dataset1();
GammaConfig gamma_dataset2();

// Random positive-definite correlation matrix via the partial-correlation
// vine construction; unit diagonal, off-diagonals in (-1, 1). max_abs caps
// the partial correlations; the generators use a moderate cap so no linear
// combination becomes near-perfectly informative.
Mat random_pd_correlation(int dim, std::uint64_t seed, Scalar max_abs = 0.9);

// Regularized lower incomplete gamma P(a, x) and its inverse in x; exposed
// for the copula transform and its tests.
Scalar gamma_p(Scalar a, Scalar x);
Scalar gamma_quantile(Scalar shape, Scalar rate, Scalar p);

}  // namespace fairauc

#endif
