#ifndef FAIRAUC_LINALG_HPP
#define FAIRAUC_LINALG_HPP

#include "fairauc/types.hpp"

namespace fairauc {

// Lower-triangular factor L with m = L * L^T.
struct CholeskyFactor {
    Mat lower;
    Index dim() const { return lower.rows(); }
};

// Standard normal CDF, |error| <= 1e-12. Throws std::domain_error on
// non-finite input.
Scalar normal_cdf(Scalar x);

// Standard normal quantile (inverse of normal_cdf), p in (0, 1).
Scalar normal_quantile(Scalar p);

// Factors (m + ridge*I). Throws SingularMatrix with the failing pivot index
// when the ridged matrix is not positive definite.
CholeskyFactor cholesky(const Mat& m, Scalar ridge);

// cholesky with one automatic retry: when factorization fails at ridge 0,
// retries once with ridge = 1e-9 * trace(m) / dim before giving up.
// Covariance matrices of collinear features are routinely near-singular.
CholeskyFactor cholesky_auto(const Mat& m, Scalar ridge);

// v^T (m + ridge*I)^{-1} v via two triangular solves; always >= 0.
// Near-singular m at ridge 0 gets the automatic retry above.
Scalar quad_form(const Mat& m, const Vec& v, Scalar ridge);

// (m + ridge*I)^{-1} rhs, with the same automatic retry.
Vec solve_spd(const Mat& m, const Vec& rhs, Scalar ridge);

}  // namespace fairauc

#endif
