#include "fairauc/linalg.hpp"

#include <cmath>
#include <string>

namespace fairauc {

Scalar normal_cdf(Scalar x) {
    if (!std::isfinite(x))
        throw std::domain_error("normal_cdf: non-finite input");
    // erfc keeps full relative accuracy in the lower tail; absolute error
    // is well below 1e-12 everywhere.
    return 0.5 * std::erfc(-x * M_SQRT1_2);
}

Scalar normal_quantile(Scalar p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p outside (0,1)");
    // Acklam's rational approximation, then one Halley refinement step to
    // push the error to machine precision.
    static const Scalar a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const Scalar b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const Scalar c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const Scalar d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const Scalar plow = 0.02425;
    Scalar x;
    if (p < plow) {
        const Scalar q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const Scalar q = p - 0.5;
        const Scalar r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const Scalar q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const Scalar e = normal_cdf(x) - p;
    const Scalar u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

CholeskyFactor cholesky(const Mat& m, Scalar ridge) {
    const Index n = m.rows();
    Mat L = Mat::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
        Scalar diag = m(j, j) + ridge - L.row(j).head(j).squaredNorm();
        if (!(diag > 0.0))
            throw SingularMatrix(j, "cholesky: matrix not positive definite at pivot " +
                                        std::to_string(j));
        L(j, j) = std::sqrt(diag);
        for (Index i = j + 1; i < n; ++i)
            L(i, j) = (m(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
    }
    return CholeskyFactor{std::move(L)};
}

CholeskyFactor cholesky_auto(const Mat& m, Scalar ridge) {
    try {
        return cholesky(m, ridge);
    } catch (const SingularMatrix&) {
        if (ridge != 0.0) throw;
        const Scalar retry = 1e-9 * m.trace() / static_cast<Scalar>(m.rows());
        if (!(retry > 0.0)) throw;
        return cholesky(m, retry);
    }
}

Scalar quad_form(const Mat& m, const Vec& v, Scalar ridge) {
    const CholeskyFactor f = cholesky_auto(m, ridge);
    const Vec u = f.lower.triangularView<Eigen::Lower>().solve(v);
    const Vec w = f.lower.transpose().triangularView<Eigen::Upper>().solve(u);
    const Scalar value = v.dot(w);
    return value < 0.0 ? 0.0 : value;
}

Vec solve_spd(const Mat& m, const Vec& rhs, Scalar ridge) {
    const CholeskyFactor f = cholesky_auto(m, ridge);
    const Vec u = f.lower.triangularView<Eigen::Lower>().solve(rhs);
    return f.lower.transpose().triangularView<Eigen::Upper>().solve(u);
}

}  // namespace fairauc
