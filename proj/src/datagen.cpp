#include "fairauc/datagen.hpp"

#include <cmath>
#include <limits>

#include "fairauc/linalg.hpp"
#include "fairauc/rng.hpp"

namespace fairauc {

namespace {

Scalar ln_gamma(Scalar x) { return std::lgamma(x); }

// Series expansion of P(a, x), good for x < a + 1.
Scalar gamma_p_series(Scalar a, Scalar x) {
    Scalar ap = a;
    Scalar sum = 1.0 / a;
    Scalar del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - ln_gamma(a));
}

// Continued fraction for Q(a, x) = 1 - P(a, x), good for x >= a + 1.
Scalar gamma_q_cf(Scalar a, Scalar x) {
    const Scalar tiny = 1e-300;
    Scalar b = x + 1.0 - a;
    Scalar c = 1.0 / tiny;
    Scalar d = 1.0 / b;
    Scalar h = d;
    for (int i = 1; i <= 500; ++i) {
        const Scalar an = -static_cast<Scalar>(i) * (static_cast<Scalar>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Scalar del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - ln_gamma(a));
}

}  // namespace

Scalar gamma_p(Scalar a, Scalar x) {
    if (!(a > 0.0)) throw std::domain_error("gamma_p: shape must be positive");
    if (x <= 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

Scalar gamma_quantile(Scalar shape, Scalar rate, Scalar p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("gamma_quantile: p outside (0,1)");
    // Wilson-Hilferty start, then safeguarded Newton on P(shape, x) = p.
    const Scalar z = normal_quantile(p);
    const Scalar t = 1.0 - 1.0 / (9.0 * shape) + z / (3.0 * std::sqrt(shape));
    Scalar x = shape * t * t * t;
    if (!(x > 0.0)) x = 1e-8;
    Scalar lo = 0.0, hi = std::numeric_limits<Scalar>::infinity();
    for (int it = 0; it < 100; ++it) {
        const Scalar f = gamma_p(shape, x) - p;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        const Scalar pdf =
            std::exp((shape - 1.0) * std::log(x) - x - ln_gamma(shape));
        Scalar next = pdf > 0.0 ? x - f / pdf : 0.5 * (lo + hi);
        if (!(next > lo) || !(next < hi))
            next = std::isfinite(hi) ? 0.5 * (lo + hi) : 2.0 * (lo + 1.0);
        if (std::abs(next - x) <= 1e-12 * (1.0 + x)) {
            x = next;
            break;
        }
        x = next;
    }
    return x / rate;
}

Mat random_pd_correlation(int dim, std::uint64_t seed, Scalar max_abs) {
    Rng rng(seed);
    Mat partials = Mat::Zero(dim, dim);
    Mat corr = Mat::Identity(dim, dim);
    for (int k = 0; k < dim - 1; ++k)
        for (int i = k + 1; i < dim; ++i) {
            // Partial correlations strictly inside (-1, 1) keep the result
            // positive definite.
            partials(k, i) = rng.uniform(-max_abs, max_abs);
            Scalar p = partials(k, i);
            for (int l = k - 1; l >= 0; --l)
                p = p * std::sqrt((1.0 - partials(l, i) * partials(l, i)) *
                                  (1.0 - partials(l, k) * partials(l, k))) +
                    partials(l, i) * partials(l, k);
            corr(k, i) = corr(i, k) = p;
        }
    return corr;
}

namespace {

// Block covariance for one group: independently correlated informative and
// noise blocks, unit variances. A moderate partial-correlation cap keeps
// every linear combination's informativeness bounded.
Mat group_covariance(int d, int di, std::uint64_t seed) {
    Mat cov = Mat::Identity(d, d);
    if (di > 1)
        cov.topLeftCorner(di, di) = random_pd_correlation(di, mix_seed(seed, 1), 0.4);
    if (d - di > 1)
        cov.bottomRightCorner(d - di, d - di) =
            random_pd_correlation(d - di, mix_seed(seed, 2), 0.4);
    return cov;
}

}  // namespace

Generated gen_guyon(const GuyonConfig& cfg) {
    const int d = cfg.n_features;
    const int di = cfg.n_informative;
    Rng rng(mix_seed(cfg.seed, 0x677579ull));

    // Class-conditional means are shared across groups; each group draws its
    // own correlation structure, so the same features separate the classes
    // unequally well per group. Informative features carry heterogeneous
    // mean gaps so candidate rankings are mean-driven, not correlation-only.
    Vec mu0 = Vec::Zero(d);
    Vec mu1 = Vec::Zero(d);
    for (int j = 0; j < di; ++j)
        mu1(j) = cfg.separation * (0.2 + 0.8 * rng.uniform());

    Generated out;
    out.truth.mu0 = mu0;
    out.truth.mu1 = mu1;
    out.truth.cov_a = group_covariance(d, di, mix_seed(cfg.seed, 0xa1));
    out.truth.cov_b = group_covariance(d, di, mix_seed(cfg.seed, 0xb2));
    const Mat chol_a = cholesky(out.truth.cov_a, 0.0).lower;
    const Mat chol_b = cholesky(out.truth.cov_b, 0.0).lower;

    GroupedColumns& data = out.data;
    data.features.assign(static_cast<std::size_t>(d), Vec(cfg.n));
    data.names.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) data.names[j] = "f" + std::to_string(j);
    data.group.resize(static_cast<std::size_t>(cfg.n));
    data.label.resize(static_cast<std::size_t>(cfg.n));

    Vec z(d);
    for (Index i = 0; i < cfg.n; ++i) {
        const Group g = rng.uniform() < cfg.group_a_fraction ? Group::a : Group::b;
        data.group[i] = g;
        const int y = rng.uniform() < cfg.base_rate ? 1 : 0;
        data.label[i] = y;
        for (int j = 0; j < d; ++j) z(j) = rng.normal();
        const Vec x = (g == Group::a ? chol_a : chol_b) * z;
        const Vec& mu = y ? mu1 : mu0;
        for (int j = 0; j < d; ++j) data.features[j](i) = mu(j) + x(j);
    }
    return out;
}

GroupedColumns gen_gamma(const GammaConfig& cfg) {
    const int d = cfg.n_informative + cfg.n_uninformative;
    Rng rng(mix_seed(cfg.seed, 0x67616dull));
    const Mat chol_a =
        cholesky(group_covariance(d, cfg.n_informative, mix_seed(cfg.seed, 0xa3)), 0.0)
            .lower;
    const Mat chol_b =
        cholesky(group_covariance(d, cfg.n_informative, mix_seed(cfg.seed, 0xb4)), 0.0)
            .lower;

    GroupedColumns data;
    data.features.assign(static_cast<std::size_t>(d), Vec(cfg.n));
    data.names.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) data.names[j] = "f" + std::to_string(j);
    data.group.resize(static_cast<std::size_t>(cfg.n));
    data.label.resize(static_cast<std::size_t>(cfg.n));

    Vec z(d);
    for (Index i = 0; i < cfg.n; ++i) {
        const Group g = rng.uniform() < cfg.group_a_fraction ? Group::a : Group::b;
        data.group[i] = g;
        const int y = rng.uniform() < cfg.base_rate ? 1 : 0;
        data.label[i] = y;
        for (int j = 0; j < d; ++j) z(j) = rng.normal();
        const Vec corr_z = (g == Group::a ? chol_a : chol_b) * z;
        for (int j = 0; j < d; ++j) {
            const Scalar u = normal_cdf(corr_z(j));
            const bool informative = j < cfg.n_informative;
            const Scalar shape =
                informative && y ? cfg.pos_shape : cfg.neg_shape;
            const Scalar rate = informative && y ? cfg.pos_rate : cfg.neg_rate;
            // Clamp away from the open-interval endpoints for the quantile.
            data.features[j](i) =
                gamma_quantile(shape, rate, std::min(std::max(u, 1e-12), 1.0 - 1e-12));
        }
    }
    return data;
}

GammaConfig gamma_dataset1() {
    GammaConfig cfg;
    cfg.neg_shape = 1.0;
    cfg.neg_rate = std::sqrt(2.0);
    cfg.pos_shape = 2.0;
    cfg.pos_rate = 2.0;
    return cfg;
}

GammaConfig gamma_dataset2() {
    GammaConfig cfg;
    cfg.neg_shape = 1.0;
    cfg.neg_rate = 0.5;
    cfg.pos_shape = 2.0;
    cfg.pos_rate = std::sqrt(0.5);
    return cfg;
}

}  // namespace fairauc
