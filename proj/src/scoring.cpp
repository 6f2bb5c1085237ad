#include "fairauc/scoring.hpp"

#include <cmath>

#include "fairauc/linalg.hpp"

namespace fairauc {

namespace {

std::vector<Index> model_rows(const GroupedColumns& data, std::optional<Group> g,
                              const std::vector<Index>& fit_rows) {
    std::vector<Index> out;
    auto take = [&](Index i) {
        if (!g || data.group[i] == *g) out.push_back(i);
    };
    if (fit_rows.empty())
        for (Index i = 0; i < data.rows(); ++i) take(i);
    else
        for (Index i : fit_rows) take(i);
    return out;
}

// One logistic fit on the given rows. Returns (weights, intercept) in the
// original feature scale and whether the data were perfectly separated.
void irls_fit(const GroupedColumns& data, const std::vector<int>& acquired,
              const std::vector<Index>& rows, int max_iters, Scalar tol, Vec& w_out,
              Scalar& b_out, bool& separated_out) {
    const Index n = static_cast<Index>(rows.size());
    const Index d = static_cast<Index>(acquired.size());
    Mat x(n, d);
    Vec y(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < d; ++j) x(i, j) = data.features[acquired[j]](rows[i]);
        y(i) = static_cast<Scalar>(data.label[rows[i]]);
    }
    // Standardize for conditioning; inverted below when reporting weights.
    const Vec mean = x.colwise().mean();
    Vec sd(d);
    for (Index j = 0; j < d; ++j) {
        const Scalar v = (x.col(j).array() - mean(j)).square().sum() /
                         static_cast<Scalar>(n - 1);
        sd(j) = v > 0.0 ? std::sqrt(v) : 1.0;
        x.col(j) = (x.col(j).array() - mean(j)) / sd(j);
    }

    // theta = (intercept, weights) over the design [1 | x].
    Vec theta = Vec::Zero(d + 1);
    Vec eta = Vec::Zero(n);
    bool converged = false;
    for (int it = 0; it < max_iters; ++it) {
        eta = Vec::Constant(n, theta(0)) + x * theta.tail(d);
        const Vec p = (1.0 / (1.0 + (-eta.array()).exp())).matrix();
        const Vec wgt = (p.array() * (1.0 - p.array())).matrix();
        Mat h = Mat::Zero(d + 1, d + 1);
        h(0, 0) = wgt.sum();
        h.block(0, 1, 1, d) = (wgt.transpose() * x);
        h.block(1, 0, d, 1) = h.block(0, 1, 1, d).transpose();
        h.block(1, 1, d, d) = x.transpose() * wgt.asDiagonal() * x;
        h.diagonal().array() += 1e-6;  // stabilizer against separation blow-up
        Vec grad(d + 1);
        grad(0) = (y - p).sum();
        grad.tail(d) = x.transpose() * (y - p);
        const Vec step = solve_spd(h, grad, 0.0);
        theta += step;
        if (step.cwiseAbs().maxCoeff() < tol) {
            converged = true;
            break;
        }
    }
    // Perfect separation: the optimizer never settles while every margin has
    // the right sign.
    separated_out = false;
    if (!converged) {
        eta = Vec::Constant(n, theta(0)) + x * theta.tail(d);
        bool all_signed = true;
        for (Index i = 0; i < n; ++i)
            if ((y(i) > 0.5 ? eta(i) : -eta(i)) <= 0.0) {
                all_signed = false;
                break;
            }
        separated_out = all_signed;
    }

    w_out = (theta.tail(d).array() / sd.array()).matrix();
    b_out = theta(0) - w_out.dot(mean);
}

}  // namespace

ScoringRule fit_fld(const GroupedColumns& data, const std::vector<int>& acquired,
                    bool use_protected, Scalar ridge,
                    const std::vector<Index>& fit_rows) {
    ScoringRule rule;
    rule.kind = ScorerKind::Fld;
    rule.use_protected = use_protected;
    rule.ridge = ridge;
    if (use_protected) {
        for (Group g : {Group::a, Group::b}) {
            const ClassStats s = ssr(data, acquired, g, fit_rows);
            rule.weights.push_back(solve_spd(s.sigma_sum(), s.delta_mu(), ridge));
            rule.intercepts.push_back(0.0);
        }
    } else {
        const ClassStats s = ssr_pooled(data, acquired, fit_rows);
        rule.weights.push_back(solve_spd(s.sigma_sum(), s.delta_mu(), ridge));
        rule.intercepts.push_back(0.0);
    }
    return rule;
}

ScoringRule fit_logistic(const GroupedColumns& data, const std::vector<int>& acquired,
                         bool use_protected, int max_iters, Scalar tol,
                         const std::vector<Index>& fit_rows) {
    ScoringRule rule;
    rule.kind = ScorerKind::Logistic;
    rule.use_protected = use_protected;
    auto fit_one = [&](std::optional<Group> g) {
        const std::vector<Index> rows = model_rows(data, g, fit_rows);
        Vec w;
        Scalar b;
        bool sep;
        irls_fit(data, acquired, rows, max_iters, tol, w, b, sep);
        rule.weights.push_back(std::move(w));
        rule.intercepts.push_back(b);
        rule.perfect_separation = rule.perfect_separation || sep;
    };
    if (use_protected) {
        fit_one(Group::a);
        fit_one(Group::b);
    } else {
        fit_one(std::nullopt);
    }
    return rule;
}

Vec score(const ScoringRule& rule, const GroupedColumns& data,
          const std::vector<int>& acquired) {
    for (const Vec& w : rule.weights)
        if (w.size() != static_cast<Index>(acquired.size()))
            throw std::domain_error("score: rule fitted on a different acquired set");
    const Index n = data.rows();
    Vec s(n);
    for (Index i = 0; i < n; ++i) {
        const std::size_t m =
            rule.use_protected ? static_cast<std::size_t>(data.group[i]) : 0;
        Scalar v = rule.intercepts[m];
        const Vec& w = rule.weights[m];
        for (Index j = 0; j < w.size(); ++j) v += w(j) * data.features[acquired[j]](i);
        s(i) = v;
    }
    return s;
}

}  // namespace fairauc
