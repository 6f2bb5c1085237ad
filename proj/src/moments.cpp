#include "fairauc/moments.hpp"

namespace fairauc {

namespace {

// Mean and n-1 covariance of the given rows of the given columns.
void cell_moments(const std::vector<const Vec*>& cols, const std::vector<Index>& rows,
                  Vec& mu, Mat& sigma) {
    const Index d = static_cast<Index>(cols.size());
    const Index n = static_cast<Index>(rows.size());
    Mat x(n, d);
    for (Index j = 0; j < d; ++j)
        for (Index i = 0; i < n; ++i) x(i, j) = (*cols[j])(rows[i]);
    mu = x.colwise().mean();
    const Mat centered = x.rowwise() - mu.transpose();
    sigma = centered.transpose() * centered / static_cast<Scalar>(n - 1);
}

}  // namespace

ClassStats stats_of(const std::vector<const Vec*>& cols, const GroupedColumns& data,
                    std::optional<Group> g, const std::vector<Index>& rows) {
    std::vector<Index> by_class[2];
    auto take = [&](Index i) {
        if (!g || data.group[i] == *g) by_class[data.label[i]].push_back(i);
    };
    if (rows.empty())
        for (Index i = 0; i < data.rows(); ++i) take(i);
    else
        for (Index i : rows) take(i);

    for (int y = 0; y < 2; ++y)
        if (by_class[y].size() < 2)
            throw InsufficientSamples(
                std::string("fewer than 2 rows in cell (group=") +
                (g ? group_name(*g) : "any") + ", class=" + std::to_string(y) + ")");

    ClassStats s;
    cell_moments(cols, by_class[0], s.mu0, s.sigma0);
    cell_moments(cols, by_class[1], s.mu1, s.sigma1);
    s.n0 = static_cast<Index>(by_class[0].size());
    s.n1 = static_cast<Index>(by_class[1].size());
    return s;
}

ClassStats ssr(const GroupedColumns& data, const std::vector<int>& feature_indices,
               Group g, const std::vector<Index>& rows) {
    std::vector<const Vec*> cols;
    cols.reserve(feature_indices.size());
    for (int j : feature_indices) cols.push_back(&data.features[j]);
    return stats_of(cols, data, g, rows);
}

ClassStats ssr_pooled(const GroupedColumns& data, const std::vector<int>& feature_indices,
                      const std::vector<Index>& rows) {
    std::vector<const Vec*> cols;
    cols.reserve(feature_indices.size());
    for (int j : feature_indices) cols.push_back(&data.features[j]);
    return stats_of(cols, data, std::nullopt, rows);
}

ClassStats ssr2(const Vec& aux, Group g, const Vec& scores, const GroupedColumns& data,
                const std::vector<Index>& rows) {
    return stats_of({&scores, &aux}, data, g, rows);
}

ClassStats overall_ssr(const GroupedColumns& data, const Vec& aux, const Vec& scores,
                       const std::vector<Index>& rows) {
    return stats_of({&scores, &aux}, data, std::nullopt, rows);
}

}  // namespace fairauc
