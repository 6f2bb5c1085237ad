#ifndef FAIRAUC_MOMENTS_HPP
#define FAIRAUC_MOMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fairauc/types.hpp"

namespace fairauc {

// Column-oriented dataset: feature columns of equal length, a protected-group
// column and a binary class column.
struct GroupedColumns {
    std::vector<std::string> names;  // one per feature column; may be empty
    std::vector<Vec> features;
    std::vector<Group> group;
    std::vector<int> label;  // 0/1

    Index rows() const { return static_cast<Index>(group.size()); }
    Index n_features() const { return static_cast<Index>(features.size()); }
};

// Class-conditional first and second moments (n-1 covariance divisor).
struct ClassStats {
    Vec mu0, mu1;
    Mat sigma0, sigma1;
    Index n0 = 0, n1 = 0;

    Index dim() const { return mu0.size(); }
    Vec delta_mu() const { return mu1 - mu0; }
    Mat sigma_sum() const { return sigma0 + sigma1; }
};

// Moments of arbitrary columns over the rows selected by `rows` (all rows
// when empty), optionally restricted to one group. Building block for the
// three public summary-statistic routines below.
ClassStats stats_of(const std::vector<const Vec*>& cols, const GroupedColumns& data,
                    std::optional<Group> g,
                    const std::vector<Index>& rows = {});

// Per-group class-conditional moments of the selected feature columns.
ClassStats ssr(const GroupedColumns& data, const std::vector<int>& feature_indices,
               Group g, const std::vector<Index>& rows = {});

// Pooled-over-groups variant (one model for everybody).
ClassStats ssr_pooled(const GroupedColumns& data, const std::vector<int>& feature_indices,
                      const std::vector<Index>& rows = {});

// 2-dim moments of (score, candidate) for one group. The off-diagonal is the
// raw class-conditional covariance between S and Z.
ClassStats ssr2(const Vec& aux, Group g, const Vec& scores, const GroupedColumns& data,
                const std::vector<Index>& rows = {});

// ssr2 pooling both groups; used when the protected attribute is unusable.
ClassStats overall_ssr(const GroupedColumns& data, const Vec& aux, const Vec& scores,
                       const std::vector<Index>& rows = {});

}  // namespace fairauc

#endif
