#include "fairauc/acquisition.hpp"

#include <algorithm>
#include <cmath>

#include "fairauc/auc.hpp"
#include "fairauc/bounds.hpp"
#include "fairauc/linalg.hpp"
#include "fairauc/noisy.hpp"
#include "fairauc/rng.hpp"

namespace fairauc {

const char* strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::FairAUC: return "fairauc";
        case StrategyKind::MaxAUC: return "maxauc";
        case StrategyKind::MinBias: return "minbias";
        case StrategyKind::Random: return "random";
        case StrategyKind::Weighted: return "weighted";
        case StrategyKind::BiasPenalty: return "biaspenalty";
    }
    return "?";
}

std::vector<int> AcquisitionState::active() const {
    std::vector<int> out = config.owned;
    out.insert(out.end(), acquired.begin(), acquired.end());
    return out;
}

std::vector<int> AcquisitionState::candidates(const GroupedColumns& data) const {
    std::vector<char> taken(static_cast<std::size_t>(data.n_features()), 0);
    for (int j : config.owned) taken[static_cast<std::size_t>(j)] = 1;
    for (int j : acquired) taken[static_cast<std::size_t>(j)] = 1;
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(data.n_features()); ++j)
        if (!taken[static_cast<std::size_t>(j)]) out.push_back(j);
    return out;
}

namespace {

ScoringRule fit_rule(const AcquisitionState& state, const GroupedColumns& data) {
    const std::vector<int> active = state.active();
    if (state.config.scorer == ScorerKind::Fld)
        return fit_fld(data, active, state.config.use_protected, state.config.ridge,
                       state.config.fit_rows);
    return fit_logistic(data, active, state.config.use_protected, 100, 1e-8,
                        state.config.fit_rows);
}

std::vector<Index> group_rows(const GroupedColumns& data, Group g,
                              const std::vector<Index>& within) {
    std::vector<Index> out;
    if (within.empty()) {
        for (Index i = 0; i < data.rows(); ++i)
            if (data.group[i] == g) out.push_back(i);
    } else {
        for (Index i : within)
            if (data.group[i] == g) out.push_back(i);
    }
    return out;
}

ClassStats candidate_stats(const AcquisitionState& state, const GroupedColumns& data,
                           const Vec& scores, int feature, std::optional<Group> g) {
    ClassStats st = g ? ssr2(data.features[feature], *g, scores, data,
                             state.config.fit_rows)
                      : overall_ssr(data, data.features[feature], scores,
                                    state.config.fit_rows);
    if (state.config.zero_correlation) {
        st.sigma0(0, 1) = st.sigma0(1, 0) = 0.0;
        st.sigma1(0, 1) = st.sigma1(1, 0) = 0.0;
    }
    return st;
}

// Group-size-weighted sum of per-group candidate AUCs, or the pooled variant
// when the protected attribute is off-limits.
Scalar overall_objective(const AcquisitionState& state, const GroupedColumns& data,
                         const Vec& scores, int feature, Scalar phi_a) {
    if (!state.config.use_protected)
        return pair_auc(candidate_stats(state, data, scores, feature, std::nullopt),
                        state.config.ridge);
    const Scalar va = pair_auc(candidate_stats(state, data, scores, feature, Group::a),
                               state.config.ridge);
    const Scalar vb = pair_auc(candidate_stats(state, data, scores, feature, Group::b),
                               state.config.ridge);
    return phi_a * va + (1.0 - phi_a) * vb;
}

Scalar group_fraction_a(const GroupedColumns& data, const std::vector<Index>& rows) {
    Index n = 0, na = 0;
    if (rows.empty()) {
        n = data.rows();
        for (Index i = 0; i < n; ++i) na += data.group[i] == Group::a;
    } else {
        n = static_cast<Index>(rows.size());
        for (Index i : rows) na += data.group[i] == Group::a;
    }
    return static_cast<Scalar>(na) / static_cast<Scalar>(n);
}

// Max over candidates of the analytic per-round improvement bound for the
// disadvantaged group.
Scalar max_candidate_bound(const AcquisitionState& state, const GroupedColumns& data,
                           const Vec& scores, const std::vector<int>& cands, Group g) {
    Scalar best = 0.0;
    bool have_gamma = false;
    Scalar gamma = 0.0;
    for (int f : cands) {
        ClassStats st;
        try {
            st = candidate_stats(state, data, scores, f, g);
        } catch (const InsufficientSamples&) {
            continue;
        }
        if (!have_gamma) {
            const Scalar s_auc = normal_cdf(std::abs(st.delta_mu()(0)) /
                                            std::sqrt(st.sigma_sum()(0, 0)));
            gamma = 1.0 - s_auc;
            have_gamma = true;
        }
        BoundInputs b;
        b.gamma = gamma;
        b.feature = f;
        if (std::abs(st.delta_mu()(1)) > 0.0) {
            b.beta = beta_of(st);
            b.delta = delta_of(st);
        }
        best = std::max(best, improvement_bound(b));
    }
    return best;
}

int choose_feature(const AcquisitionState& state, const GroupedColumns& data,
                   const Vec& scores, const BiasReport& br, const Strategy& strategy) {
    const std::vector<int> cands = state.candidates(data);
    if (cands.empty()) throw NoViableCandidate("no unacquired candidates remain");

    if (strategy.kind == StrategyKind::Random) {
        Rng rng(mix_seed(state.config.seed, 0x72616e64ull + state.round));
        return cands[rng.uniform_index(cands.size())];
    }

    const Scalar phi_a = group_fraction_a(data, state.config.fit_rows);
    int best = -1;
    Scalar best_value = 0.0;
    for (int f : cands) {
        Scalar value;
        try {
            switch (strategy.kind) {
                case StrategyKind::FairAUC:
                    value = pair_auc(
                        candidate_stats(state, data, scores, f, br.disadvantaged),
                        state.config.ridge);
                    break;
                case StrategyKind::MaxAUC:
                    value = overall_objective(state, data, scores, f, phi_a);
                    break;
                case StrategyKind::MinBias: {
                    const Scalar va = pair_auc(
                        candidate_stats(state, data, scores, f, Group::a),
                        state.config.ridge);
                    const Scalar vb = pair_auc(
                        candidate_stats(state, data, scores, f, Group::b),
                        state.config.ridge);
                    value = -bias(va, vb);  // argmin bias as argmax
                    break;
                }
                case StrategyKind::Weighted: {
                    const Scalar fair = pair_auc(
                        candidate_stats(state, data, scores, f, br.disadvantaged),
                        state.config.ridge);
                    value = strategy.weight * fair +
                            (1.0 - strategy.weight) *
                                overall_objective(state, data, scores, f, phi_a);
                    break;
                }
                case StrategyKind::BiasPenalty: {
                    const Scalar va = pair_auc(
                        candidate_stats(state, data, scores, f, Group::a),
                        state.config.ridge);
                    const Scalar vb = pair_auc(
                        candidate_stats(state, data, scores, f, Group::b),
                        state.config.ridge);
                    value = (1.0 - strategy.weight) *
                                overall_objective(state, data, scores, f, phi_a) -
                            strategy.weight * bias(va, vb);
                    break;
                }
                default:
                    throw std::logic_error("unreachable");
            }
        } catch (const InsufficientSamples&) {
            continue;
        }
        if (best < 0 || value > best_value) {
            best = f;
            best_value = value;
        }
    }
    if (best < 0) throw NoViableCandidate("every candidate failed evaluation");
    return best;
}

Scalar overall_auc(const AcquisitionState& state, const GroupedColumns& data,
                   const Vec& scores) {
    if (state.config.eval_rows.empty()) return empirical_auc(scores, data.label);
    return empirical_auc(scores, data.label, state.config.eval_rows);
}

RoundRecord make_record(const AcquisitionState& state, const GroupedColumns& data,
                        const Vec& scores, const BiasReport& br, int round,
                        std::vector<int> features) {
    RoundRecord rec;
    rec.round = round;
    rec.features = std::move(features);
    rec.auc_a = br.auc_a;
    rec.auc_b = br.auc_b;
    rec.auc_all = overall_auc(state, data, scores);
    rec.bias_value = br.bias_value;
    rec.disadvantaged = br.disadvantaged;
    rec.intervention = br.bias_value > state.config.epsilon;
    return rec;
}

// Noise-scrub the chosen column for the post-acquisition advantaged group
// and return the applied plan.
NoisePlan apply_noise(AcquisitionState& state, GroupedColumns& data,
                      const Vec& scores, int feature) {
    const ClassStats sa = ssr2(data.features[feature], Group::a, scores, data,
                               state.config.fit_rows);
    const ClassStats sb = ssr2(data.features[feature], Group::b, scores, data,
                               state.config.fit_rows);
    const Scalar pa = pair_auc(sa, state.config.ridge);
    const Scalar pb = pair_auc(sb, state.config.ridge);
    // Post-acquisition advantaged group; on an exact tie b is labeled
    // advantaged so that a (the disadvantaged tie-break) keeps the clean
    // feature.
    const Group adv = pa > pb ? Group::a : Group::b;
    const ClassStats& stats_adv = adv == Group::a ? sa : sb;
    const ClassStats& stats_dis = adv == Group::a ? sb : sa;
    const Scalar prior = bias(normal_cdf(std::abs(sa.delta_mu()(0)) /
                                         std::sqrt(sa.sigma_sum()(0, 0))),
                              normal_cdf(std::abs(sb.delta_mu()(0)) /
                                         std::sqrt(sb.sigma_sum()(0, 0))));
    const NoisePlan plan = solve_lambda(stats_adv, stats_dis, adv, prior);

    std::vector<bool> mask(static_cast<std::size_t>(data.rows()));
    for (Index i = 0; i < data.rows(); ++i)
        mask[static_cast<std::size_t>(i)] = data.group[i] == adv;
    Rng rng(mix_seed(state.config.seed, 0x6e6f6973ull + state.round));
    data.features[feature] =
        noisy_feature(data.features[feature], mask, plan.lambda, rng);
    return plan;
}

}  // namespace

BiasReport identify_bias(const AcquisitionState& state, const GroupedColumns& data,
                         const Vec& scores) {
    BiasReport br;
    if (state.config.analytic_bias) {
        const std::vector<int> active = state.active();
        br.auc_a = fld_auc(ssr(data, active, Group::a, state.config.fit_rows),
                           state.config.ridge);
        br.auc_b = fld_auc(ssr(data, active, Group::b, state.config.fit_rows),
                           state.config.ridge);
    } else {
        br.auc_a = empirical_auc(scores, data.label,
                                 group_rows(data, Group::a, state.config.eval_rows));
        br.auc_b = empirical_auc(scores, data.label,
                                 group_rows(data, Group::b, state.config.eval_rows));
    }
    br.bias_value = bias(br.auc_a, br.auc_b);
    br.disadvantaged = br.auc_b < br.auc_a ? Group::b : Group::a;
    return br;
}

std::vector<std::pair<int, Scalar>> evaluate_candidates(const AcquisitionState& state,
                                                        const GroupedColumns& data,
                                                        const Vec& scores, Group g) {
    const std::vector<int> cands = state.candidates(data);
    if (cands.empty()) throw NoViableCandidate("no unacquired candidates remain");
    std::vector<std::pair<int, Scalar>> out;
    for (int f : cands) {
        try {
            out.emplace_back(f, pair_auc(candidate_stats(state, data, scores, f, g),
                                         state.config.ridge));
        } catch (const InsufficientSamples&) {
        }
    }
    if (out.empty()) throw NoViableCandidate("every candidate failed evaluation");
    return out;
}

std::vector<RoundRecord> run(AcquisitionState& state, GroupedColumns& data,
                             const Strategy& strategy, int rounds,
                             const RoundObserver& observer) {
    std::vector<RoundRecord> records;
    ScoringRule rule = fit_rule(state, data);
    Vec scores = score(rule, data, state.active());
    BiasReport br = identify_bias(state, data, scores);
    records.push_back(make_record(state, data, scores, br, 0, {}));
    if (observer) observer(records.back(), scores);

    for (int t = 1; t <= rounds; ++t) {
        if (!(br.bias_value > state.config.epsilon)) break;  // threshold reached
        const int chosen = choose_feature(state, data, scores, br, strategy);
        std::optional<Scalar> bound;
        if (strategy.kind == StrategyKind::FairAUC)
            bound = max_candidate_bound(state, data, scores, state.candidates(data),
                                        br.disadvantaged);
        std::optional<Scalar> lambda;
        if (state.config.noisy) lambda = apply_noise(state, data, scores, chosen).lambda;
        state.acquired.push_back(chosen);
        state.round = t;
        rule = fit_rule(state, data);
        scores = score(rule, data, state.active());
        br = identify_bias(state, data, scores);
        records.push_back(make_record(state, data, scores, br, t, {chosen}));
        records.back().theory_bound = bound;
        records.back().lambda = lambda;
        if (observer) observer(records.back(), scores);
    }
    return records;
}

RoundRecord select_pair_simultaneous(AcquisitionState& state, GroupedColumns& data) {
    ScoringRule rule = fit_rule(state, data);
    Vec scores = score(rule, data, state.active());
    const BiasReport br = identify_bias(state, data, scores);
    const std::vector<int> cands = state.candidates(data);
    if (cands.size() < 2)
        throw NoViableCandidate("pair selection needs at least 2 candidates");

    int best_i = -1, best_j = -1;
    Scalar best_value = 0.0;
    for (std::size_t p = 0; p < cands.size(); ++p)
        for (std::size_t q = p + 1; q < cands.size(); ++q) {
            const ClassStats st =
                stats_of({&scores, &data.features[cands[p]], &data.features[cands[q]]},
                         data, br.disadvantaged, state.config.fit_rows);
            const Scalar value = fld_auc(st, state.config.ridge);
            if (best_i < 0 || value > best_value) {
                best_i = cands[p];
                best_j = cands[q];
                best_value = value;
            }
        }

    state.acquired.push_back(best_i);
    state.acquired.push_back(best_j);
    state.round += 1;
    rule = fit_rule(state, data);
    scores = score(rule, data, state.active());
    const BiasReport after = identify_bias(state, data, scores);
    return make_record(state, data, scores, after, state.round, {best_i, best_j});
}

RoundRecord select_pair_sequential(AcquisitionState& state, GroupedColumns& data) {
    ScoringRule rule = fit_rule(state, data);
    Vec scores = score(rule, data, state.active());
    const BiasReport br = identify_bias(state, data, scores);
    const std::vector<int> cands = state.candidates(data);
    if (cands.size() < 2)
        throw NoViableCandidate("pair selection needs at least 2 candidates");

    Strategy fair;
    const int first = choose_feature(state, data, scores, br, fair);

    // Second pick: least unconditional correlation with the first.
    const Vec& zf = data.features[first];
    const Scalar mf = zf.mean();
    const Scalar sf = std::sqrt((zf.array() - mf).square().sum());
    int second = -1;
    Scalar best_abs = 0.0;
    for (int f : cands) {
        if (f == first) continue;
        const Vec& z = data.features[f];
        const Scalar m = z.mean();
        const Scalar s = std::sqrt((z.array() - m).square().sum());
        const Scalar corr =
            s > 0.0 && sf > 0.0
                ? ((zf.array() - mf) * (z.array() - m)).sum() / (sf * s)
                : 0.0;
        if (second < 0 || std::abs(corr) < best_abs) {
            second = f;
            best_abs = std::abs(corr);
        }
    }

    state.acquired.push_back(first);
    state.acquired.push_back(second);
    state.round += 1;
    rule = fit_rule(state, data);
    scores = score(rule, data, state.active());
    const BiasReport after = identify_bias(state, data, scores);
    return make_record(state, data, scores, after, state.round, {first, second});
}

}  // namespace fairauc
