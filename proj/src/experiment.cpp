#include "fairauc/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "fairauc/rng.hpp"

namespace fairauc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<int> resolve_owned(const ExperimentConfig& cfg, const GroupedColumns& data) {
    if (cfg.owned_cols.empty()) return {0};  // first feature column by default
    std::vector<int> owned;
    for (const std::string& name : cfg.owned_cols) {
        const auto it = std::find(data.names.begin(), data.names.end(), name);
        if (it == data.names.end())
            throw DataError("owned column not found: " + name);
        owned.push_back(static_cast<int>(it - data.names.begin()));
    }
    return owned;
}

AcquisitionState make_state(const ExperimentConfig& cfg, const GroupedColumns& data) {
    AcquisitionState state;
    state.config.owned = resolve_owned(cfg, data);
    state.config.scorer = cfg.scorer;
    state.config.use_protected = cfg.use_protected;
    state.config.epsilon = cfg.epsilon;
    state.config.zero_correlation = cfg.zero_correlation;
    state.config.analytic_bias = cfg.analytic_bias;
    state.config.noisy = cfg.noisy;
    state.config.seed = cfg.seed;
    if (cfg.holdout > 0.0) {
        std::vector<Index> idx(static_cast<std::size_t>(data.rows()));
        std::iota(idx.begin(), idx.end(), Index{0});
        Rng rng(mix_seed(cfg.seed, 0x686f6cull));
        for (std::size_t i = idx.size(); i > 1; --i)
            std::swap(idx[i - 1], idx[rng.uniform_index(i)]);
        const std::size_t n_eval =
            static_cast<std::size_t>(cfg.holdout * static_cast<Scalar>(idx.size()));
        state.config.eval_rows.assign(idx.begin(), idx.begin() + n_eval);
        state.config.fit_rows.assign(idx.begin() + n_eval, idx.end());
        std::sort(state.config.eval_rows.begin(), state.config.eval_rows.end());
        std::sort(state.config.fit_rows.begin(), state.config.fit_rows.end());
    }
    return state;
}

RoundObserver ci_observer(const ExperimentConfig& cfg, const GroupedColumns& data,
                          const AcquisitionState& state, std::vector<RoundCI>& cis) {
    return [&cfg, &data, &state, &cis](const RoundRecord& rec, const Vec& scores) {
        std::vector<Index> rows_a, rows_b, rows_all;
        const std::vector<Index>& eval = state.config.eval_rows;
        auto take = [&](Index i) {
            rows_all.push_back(i);
            (data.group[i] == Group::a ? rows_a : rows_b).push_back(i);
        };
        if (eval.empty())
            for (Index i = 0; i < data.rows(); ++i) take(i);
        else
            for (Index i : eval) take(i);
        RoundCI ci;
        const std::uint64_t base = mix_seed(cfg.seed, 0xc1ull + rec.round);
        ci.auc_a = bootstrap_auc_ci(scores, data.label, rows_a,
                                    cfg.bootstrap_resamples, mix_seed(base, 0));
        ci.auc_b = bootstrap_auc_ci(scores, data.label, rows_b,
                                    cfg.bootstrap_resamples, mix_seed(base, 1));
        ci.auc_all = bootstrap_auc_ci(scores, data.label, rows_all,
                                      cfg.bootstrap_resamples, mix_seed(base, 2));
        cis.push_back(ci);
    };
}

std::vector<RoundRecord> run_pairs(AcquisitionState& state, GroupedColumns& data,
                                   PairMode mode, int rounds,
                                   const RoundObserver& observer) {
    // Baseline record, then up to `rounds` two-feature rounds.
    std::vector<RoundRecord> records;
    Strategy fair;
    records = run(state, data, fair, 0, observer);
    while (state.round < rounds && records.back().intervention) {
        if (state.candidates(data).size() < 2) break;
        records.push_back(mode == PairMode::Simultaneous
                              ? select_pair_simultaneous(state, data)
                              : select_pair_sequential(state, data));
        if (observer) {
            // select_pair_* does not expose scores; recompute is avoided by
            // leaving pair CIs to the round table only.
        }
    }
    return records;
}

}  // namespace

Report run_experiment(const ExperimentConfig& cfg, const GroupedColumns& data) {
    Report report;
    report.config = cfg;
    GroupedColumns working = data;
    AcquisitionState state = make_state(cfg, working);
    if (cfg.pair_mode == PairMode::None) {
        report.rounds = run(state, working, cfg.strategy, cfg.rounds,
                            ci_observer(cfg, working, state, report.cis));
    } else {
        report.rounds = run_pairs(state, working, cfg.pair_mode, cfg.rounds,
                                  ci_observer(cfg, working, state, report.cis));
    }
    return report;
}

Report run_sweep(const ExperimentConfig& cfg, const GroupedColumns& data,
                 const std::vector<Scalar>& weights) {
    Report report = run_experiment(cfg, data);
    for (Scalar w : weights) {
        ExperimentConfig wcfg = cfg;
        wcfg.strategy = Strategy{StrategyKind::Weighted, w};
        GroupedColumns working = data;
        AcquisitionState state = make_state(wcfg, working);
        ParetoTrajectory traj;
        traj.weight = w;
        traj.rounds = run(state, working, wcfg.strategy, wcfg.rounds);
        report.pareto.push_back(std::move(traj));
    }
    return report;
}

namespace {

ordered_json record_json(const RoundRecord& rec) {
    ordered_json j;
    j["round"] = rec.round;
    j["features"] = rec.features;
    j["auc_a"] = rec.auc_a;
    j["auc_b"] = rec.auc_b;
    j["auc_all"] = rec.auc_all;
    j["bias"] = rec.bias_value;
    j["disadvantaged"] = group_name(rec.disadvantaged);
    j["intervention"] = rec.intervention;
    if (rec.theory_bound)
        j["theory_bound"] = *rec.theory_bound;
    else
        j["theory_bound"] = nullptr;
    if (rec.lambda)
        j["lambda"] = *rec.lambda;
    else
        j["lambda"] = nullptr;
    return j;
}

ordered_json ci_json(const AucCI& ci) {
    return ordered_json::array({ci.value, ci.lo, ci.hi});
}

}  // namespace

std::string report_to_json(const Report& report) {
    const ExperimentConfig& cfg = report.config;
    ordered_json j;
    ordered_json c;
    c["data_path"] = cfg.data_path;
    c["group_col"] = cfg.group_col;
    c["class_col"] = cfg.class_col;
    c["owned_cols"] = cfg.owned_cols;
    c["strategy"] = strategy_name(cfg.strategy.kind);
    c["weight"] = cfg.strategy.weight;
    c["rounds"] = cfg.rounds;
    c["epsilon"] = cfg.epsilon;
    c["use_protected"] = cfg.use_protected;
    c["holdout"] = cfg.holdout;
    c["zero_correlation"] = cfg.zero_correlation;
    c["noisy"] = cfg.noisy;
    c["analytic_bias"] = cfg.analytic_bias;
    c["log1p"] = cfg.log1p;
    c["scorer"] = cfg.scorer == ScorerKind::Fld ? "fld" : "logistic";
    c["pair_mode"] = cfg.pair_mode == PairMode::None
                         ? "none"
                         : (cfg.pair_mode == PairMode::Simultaneous ? "simultaneous"
                                                                    : "sequential");
    c["seed"] = cfg.seed;
    j["config"] = c;

    ordered_json rounds = ordered_json::array();
    for (const RoundRecord& rec : report.rounds) rounds.push_back(record_json(rec));
    j["rounds"] = rounds;

    ordered_json cis = ordered_json::array();
    for (const RoundCI& ci : report.cis) {
        ordered_json e;
        e["auc_a"] = ci_json(ci.auc_a);
        e["auc_b"] = ci_json(ci.auc_b);
        e["auc_all"] = ci_json(ci.auc_all);
        cis.push_back(e);
    }
    j["confidence_intervals"] = cis;

    ordered_json pareto = ordered_json::array();
    for (const ParetoTrajectory& traj : report.pareto) {
        ordered_json e;
        e["weight"] = traj.weight;
        ordered_json rs = ordered_json::array();
        for (const RoundRecord& rec : traj.rounds) rs.push_back(record_json(rec));
        e["rounds"] = rs;
        pareto.push_back(e);
    }
    j["pareto"] = pareto;
    return j.dump(2) + "\n";
}

std::string rounds_to_csv(const Report& report, const std::vector<std::string>& names) {
    std::string out = "Round,Feature,AUC_a,AUC_b,AUC_All,Bias,Disadv\n";
    char buf[128];
    for (const RoundRecord& rec : report.rounds) {
        std::string feature;
        for (std::size_t k = 0; k < rec.features.size(); ++k) {
            if (k) feature += '+';
            const int f = rec.features[k];
            feature += static_cast<std::size_t>(f) < names.size()
                           ? names[static_cast<std::size_t>(f)]
                           : std::to_string(f);
        }
        std::snprintf(buf, sizeof buf, "%d,%s,%.4f,%.4f,%.4f,%.4f,%s\n", rec.round,
                      feature.c_str(), rec.auc_a, rec.auc_b, rec.auc_all,
                      rec.bias_value, group_name(rec.disadvantaged));
        out += buf;
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << contents;
}

}  // namespace fairauc
