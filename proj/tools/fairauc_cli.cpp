#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairauc/analytic.hpp"
#include "fairauc/csv.hpp"
#include "fairauc/datagen.hpp"
#include "fairauc/experiment.hpp"

namespace {

using namespace fairauc;

std::uint64_t env_seed() {
    if (const char* s = std::getenv("FAIRAUC_SEED"))
        return std::strtoull(s, nullptr, 10);
    return 0;
}

Strategy parse_strategy(const std::string& name, Scalar weight) {
    if (name == "fairauc") return {StrategyKind::FairAUC, weight};
    if (name == "maxauc") return {StrategyKind::MaxAUC, weight};
    if (name == "minbias") return {StrategyKind::MinBias, weight};
    if (name == "random") return {StrategyKind::Random, weight};
    if (name == "weighted") return {StrategyKind::Weighted, weight};
    if (name == "biaspenalty") return {StrategyKind::BiasPenalty, weight};
    throw CLI::ValidationError("strategy", "unknown strategy: " + name);
}

int cmd_synth(const std::string& kind, const std::string& out, std::uint64_t seed,
              GuyonConfig guyon) {
    GroupedColumns data;
    if (kind == "guyon") {
        guyon.seed = seed;
        data = gen_guyon(guyon).data;
    } else if (kind == "gamma1" || kind == "gamma2") {
        GammaConfig cfg = kind == "gamma1" ? gamma_dataset1() : gamma_dataset2();
        cfg.seed = seed;
        cfg.n = guyon.n;
        data = gen_gamma(cfg);
    } else {
        throw CLI::ValidationError("kind", "unknown dataset kind: " + kind);
    }
    write_dataset_csv(data, out);
    return 0;
}

int cmd_acquire(const ExperimentConfig& cfg, const std::string& out_json,
                const std::string& out_csv, const std::vector<Scalar>& sweep_weights,
                bool sweep) {
    const GroupedColumns data =
        ingest(cfg.data_path, cfg.group_col, cfg.class_col, IngestOptions{cfg.log1p});
    const Report report =
        sweep ? run_sweep(cfg, data, sweep_weights) : run_experiment(cfg, data);
    if (!out_json.empty()) write_file(out_json, report_to_json(report));
    if (!out_csv.empty()) write_file(out_csv, rounds_to_csv(report, data.names));
    if (out_json.empty() && out_csv.empty())
        std::fputs(report_to_json(report).c_str(), stdout);
    return 0;
}

int cmd_verify(int instances, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x76657269ull));
    Scalar worst_candidate = 1.0, worst_selected = 1.0, worst_adv = 1.0;
    int violations = 0;
    for (int i = 0; i < instances; ++i) {
        const int d = 1 + static_cast<int>(rng.uniform_index(5));
        const AnalyticInstance inst = random_instance(d, 10, rng);
        const AnalyticRound round = analyze_round(inst);
        const RoundReport report = verify_round(
            round.auc_disadv_before, round.checks, round.selected,
            round.adv_improvement, round.adv_inputs);
        if (!report.ok) {
            ++violations;
            std::fprintf(stderr, "error: numeric: %s\n", report.detail.c_str());
        }
        for (const CandidateCheck& c : round.checks)
            worst_candidate = std::min(worst_candidate, c.margin);
        worst_selected = std::min(worst_selected, report.disadv_margin);
        worst_adv = std::min(worst_adv, report.adv_margin);
    }
    const LemmaReport lemmas = lemma_checks();
    std::printf("instances checked: %d\n", instances);
    std::printf("min candidate margin: %.6e\n", worst_candidate);
    std::printf("min selected-feature margin: %.6e\n", worst_selected);
    std::printf("min advantaged-group margin: %.6e\n", worst_adv);
    std::printf("lemma grid points: %ld + %ld, min margins: %.6e, %.6e\n",
                lemmas.points_invert, lemmas.points_change, lemmas.invert_min_margin,
                lemmas.change_min_margin);
    if (!lemmas.ok) {
        std::fprintf(stderr, "error: numeric: %s\n", lemmas.detail.c_str());
        return 2;
    }
    return violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fairness-aware feature acquisition toolkit"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic dataset CSV");
    std::string synth_kind = "guyon", synth_out = "data.csv";
    GuyonConfig guyon;
    std::uint64_t synth_seed = env_seed();
    synth->add_option("--kind", synth_kind, "guyon | gamma1 | gamma2");
    synth->add_option("--out", synth_out, "output CSV path")->required();
    synth->add_option("--seed", synth_seed, "rng seed");
    synth->add_option("--n", guyon.n, "rows");
    synth->add_option("--features", guyon.n_features, "total features (guyon)");
    synth->add_option("--informative", guyon.n_informative, "informative features (guyon)");
    synth->add_option("--group-a-frac", guyon.group_a_fraction, "group a fraction (guyon)");
    synth->add_option("--base-rate", guyon.base_rate, "positive-class rate (guyon)");
    synth->add_option("--separation", guyon.separation, "class-mean gap (guyon)");

    // shared acquire/sweep options
    ExperimentConfig cfg;
    cfg.seed = env_seed();
    std::string strategy_name_opt = "fairauc", scorer_name = "fld",
                pair_name = "none", out_json, out_csv;
    Scalar weight = 1.0;
    std::vector<Scalar> weights = {0.0, 0.25, 0.5, 0.75, 1.0};
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--data", cfg.data_path, "input CSV")->required();
        cmd->add_option("--group-col", cfg.group_col, "protected-group column");
        cmd->add_option("--class-col", cfg.class_col, "binary class column");
        cmd->add_option("--owned", cfg.owned_cols,
                        "owned feature columns (rest are candidates)")
            ->delimiter(',');
        cmd->add_option("--rounds", cfg.rounds, "acquisition rounds");
        cmd->add_option("--epsilon", cfg.epsilon, "acceptable bias");
        cmd->add_option("--holdout", cfg.holdout, "evaluation fraction");
        cmd->add_option("--scorer", scorer_name, "fld | logistic");
        cmd->add_flag("--use-protected,!--no-use-protected", cfg.use_protected,
                      "fit per-group models");
        cmd->add_flag("--zero-correlation", cfg.zero_correlation,
                      "ignore score-candidate correlations");
        cmd->add_flag("--analytic-bias", cfg.analytic_bias,
                      "identify bias from analytic AUCs");
        cmd->add_flag("--log1p", cfg.log1p, "log1p numeric columns");
        cmd->add_option("--seed", cfg.seed, "rng seed");
        cmd->add_option("--out", out_json, "report JSON path");
        cmd->add_option("--csv-out", out_csv, "round-table CSV path");
    };

    auto* acquire = app.add_subcommand("acquire", "run a feature-acquisition experiment");
    add_common(acquire);
    acquire->add_option("--strategy", strategy_name_opt,
                        "fairauc | maxauc | minbias | random | weighted | biaspenalty");
    acquire->add_option("--weight", weight, "weighted/biaspenalty mixing weight");
    acquire->add_flag("--noisy", cfg.noisy, "noise-scrub acquisitions");
    acquire->add_option("--pairs", pair_name, "none | simultaneous | sequential");

    auto* sweep = app.add_subcommand("sweep", "Pareto sweep over weighted strategies");
    add_common(sweep);
    sweep->add_option("--weights", weights, "weights to sweep")->delimiter(',');

    auto* verify = app.add_subcommand("verify",
                                      "check improvement bounds and lemma grids");
    int instances = 100;
    std::uint64_t verify_seed = env_seed();
    verify->add_option("--instances", instances, "analytic instances to check");
    verify->add_option("--seed", verify_seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) return cmd_synth(synth_kind, synth_out, synth_seed, guyon);
        cfg.scorer = scorer_name == "logistic" ? ScorerKind::Logistic : ScorerKind::Fld;
        cfg.pair_mode = pair_name == "simultaneous"
                            ? PairMode::Simultaneous
                            : (pair_name == "sequential" ? PairMode::Sequential
                                                         : PairMode::None);
        if (acquire->parsed()) {
            cfg.strategy = parse_strategy(strategy_name_opt, weight);
            return cmd_acquire(cfg, out_json, out_csv, {}, false);
        }
        if (sweep->parsed()) {
            cfg.strategy = parse_strategy(strategy_name_opt, weight);
            return cmd_acquire(cfg, out_json, out_csv, weights, true);
        }
        if (verify->parsed()) return cmd_verify(instances, verify_seed);
    } catch (const DataError& e) {
        std::fprintf(stderr, "error: data: %s\n", e.what());
        return 1;
    } catch (const InsufficientSamples& e) {
        std::fprintf(stderr, "error: data: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: numeric: %s\n", e.what());
        return 2;
    }
    return 0;
}
