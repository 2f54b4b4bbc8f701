#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ippg/harness.hpp"
#include "ippg/packager.hpp"
#include "ippg/providers.hpp"
#include "ippg/trial_store.hpp"

namespace ippg::sweeps {

// The rendering-ablation grid: every (font, color, size) combination of the
// three five-value axes, in lexicographic (font, color, size) order. The
// standard grid is exactly 125 configs.
struct AblationGrid {
    std::vector<packager::FontFamily> fonts;
    std::vector<packager::TextColor> colors;
    std::vector<int> sizes_pt;
    std::vector<packager::RenderConfig> configs;

    static AblationGrid standard();
    static AblationGrid from_axes(std::vector<packager::FontFamily> fonts,
                                  std::vector<packager::TextColor> colors,
                                  std::vector<int> sizes_pt);

    // Grid-order rank of a config id; used for deterministic ordering and
    // tie-breaks. Throws ErrorCode::MissingConfig for foreign ids.
    size_t rank_of(const std::string& config_id) const;
};

struct SweepOptions {
    std::filesystem::path store_path;
    uint64_t seed = 0;
    int max_in_flight = 4;
    // Test hook: stop cleanly after persisting this many new trials, as a
    // deterministic stand-in for a mid-run kill.
    std::optional<size_t> max_new_trials;
    std::optional<std::filesystem::path> transcript_path;
};

struct SweepOutcome {
    size_t executed = 0;       // trials run and persisted this invocation
    size_t skipped = 0;        // trials already present in the store
    size_t remaining = 0;      // trials left unexecuted (budget stop)
    size_t errored_trials = 0; // executed trials that ended in Errored
};

// Runs one baseline trial per sample plus one packaging trial per
// (sample, config), in a fixed deterministic order, persisting every trial
// before the next begins. Already-persisted (sample, config, mode) keys are
// skipped, so an interrupted sweep resumes with exactly the missing trials.
// Per-trial failures are recorded as Errored trials and never abort the
// sweep.
SweepOutcome run_sweep(const std::vector<harness::Sample>& samples,
                       const providers::ProviderProfile& profile, const AblationGrid& grid,
                       providers::LlmClient& client, const harness::JudgeRule& judge_rule,
                       const SweepOptions& options);

// Accuracy/cost aggregate for one arm (the baseline, or one config).
struct ArmSummary {
    double accuracy = 0.0;  // correct / all trials; errored count against it
    Money mean_cost;        // over all trials, errored included
    size_t trials = 0;
    size_t errored = 0;
};

ArmSummary aggregate_arm(const std::vector<TrialResult>& trials);

struct ConfigSummary {
    packager::RenderConfig config;
    std::string config_id;
    double accuracy = 0.0;
    Money mean_cost;
    double delta_acc_pp = 0.0;  // accuracy - baseline accuracy, in points
    double saved_pct = 0.0;     // savings_pct(baseline mean, config mean)
    size_t trials = 0;
    size_t errored = 0;
};

// Per-config summaries relative to the shared baseline trials, in grid
// order. When expected_grid is given, every grid config must have at least
// one trial (ErrorCode::MissingConfig otherwise).
std::vector<ConfigSummary> summarize(const std::vector<TrialResult>& ippg_trials,
                                     const std::vector<TrialResult>& baseline_trials,
                                     const AblationGrid* expected_grid = nullptr);

// All summaries not dominated under (accuracy up, cost down); exact ties on
// both axes are all retained.
std::vector<ConfigSummary> pareto_frontier(const std::vector<ConfigSummary>& summaries);

struct BestCriterion {
    enum class Kind { BestAccuracy, BestEfficiency };

    Kind kind = Kind::BestAccuracy;
    double min_accuracy_floor = 0.0;  // BestEfficiency only

    static BestCriterion best_accuracy() { return {Kind::BestAccuracy, 0.0}; }
    static BestCriterion best_efficiency(double min_accuracy_floor) {
        return {Kind::BestEfficiency, min_accuracy_floor};
    }
};

// BestAccuracy: highest accuracy, ties to higher saved_pct, then first in
// grid order. BestEfficiency: highest saved_pct among summaries meeting the
// accuracy floor (ErrorCode::NoFeasibleConfig when none does), same final
// tie-break.
ConfigSummary select_best(const std::vector<ConfigSummary>& summaries,
                          const BestCriterion& criterion, const AblationGrid& grid);

// Declarative sweep description (JSON file): dataset path, profile name or
// file, optional grid-axis overrides, seed, concurrency cap, output dir.
struct SweepManifest {
    std::filesystem::path dataset;
    std::string profile;
    std::optional<std::vector<std::string>> fonts;
    std::optional<std::vector<std::string>> colors;
    std::optional<std::vector<int>> sizes_pt;
    uint64_t seed = 0;
    int max_in_flight = 4;
    std::filesystem::path out_dir;
};

SweepManifest load_manifest(const std::filesystem::path& path);
AblationGrid grid_from_manifest(const SweepManifest& manifest);

// CSV export, percentages at one decimal place, costs at six.
std::string summaries_to_csv(const std::vector<ConfigSummary>& summaries,
                             const ArmSummary& baseline);
std::string best_to_csv(const ConfigSummary& best_accuracy, const ConfigSummary& best_efficiency);

}  // namespace ippg::sweeps
