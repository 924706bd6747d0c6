#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "matchmanip/deferred_acceptance.hpp"
#include "matchmanip/profile.hpp"

namespace matchmanip {

enum class ExperimentKind { FreqSingle, FreqAll, RankSingle, RankAll, PushupSize };

std::string_view kind_name(ExperimentKind kind);
/// Accepts the names printed by kind_name ("freq-single", ...).
ExperimentKind parse_kind(std::string_view text);

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::FreqSingle;
    std::vector<int> n_values;
    int trials = 1;
    std::uint64_t master_seed = 1;
    std::filesystem::path output_path;
    int threads = 1;

    /// Throws ValidationError on trials < 1, empty or non-ascending n_values,
    /// n < 1, or threads < 1.
    void validate() const;
};

/// Seed of trial `trial` at size n; depends on nothing else.
std::uint64_t trial_seed(std::uint64_t master_seed, int n, int trial);

/// Each list is an independent std::shuffle of 0..n-1 driven by a
/// std::mt19937_64 seeded from (seed, side, agent index).
Profile random_profile(int n, std::uint64_t seed);

inline constexpr const char* kPrngName = "std::mt19937_64 + std::shuffle (libstdc++), splitmix64 seed derivation";
inline constexpr const char* kWomanBaselineSearch = "single-promotion misreports of each woman";

// Per-trial evaluations, exposed so tests can compare them with oracles.

struct FreqSingleTrial {
    bool pair = false;        // some man m and w jointly improve w
    bool accomplice = false;  // some man alone improves w without regret
    bool self = false;        // w alone improves herself
};
FreqSingleTrial evaluate_freq_single(const Profile& profile, int w, DaKernel& kernel);

struct FreqAllTrial {
    bool man_side = false;    // some man's no-regret push-up Pareto-improves the women
    bool woman_side = false;  // some woman's single promotion Pareto-improves the women
};
FreqAllTrial evaluate_freq_all(const Profile& profile, DaKernel& kernel);

/// Best improvement in w's true rank, maximised over all men where relevant.
struct RankSingleTrial {
    int pair = 0;
    int accomplice = 0;
    int self = 0;
};
RankSingleTrial evaluate_rank_single(const Profile& profile, int w);

/// Largest total improvement in women's true ranks.
struct RankAllTrial {
    int man_side = 0;    // over men, of the optimal one-for-all push-up
    int woman_side = 0;  // over women's single promotions that Pareto-improve the women
};
RankAllTrial evaluate_rank_all(const Profile& profile, DaKernel& kernel);

/// Box-plot summary with linear-interpolation quartiles and the 1.5 IQR rule.
struct BoxStats {
    int count = 0;
    double q1 = 0, median = 0, q3 = 0;
    double whisker_low = 0, whisker_high = 0;
    int outliers_low = 0, outliers_high = 0;
};
BoxStats box_stats(std::vector<double> values);

struct CsvRow {
    std::string kind;
    int n = 0;
    std::string trial_or_aggregate;  // trial index, or an aggregate name
    std::string mode;
    double value = 0;
};

struct ExperimentResult {
    std::vector<CsvRow> rows;
    std::string csv() const;
};

ExperimentResult run_frequency_single(const ExperimentConfig& config);
ExperimentResult run_frequency_all(const ExperimentConfig& config);
ExperimentResult run_rank_improvements(const ExperimentConfig& config);
ExperimentResult run_pushup_sizes(const ExperimentConfig& config);
ExperimentResult run_experiment(const ExperimentConfig& config);

nlohmann::json experiment_metadata(const ExperimentConfig& config, double wall_seconds);

/// Runs the experiment and writes the CSV to config.output_path and the
/// metadata to "<output_path>.meta.json". Throws std::runtime_error naming the
/// path on I/O failure.
ExperimentResult run_and_write(const ExperimentConfig& config);

}  // namespace matchmanip
