#include "matchmanip/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "matchmanip/one_for_all.hpp"
#include "matchmanip/one_for_one.hpp"
#include "matchmanip/surgery.hpp"
#include "matchmanip/two_for_one.hpp"

#ifndef MATCHMANIP_VERSION
#define MATCHMANIP_VERSION "unknown"
#endif

namespace matchmanip {

namespace {

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 5> kKindNames{{
    {ExperimentKind::FreqSingle, "freq-single"},
    {ExperimentKind::FreqAll, "freq-all"},
    {ExperimentKind::RankSingle, "rank-single"},
    {ExperimentKind::RankAll, "rank-all"},
    {ExperimentKind::PushupSize, "pushup-size"},
}};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Single-target experiments follow the first woman and the first man.
constexpr int kTarget = 0;

}  // namespace

std::string_view kind_name(ExperimentKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "unknown";
}

ExperimentKind parse_kind(std::string_view text) {
    for (const auto& [k, name] : kKindNames)
        if (name == text) return k;
    throw ValidationError("unknown experiment kind '" + std::string(text) +
                          "' (expected freq-single, freq-all, rank-single, rank-all or pushup-size)");
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw ValidationError("trials must be >= 1, got " + std::to_string(trials));
    if (n_values.empty()) throw ValidationError("n_values must not be empty");
    if (!std::is_sorted(n_values.begin(), n_values.end()) ||
        std::adjacent_find(n_values.begin(), n_values.end()) != n_values.end())
        throw ValidationError("n_values must be strictly ascending");
    if (n_values.front() < 1) throw ValidationError("n must be >= 1, got " + std::to_string(n_values.front()));
    if (threads < 1) throw ValidationError("threads must be >= 1, got " + std::to_string(threads));
}

std::uint64_t trial_seed(std::uint64_t master_seed, int n, int trial) {
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    return splitmix64(h ^ (static_cast<std::uint64_t>(trial) << 20));
}

Profile random_profile(int n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("random_profile requires n >= 1");
    auto draw = [&](int side, int agent) {
        const std::uint64_t tag = (static_cast<std::uint64_t>(side) << 32) | static_cast<std::uint32_t>(agent);
        std::mt19937_64 rng(seed ^ splitmix64(tag));
        PreferenceList list(static_cast<size_t>(n));
        std::iota(list.begin(), list.end(), 0);
        std::shuffle(list.begin(), list.end(), rng);
        return list;
    };
    std::vector<PreferenceList> men, women;
    for (int i = 0; i < n; ++i) men.push_back(draw(0, i));
    for (int i = 0; i < n; ++i) women.push_back(draw(1, i));
    return Profile(std::move(men), std::move(women));
}

FreqSingleTrial evaluate_freq_single(const Profile& profile, int w, DaKernel& kernel) {
    FreqSingleTrial t;
    const int n = profile.size();
    t.self = optimal_self_manipulation(profile, w).improved;
    for (int m = 0; m < n && !t.accomplice; ++m) t.accomplice = optimal_accomplice_manipulation(profile, m, w).improved;
    for (int m = 0; m < n && !t.pair; ++m) t.pair = pair_manipulable(profile, m, w, kernel);
    return t;
}

namespace {

// Calls visit(total improvement) for every single promotion of every woman
// that Pareto-improves the women.
template <class Visit>
void for_each_woman_pareto_promotion(const Profile& profile, DaKernel& kernel, const Matching& truthful, Visit visit) {
    const int n = profile.size();
    std::vector<int> ranks(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto list = profile.woman_list(v);
        for (int man = 0; man < n; ++man) {
            const int from = profile.woman_rank(v, man);
            for (int pos = 0; pos < from; ++pos) {
                const auto candidate = promote(list, man, pos);
                for (int i = 0; i < n; ++i) ranks[static_cast<size_t>(candidate[static_cast<size_t>(i)])] = i;
                kernel.run(profile, {.woman = v, .woman_ranks = ranks});
                const auto husbands = kernel.husbands();
                int total = 0;
                bool weakly = true;
                for (int w = 0; w < n && weakly; ++w) {
                    const int d = profile.woman_rank(w, truthful.husband_of(w)) -
                                  profile.woman_rank(w, husbands[static_cast<size_t>(w)]);
                    weakly = d >= 0;
                    total += d;
                }
                if (weakly && total > 0 && visit(total)) return;
            }
        }
    }
}

}  // namespace

FreqAllTrial evaluate_freq_all(const Profile& profile, DaKernel& kernel) {
    FreqAllTrial t;
    const int n = profile.size();
    for (int m = 0; m < n && !t.man_side; ++m) {
        const auto out = optimal_one_for_all(profile, m);
        t.man_side = pareto_improves_women(profile, out.matching, out.truthful);
    }
    const Matching truthful = kernel.run_matching(profile);
    for_each_woman_pareto_promotion(profile, kernel, truthful, [&](int) { return t.woman_side = true; });
    return t;
}

RankSingleTrial evaluate_rank_single(const Profile& profile, int w) {
    RankSingleTrial t;
    const int n = profile.size();
    t.self = optimal_self_manipulation(profile, w).beneficiary_delta;
    for (int m = 0; m < n; ++m) {
        t.accomplice = std::max(t.accomplice, optimal_accomplice_manipulation(profile, m, w).beneficiary_delta);
        t.pair = std::max(t.pair, optimal_pair_manipulation(profile, m, w).w_rank_delta);
    }
    return t;
}

RankAllTrial evaluate_rank_all(const Profile& profile, DaKernel& kernel) {
    RankAllTrial t;
    const int n = profile.size();
    for (int m = 0; m < n; ++m) {
        const auto out = optimal_one_for_all(profile, m);
        if (!pareto_improves_women(profile, out.matching, out.truthful)) continue;
        t.man_side = std::max(t.man_side, std::accumulate(out.women_deltas.begin(), out.women_deltas.end(), 0));
    }
    const Matching truthful = kernel.run_matching(profile);
    for_each_woman_pareto_promotion(profile, kernel, truthful, [&](int total) {
        t.woman_side = std::max(t.woman_side, total);
        return false;
    });
    return t;
}

BoxStats box_stats(std::vector<double> values) {
    BoxStats s;
    s.count = static_cast<int>(values.size());
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const auto lo = static_cast<size_t>(std::floor(pos));
        const size_t hi = std::min(lo + 1, values.size() - 1);
        return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
    };
    s.q1 = quantile(0.25);
    s.median = quantile(0.5);
    s.q3 = quantile(0.75);
    const double iqr = s.q3 - s.q1;
    const double lo_fence = s.q1 - 1.5 * iqr, hi_fence = s.q3 + 1.5 * iqr;
    s.whisker_low = s.q1;
    s.whisker_high = s.q3;
    for (double v : values) {
        if (v < lo_fence) {
            ++s.outliers_low;
        } else if (v > hi_fence) {
            ++s.outliers_high;
        } else {
            s.whisker_low = std::min(s.whisker_low, v);
            s.whisker_high = std::max(s.whisker_high, v);
        }
    }
    return s;
}

std::string ExperimentResult::csv() const {
    std::string out = "kind,n,trial_or_aggregate,mode,value\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.value);
        out += r.kind + ',' + std::to_string(r.n) + ',' + r.trial_or_aggregate + ',' + r.mode + ',' + buf + '\n';
    }
    return out;
}

namespace {

// Evaluates every trial of one n, in parallel, into an index-ordered vector.
template <class T, class Eval>
std::vector<T> run_trials(const ExperimentConfig& config, int n, Eval eval) {
    std::vector<T> results(static_cast<size_t>(config.trials));
#pragma omp parallel num_threads(config.threads)
    {
        DaKernel kernel;
#pragma omp for schedule(dynamic, 1)
        for (int t = 0; t < config.trials; ++t) {
            const Profile p = random_profile(n, trial_seed(config.master_seed, n, t));
            results[static_cast<size_t>(t)] = eval(p, kernel);
        }
    }
    return results;
}

struct Emitter {
    std::string kind;
    std::vector<CsvRow>& rows;
    void trial(int n, int t, std::string mode, double v) { rows.push_back({kind, n, std::to_string(t), std::move(mode), v}); }
    void aggregate(int n, std::string name, std::string mode, double v) {
        rows.push_back({kind, n, std::move(name), std::move(mode), v});
    }
    void box(int n, const std::string& mode, const std::vector<double>& values) {
        const BoxStats s = box_stats(values);
        aggregate(n, "count", mode, s.count);
        if (s.count == 0) return;
        aggregate(n, "q1", mode, s.q1);
        aggregate(n, "median", mode, s.median);
        aggregate(n, "q3", mode, s.q3);
        aggregate(n, "whisker_low", mode, s.whisker_low);
        aggregate(n, "whisker_high", mode, s.whisker_high);
        aggregate(n, "outliers_low", mode, s.outliers_low);
        aggregate(n, "outliers_high", mode, s.outliers_high);
    }
};

void check_kind(const ExperimentConfig& config, ExperimentKind expected) {
    config.validate();
    if (config.kind != expected) throw ValidationError("experiment kind mismatch");
}

}  // namespace

ExperimentResult run_frequency_single(const ExperimentConfig& config) {
    check_kind(config, ExperimentKind::FreqSingle);
    ExperimentResult res;
    Emitter e{std::string(kind_name(config.kind)), res.rows};
    for (int n : config.n_values) {
        const auto trials = run_trials<FreqSingleTrial>(
            config, n, [](const Profile& p, DaKernel& k) { return evaluate_freq_single(p, kTarget, k); });
        int pair = 0, accomplice = 0, self = 0;
        for (int t = 0; t < config.trials; ++t) {
            const auto& r = trials[static_cast<size_t>(t)];
            e.trial(n, t, "pair", r.pair);
            e.trial(n, t, "accomplice", r.accomplice);
            e.trial(n, t, "self", r.self);
            pair += r.pair;
            accomplice += r.accomplice;
            self += r.self;
        }
        const double k = config.trials;
        e.aggregate(n, "fraction", "pair", pair / k);
        e.aggregate(n, "fraction", "accomplice", accomplice / k);
        e.aggregate(n, "fraction", "self", self / k);
    }
    return res;
}

ExperimentResult run_frequency_all(const ExperimentConfig& config) {
    check_kind(config, ExperimentKind::FreqAll);
    ExperimentResult res;
    Emitter e{std::string(kind_name(config.kind)), res.rows};
    for (int n : config.n_values) {
        const auto trials = run_trials<FreqAllTrial>(
            config, n, [](const Profile& p, DaKernel& k) { return evaluate_freq_all(p, k); });
        int man = 0, woman = 0;
        for (int t = 0; t < config.trials; ++t) {
            const auto& r = trials[static_cast<size_t>(t)];
            e.trial(n, t, "man-side", r.man_side);
            e.trial(n, t, "woman-side", r.woman_side);
            man += r.man_side;
            woman += r.woman_side;
        }
        const double k = config.trials;
        e.aggregate(n, "fraction", "man-side", man / k);
        e.aggregate(n, "fraction", "woman-side", woman / k);
    }
    return res;
}

ExperimentResult run_rank_improvements(const ExperimentConfig& config) {
    config.validate();
    if (config.kind != ExperimentKind::RankSingle && config.kind != ExperimentKind::RankAll)
        throw ValidationError("experiment kind mismatch");
    ExperimentResult res;
    Emitter e{std::string(kind_name(config.kind)), res.rows};
    for (int n : config.n_values) {
        std::vector<std::pair<std::string, std::vector<int>>> modes;
        if (config.kind == ExperimentKind::RankSingle) {
            const auto trials = run_trials<RankSingleTrial>(
                config, n, [](const Profile& p, DaKernel&) { return evaluate_rank_single(p, kTarget); });
            modes = {{"pair", {}}, {"accomplice", {}}, {"self", {}}};
            for (const auto& r : trials) {
                modes[0].second.push_back(r.pair);
                modes[1].second.push_back(r.accomplice);
                modes[2].second.push_back(r.self);
            }
        } else {
            const auto trials = run_trials<RankAllTrial>(
                config, n, [](const Profile& p, DaKernel& k) { return evaluate_rank_all(p, k); });
            modes = {{"man-side", {}}, {"woman-side", {}}};
            for (const auto& r : trials) {
                modes[0].second.push_back(r.man_side);
                modes[1].second.push_back(r.woman_side);
            }
        }
        // Only instances where the mode beats truth-telling enter its distribution.
        for (int t = 0; t < config.trials; ++t)
            for (const auto& [mode, values] : modes)
                if (values[static_cast<size_t>(t)] > 0) e.trial(n, t, mode, values[static_cast<size_t>(t)]);
        for (const auto& [mode, values] : modes) {
            std::vector<double> kept;
            for (int v : values)
                if (v > 0) kept.push_back(v);
            e.box(n, mode, kept);
        }
    }
    return res;
}

ExperimentResult run_pushup_sizes(const ExperimentConfig& config) {
    check_kind(config, ExperimentKind::PushupSize);
    ExperimentResult res;
    Emitter e{std::string(kind_name(config.kind)), res.rows};
    for (int n : config.n_values) {
        const auto sizes = run_trials<int>(config, n, [](const Profile& p, DaKernel&) {
            return static_cast<int>(minimum_push_up_set(p, kTarget).pushed.size());
        });
        const int largest = *std::max_element(sizes.begin(), sizes.end());
        std::vector<int> hist(static_cast<size_t>(largest) + 1, 0);
        for (int t = 0; t < config.trials; ++t) {
            e.trial(n, t, "size", sizes[static_cast<size_t>(t)]);
            ++hist[static_cast<size_t>(sizes[static_cast<size_t>(t)])];
        }
        for (size_t k = 0; k < hist.size(); ++k) e.aggregate(n, "count", "size=" + std::to_string(k), hist[k]);
        for (size_t k = 0; k < hist.size(); ++k)
            e.aggregate(n, "fraction", "size=" + std::to_string(k), hist[k] / static_cast<double>(config.trials));
    }
    return res;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    switch (config.kind) {
        case ExperimentKind::FreqSingle: return run_frequency_single(config);
        case ExperimentKind::FreqAll: return run_frequency_all(config);
        case ExperimentKind::RankSingle:
        case ExperimentKind::RankAll: return run_rank_improvements(config);
        case ExperimentKind::PushupSize: return run_pushup_sizes(config);
    }
    throw ValidationError("unknown experiment kind");
}

nlohmann::json experiment_metadata(const ExperimentConfig& config, double wall_seconds) {
    nlohmann::json j;
    j["config"] = {{"kind", kind_name(config.kind)},
                   {"n_values", config.n_values},
                   {"trials", config.trials},
                   {"master_seed", config.master_seed},
                   {"output_path", config.output_path.string()},
                   {"threads", config.threads}};
    j["prng"] = kPrngName;
    j["version"] = MATCHMANIP_VERSION;
    j["wall_seconds"] = wall_seconds;
    if (config.kind == ExperimentKind::FreqSingle || config.kind == ExperimentKind::RankSingle)
        j["target_woman"] = "w1";
    if (config.kind == ExperimentKind::FreqAll || config.kind == ExperimentKind::RankAll)
        j["woman_side_search"] = kWomanBaselineSearch;
    if (config.kind == ExperimentKind::PushupSize) j["accomplice"] = "m1";
    if (config.kind == ExperimentKind::RankSingle || config.kind == ExperimentKind::RankAll)
        j["filtering"] = "per mode, only instances with a strictly positive improvement";
    return j;
}

ExperimentResult run_and_write(const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentResult res = run_experiment(config);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    auto write = [](const std::filesystem::path& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
        out << text;
        if (!out.flush()) throw std::runtime_error("failed writing '" + path.string() + "'");
    };
    write(config.output_path, res.csv());
    auto meta = config.output_path;
    meta += ".meta.json";
    write(meta, experiment_metadata(config, wall).dump(2) + "\n");
    return res;
}

}  // namespace matchmanip
