#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "matchmanip/experiments.hpp"
#include "matchmanip/one_for_all.hpp"
#include "matchmanip/oracle.hpp"
#include "matchmanip/profile_io.hpp"
#include "support.hpp"

using namespace matchmanip;

namespace {

ExperimentConfig config(ExperimentKind kind, std::vector<int> ns, int trials, int threads = 1) {
    ExperimentConfig c;
    c.kind = kind;
    c.n_values = std::move(ns);
    c.trials = trials;
    c.master_seed = 2024;
    c.threads = threads;
    return c;
}

std::map<std::string, double> aggregates(const ExperimentResult& r, int n, const std::string& name) {
    std::map<std::string, double> out;
    for (const auto& row : r.rows)
        if (row.n == n && row.trial_or_aggregate == name) out[row.mode] = row.value;
    return out;
}

}  // namespace

TEST_CASE("random profiles are reproducible and seed-sensitive") {
    CHECK(random_profile(6, 99) == random_profile(6, 99));
    CHECK_FALSE(random_profile(6, 99) == random_profile(6, 100));
    CHECK(random_profile(1, 5) == testing::profile1({{1}}, {{1}}));
    CHECK(trial_seed(1, 4, 0) != trial_seed(1, 4, 1));
    CHECK(trial_seed(1, 4, 0) != trial_seed(1, 5, 0));
    CHECK(trial_seed(1, 4, 0) != trial_seed(2, 4, 0));
}

TEST_CASE("pinned n=3 profile for seed 42") {
    CHECK(format_profile(random_profile(3, 42)) == "3\n1 3 2\n1 3 2\n1 3 2\n1 3 2\n1 3 2\n1 2 3\n");
}

TEST_CASE("random lists are uniform over the six permutations of three") {
    std::map<PreferenceList, int> counts;
    const int draws = 10000;
    for (int s = 0; s < draws; ++s) {
        const Profile p = random_profile(3, trial_seed(77, 3, s));
        counts[{p.man_list(0).begin(), p.man_list(0).end()}]++;
    }
    CHECK(counts.size() == 6);
    const double expected = draws / 6.0;
    const double sigma = std::sqrt(draws * (1.0 / 6.0) * (5.0 / 6.0));
    double chi2 = 0;
    for (const auto& [list, c] : counts) {
        CHECK(std::abs(c - expected) < 3 * sigma);
        chi2 += (c - expected) * (c - expected) / expected;
    }
    CHECK(chi2 < 20.5);  // 0.999 quantile of chi-square with 5 degrees of freedom
}

TEST_CASE("box statistics") {
    const auto empty = box_stats({});
    CHECK(empty.count == 0);
    const auto s = box_stats({1, 2, 3, 4, 100});
    CHECK(s.count == 5);
    CHECK(s.q1 == doctest::Approx(2));
    CHECK(s.median == doctest::Approx(3));
    CHECK(s.q3 == doctest::Approx(4));
    CHECK(s.whisker_low == doctest::Approx(1));
    CHECK(s.whisker_high == doctest::Approx(4));
    CHECK(s.outliers_high == 1);
    CHECK(s.outliers_low == 0);
    CHECK(box_stats({2, 4}).median == doctest::Approx(3));
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(config(ExperimentKind::FreqAll, {}, 1).validate(), ValidationError);
    CHECK_THROWS_AS(config(ExperimentKind::FreqAll, {4, 2}, 1).validate(), ValidationError);
    CHECK_THROWS_AS(config(ExperimentKind::FreqAll, {2}, 0).validate(), ValidationError);
    CHECK_THROWS_AS(config(ExperimentKind::FreqAll, {0}, 1).validate(), ValidationError);
    CHECK_NOTHROW(config(ExperimentKind::FreqAll, {2, 4}, 1).validate());
    CHECK(parse_kind("pushup-size") == ExperimentKind::PushupSize);
    CHECK(kind_name(ExperimentKind::RankAll) == "rank-all");
    CHECK_THROWS_AS(parse_kind("nope"), ValidationError);
}

TEST_CASE("frequency rows respect pair dominance") {
    const auto r = run_frequency_single(config(ExperimentKind::FreqSingle, {2, 3, 4, 5}, 60));
    std::map<std::pair<int, std::string>, std::map<std::string, double>> trials;
    for (const auto& row : r.rows)
        if (std::isdigit(static_cast<unsigned char>(row.trial_or_aggregate[0])))
            trials[{row.n, row.trial_or_aggregate}][row.mode] = row.value;
    CHECK(trials.size() == 4 * 60);
    for (const auto& [key, modes] : trials) {
        CHECK(modes.at("pair") >= modes.at("self"));
        CHECK(modes.at("pair") >= modes.at("accomplice"));
    }
    for (int n : {2, 3, 4, 5}) {
        const auto f = aggregates(r, n, "fraction");
        for (const auto& [mode, v] : f) CHECK((v >= 0 && v <= 1));
    }
}

TEST_CASE("single-target frequencies agree with the oracles at small n") {
    DaKernel kernel;
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 3;
        const Profile p = random_profile(n, trial_seed(5, n, t));
        const auto fast = evaluate_freq_single(p, 0, kernel);
        CHECK(fast.self == oracle_self(p, 0).improved());
        bool acc = false, pair = false;
        for (int m = 0; m < n; ++m) {
            acc = acc || oracle_accomplice(p, m, 0).improved();
            pair = pair || oracle_pair(p, m, 0).improved();
        }
        CHECK(fast.accomplice == acc);
        CHECK(fast.pair == pair);
    }
}

TEST_CASE("all-women frequencies agree with the oracle at small n") {
    DaKernel kernel;
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + t % 3;
        const Profile p = random_profile(n, trial_seed(6, n, t));
        bool man_side = false;
        for (int m = 0; m < n; ++m) {
            const auto f = oracle_one_for_all(p, m);
            man_side = man_side || pareto_improves_women(p, f.frontier.front(), f.truthful);
        }
        CHECK(evaluate_freq_all(p, kernel).man_side == man_side);
    }
}

TEST_CASE("a profile where every woman has her top choice contributes nothing") {
    const Profile p = testing::profile1({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
    DaKernel kernel;
    const auto single = evaluate_freq_single(p, 0, kernel);
    CHECK_FALSE((single.pair || single.accomplice || single.self));
    const auto all = evaluate_freq_all(p, kernel);
    CHECK_FALSE((all.man_side || all.woman_side));
    const auto ranks = evaluate_rank_all(p, kernel);
    CHECK(ranks.man_side == 0);
    CHECK(ranks.woman_side == 0);
}

TEST_CASE("rank distributions only keep improving instances") {
    const auto r = run_rank_improvements(config(ExperimentKind::RankSingle, {4}, 40));
    for (const auto& row : r.rows)
        if (std::isdigit(static_cast<unsigned char>(row.trial_or_aggregate[0]))) CHECK(row.value > 0);

    // Medians against oracle-computed improvements.
    std::vector<double> pair;
    for (int t = 0; t < 40; ++t) {
        const Profile p = random_profile(4, trial_seed(2024, 4, t));
        int best = 0;
        for (int m = 0; m < 4; ++m) {
            const auto o = oracle_pair(p, m, 0);
            best = std::max(best, o.truthful_rank - o.rank);
        }
        if (best > 0) pair.push_back(best);
    }
    const auto counts = aggregates(r, 4, "count");
    CHECK(counts.at("pair") == pair.size());
    if (!pair.empty()) CHECK(aggregates(r, 4, "median").at("pair") == doctest::Approx(box_stats(pair).median));
}

TEST_CASE("push-up sizes stay under the bound") {
    const auto r = run_pushup_sizes(config(ExperimentKind::PushupSize, {5, 8}, 50));
    for (const auto& row : r.rows)
        if (row.mode == "size") CHECK(row.value <= push_up_size_bound(row.n));
    double total = 0;
    for (const auto& [mode, v] : aggregates(r, 8, "fraction")) total += v;
    CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("experiment output is independent of the thread count") {
    for (auto kind : {ExperimentKind::FreqSingle, ExperimentKind::FreqAll, ExperimentKind::RankSingle,
                      ExperimentKind::RankAll, ExperimentKind::PushupSize}) {
        const auto one = run_experiment(config(kind, {3, 6}, 12, 1)).csv();
        CHECK(one == run_experiment(config(kind, {3, 6}, 12, 4)).csv());
        CHECK(one == run_experiment(config(kind, {3, 6}, 12, 1)).csv());
        CHECK(one.starts_with("kind,n,trial_or_aggregate,mode,value\n"));
    }
}

TEST_CASE("run_and_write writes the CSV and the metadata sidecar") {
    const auto dir = std::filesystem::temp_directory_path() / "matchmanip_experiment_test";
    std::filesystem::create_directories(dir);
    auto c = config(ExperimentKind::PushupSize, {4}, 3);
    c.output_path = dir / "sizes.csv";
    const auto r = run_and_write(c);
    std::ifstream csv(c.output_path);
    std::stringstream text;
    text << csv.rdbuf();
    CHECK(text.str() == r.csv());
    std::ifstream meta(dir / "sizes.csv.meta.json");
    const auto j = nlohmann::json::parse(meta);
    CHECK(j["config"]["kind"] == "pushup-size");
    CHECK(j["config"]["trials"] == 3);
    CHECK(j.contains("prng"));
    CHECK(j.contains("version"));
    CHECK(j.contains("wall_seconds"));

    c.output_path = dir / "missing" / "x.csv";
    CHECK_THROWS_AS(run_and_write(c), std::runtime_error);
}
