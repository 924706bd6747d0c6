// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "invariants.hpp"
#include "matchmanip/experiments.hpp"
#include "matchmanip/one_for_one.hpp"
#include "matchmanip/oracle.hpp"
#include "support.hpp"

using namespace matchmanip;
using testing::fixture;
using testing::list1;
using testing::wives1;

namespace {

// Pinned parameters.
constexpr std::uint64_t kSeed = 1;
constexpr double kExampleSeconds = 1.0;
constexpr int kOracleInstances = 200;
constexpr int kOraclePairInstancesN5 = 20;
constexpr int kInvariantInstances = 1000;
constexpr int kPushupN = 20;
constexpr int kPushupTrials = 10000;
constexpr double kPushupTolerance = 0.03;
constexpr double kPushupExpected[] = {0.7952, 0.1947, 0.0100, 0.0001};
constexpr int kFreqTrials = 1000;
constexpr int kFreqLo = 4, kFreqHi = 20, kFreqStep = 2, kFreqStrictFrom = 6;
constexpr double kPairGapLo = 0.5, kPairGapHi = 5.0;
constexpr double kAllGapLo = 5.0, kAllGapHi = 15.0;

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Collects failed expectations without stopping at the first one.
struct Checker {
    int failures = 0;
    std::ostringstream notes;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures < 5) notes << (failures ? "; " : "") << what;
        ++failures;
    }
    Verdict verdict(const std::string& summary) const {
        if (failures == 0) return {true, summary};
        return {false, std::to_string(failures) + " failure(s): " + notes.str()};
    }
};

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

Verdict examples() {
    const auto start = std::chrono::steady_clock::now();
    Checker c;

    const Profile intro = fixture("intro_pair_manipulation.txt");
    const Matching truthful = da_matching(intro);
    c.expect(truthful == wives1({3, 4, 5, 1, 2}), "intro DA matching");
    c.expect(!optimal_self_manipulation(intro, 0).improved, "intro: w1 improves alone");
    for (int m = 0; m < intro.size(); ++m)
        c.expect(!optimal_accomplice_manipulation(intro, m, 0).improved, "intro: an accomplice alone improves w1");
    const auto pair = optimal_pair_manipulation(intro, 0, 0);
    c.expect(pair.matching.husband_of(0) == 2, "intro: pair gives w1 m3");
    c.expect(pair.matching.wife_of(0) == truthful.wife_of(0), "intro: m1 keeps his partner");

    const Profile top = fixture("one_for_all_everyone_top.txt");
    const int pushed[] = {1, 3};
    const auto out = push_up_outcome(top, 0, pushed);
    for (int w = 0; w < top.size(); ++w) c.expect(top.woman_rank(w, out.matching.husband_of(w)) == 0, "everyone-top: a woman misses her first choice");
    c.expect(out.matching == wives1({1, 3, 2, 5, 4}), "everyone-top matching");
    c.expect(!is_inconspicuous(top.man_list(0), out.list), "everyone-top list is inconspicuous");

    const Profile concat = fixture("concatenation_hurts.txt");
    const Matching printed =
        da_matching(concat.with_man_list(0, list1({2, 4, 3, 1, 5})).with_woman_list(0, list1({3, 2, 1, 5, 4})));
    c.expect(printed.husband_of(0) == 1, "concatenation: w1 ends with m2");
    c.expect(concat.woman_prefers(0, da_matching(concat).husband_of(0), printed.husband_of(0)), "concatenation: w1 worsens");
    const auto self = optimal_self_manipulation(concat, 0);
    const auto acc = optimal_accomplice_manipulation(concat, 0, 0);
    c.expect(da_matching(concat.with_man_list(0, acc.reports.front().list).with_woman_list(0, self.reports.front().list)) ==
                 printed,
             "concatenation: computed optimal lists differ from the printed ones");

    const Profile blocked = fixture("pair_blocking_pair.txt");
    const auto b = optimal_pair_manipulation(blocked, 3, 0);
    c.expect(std::find(b.blocking.begin(), b.blocking.end(), BlockingPair{3, 4}) != b.blocking.end(),
             "blocking instance: (m4, w5) does not block");

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < kExampleSeconds, fmt("took %.3f s", seconds));
    return c.verdict(fmt("4 worked examples exact, %.3f s", seconds));
}

Verdict oracle_equivalence() {
    Checker c;
    DaKernel kernel;
    int comparisons = 0;
    auto compare_all = [&](const Profile& p, bool pair_only) {
        const int n = p.size();
        for (int m = 0; m < n; ++m)
            for (int w = 0; w < n; ++w) {
                const auto fast = optimal_pair_manipulation(p, m, w);
                c.expect(p.woman_rank(w, fast.matching.husband_of(w)) == oracle_pair(p, m, w).rank, "pair rank");
                ++comparisons;
            }
        if (pair_only) return;
        for (int w = 0; w < n; ++w) {
            const auto fast = optimal_self_manipulation(p, w);
            c.expect(p.woman_rank(w, fast.matching.husband_of(w)) == oracle_self(p, w).rank, "self rank");
            for (int m = 0; m < n; ++m) {
                const auto a = optimal_accomplice_manipulation(p, m, w);
                c.expect(p.woman_rank(w, a.matching.husband_of(w)) == oracle_accomplice(p, m, w).rank, "accomplice rank");
            }
            comparisons += 1 + n;
        }
        for (int m = 0; m < n; ++m) {
            const auto f = oracle_one_for_all(p, m);
            c.expect(f.frontier.size() == 1 && f.frontier.front() == optimal_one_for_all(p, m).matching,
                     "one-for-all womanwise matching");
            c.expect(minimum_push_up_set(p, m).pushed.size() == oracle_min_subset(p, m).subset.size(), "minimum set size");
            comparisons += 2;
        }
    };
    for (int n : {3, 4})
        for (int t = 0; t < kOracleInstances; ++t) compare_all(random_profile(n, trial_seed(kSeed, n, t)), false);
    for (int t = 0; t < kOraclePairInstancesN5; ++t) compare_all(random_profile(5, trial_seed(kSeed, 5, t)), true);
    return c.verdict(std::to_string(comparisons) + " fast/oracle comparisons agree");
}

Verdict invariant_suite() {
    std::map<std::string, int> violations;
    int instances = 0;
    for (int t = 0; t < kInvariantInstances; ++t) {
        const int n = 4 + t % 5;
        const Profile p = random_profile(n, trial_seed(kSeed + 1, n, t));
        std::mt19937_64 rng(trial_seed(kSeed + 2, n, t));
        for (const auto& v : invariants::check_all(p, rng)) ++violations[v];
        ++instances;
    }
    for (int n : {3, 4, 5, 6, 7, 9}) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(n));
        for (const auto& v : invariants::check_all(tight_bound_family(n), rng)) ++violations[v];
        ++instances;
    }
    if (violations.empty()) return {true, std::to_string(instances) + " instances, every man as accomplice, zero violations"};
    std::string detail;
    for (const auto& [name, count] : violations) detail += name + " x" + std::to_string(count) + "; ";
    return {false, detail};
}

Verdict size_bound() {
    Checker c;
    int checked = 0, largest = 0;
    for (int t = 0; t < kInvariantInstances; ++t) {
        const int n = 4 + t % 5;
        const Profile p = random_profile(n, trial_seed(kSeed + 1, n, t));
        for (int m = 0; m < n; ++m) {
            const int size = static_cast<int>(minimum_push_up_set(p, m).pushed.size());
            c.expect(size <= push_up_size_bound(n), "bound exceeded at n=" + std::to_string(n));
            largest = std::max(largest, size);
            ++checked;
        }
    }
    for (int n : {3, 5, 7, 9, 4, 6}) {
        const int size = static_cast<int>(minimum_push_up_set(tight_bound_family(n), 0).pushed.size());
        c.expect(size == push_up_size_bound(n), "tight family n=" + std::to_string(n) + " gives " + std::to_string(size));
    }
    return c.verdict(std::to_string(checked) + " random minimum sets within bound (largest " + std::to_string(largest) +
                     "), tight family exact for n=3,5,7,9,4,6");
}

ExperimentConfig config(ExperimentKind kind, std::vector<int> ns, int trials) {
    ExperimentConfig c;
    c.kind = kind;
    c.n_values = std::move(ns);
    c.trials = trials;
    c.master_seed = kSeed;
    c.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return c;
}

double aggregate(const ExperimentResult& r, int n, const std::string& name, const std::string& mode) {
    for (const auto& row : r.rows)
        if (row.n == n && row.trial_or_aggregate == name && row.mode == mode) return row.value;
    return 0;  // modes with no observations are not emitted
}

Verdict pushup_distribution() {
    const auto r = run_pushup_sizes(config(ExperimentKind::PushupSize, {kPushupN}, kPushupTrials));
    Checker c;
    std::string observed;
    for (int k = 0; k < 4; ++k) {
        const double f = aggregate(r, kPushupN, "fraction", "size=" + std::to_string(k));
        c.expect(std::abs(f - kPushupExpected[k]) <= kPushupTolerance,
                 fmt("size %.0f fraction %.4f", k, f));
        observed += fmt(k ? "/%.4f" : "%.4f", f);
    }
    double rest = 0;
    for (int k = 4; k <= push_up_size_bound(kPushupN); ++k) rest += aggregate(r, kPushupN, "fraction", "size=" + std::to_string(k));
    c.expect(rest <= kPushupTolerance, fmt("sizes >= 4 fraction %.4f", rest));
    return c.verdict("fractions " + observed + " vs .7952/.1947/.0100/.0001 (+-0.03)");
}

Verdict frequency_gaps() {
    std::vector<int> ns;
    for (int n = kFreqLo; n <= kFreqHi; n += kFreqStep) ns.push_back(n);
    const auto single = run_frequency_single(config(ExperimentKind::FreqSingle, ns, kFreqTrials));
    const auto all = run_frequency_all(config(ExperimentKind::FreqAll, ns, kFreqTrials));
    Checker c;
    double pair_gap = 0, all_gap = 0;
    for (int n : ns) {
        const double pair = aggregate(single, n, "fraction", "pair");
        const double one_sided = std::max(aggregate(single, n, "fraction", "accomplice"), aggregate(single, n, "fraction", "self"));
        const double man = aggregate(all, n, "fraction", "man-side");
        const double woman = aggregate(all, n, "fraction", "woman-side");
        if (n >= kFreqStrictFrom) {
            c.expect(pair > one_sided, fmt("(a) n=%.0f pair %.3f <= one-sided %.3f", n, pair, one_sided));
            c.expect(man > woman, fmt("(b) n=%.0f man-side %.3f <= woman-side %.3f", n, man, woman));
        }
        pair_gap += 100 * (pair - one_sided);
        all_gap += 100 * (man - woman);
    }
    pair_gap /= static_cast<double>(ns.size());
    all_gap /= static_cast<double>(ns.size());
    c.expect(pair_gap >= kPairGapLo && pair_gap <= kPairGapHi, fmt("(a) mean gap %.2f pp", pair_gap));
    c.expect(all_gap >= kAllGapLo && all_gap <= kAllGapHi, fmt("(b) mean gap %.2f pp", all_gap));
    return c.verdict(fmt("(a) mean gap %.2f pp, (b) mean gap %.2f pp", pair_gap, all_gap));
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict determinism(const std::string& cli, const std::filesystem::path& workdir) {
    Checker c;
    std::filesystem::create_directories(workdir);
    int compared = 0;
    for (const char* kind : {"freq-single", "freq-all", "rank-single", "rank-all", "pushup-size"}) {
        auto run = [&](const std::string& tag, int threads) {
            const auto out = workdir / (std::string(kind) + "." + tag + ".csv");
            const std::string cmd = "\"" + cli + "\" experiment --kind " + kind + " --n-range 4:10:3 --trials 40 --seed 7" +
                                    " --threads " + std::to_string(threads) + " --out \"" + out.string() + "\" 2>/dev/null";
            c.expect(std::system(cmd.c_str()) == 0, std::string(kind) + " command failed");
            return slurp(out);
        };
        const std::string first = run("a", 1);
        c.expect(!first.empty(), std::string(kind) + " produced no CSV");
        c.expect(first == run("b", 1), std::string(kind) + " rerun differs");
        c.expect(first == run("c", 8), std::string(kind) + " --threads 8 differs");
        compared += 2;
    }
    return c.verdict(std::to_string(compared) + " CSV pairs byte-identical across reruns and --threads 1/8");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::string cli;
    std::string workdir = "acceptance_runs";
    app.add_option("--cli", cli, "Path to the matchmanip executable")->required();
    app.add_option("--workdir", workdir, "Scratch directory for CLI outputs");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"worked examples", examples},
        {"oracle equivalence", oracle_equivalence},
        {"invariant suite", invariant_suite},
        {"size bound", size_bound},
        {"push-up size distribution", pushup_distribution},
        {"frequency gaps", frequency_gaps},
        {"determinism", [&] { return determinism(cli, workdir); }},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu (%s): %s  %s [%.1f s]\n", i + 1, criteria[i].first.c_str(), v.pass ? "PASS" : "FAIL",
                    v.detail.c_str(), seconds);
        std::fflush(stdout);
        failed += !v.pass;
    }
    return failed ? 1 : 0;
}
