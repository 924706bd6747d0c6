// Command-line front end: da, manipulate, experiment, oracle, gen.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchmanip/deferred_acceptance.hpp"
#include "matchmanip/experiments.hpp"
#include "matchmanip/one_for_all.hpp"
#include "matchmanip/one_for_one.hpp"
#include "matchmanip/oracle.hpp"
#include "matchmanip/profile_io.hpp"
#include "matchmanip/stability.hpp"
#include "matchmanip/two_for_one.hpp"

using namespace matchmanip;
using nlohmann::json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitDisagree = 2;

int default_threads() {
    if (const char* env = std::getenv("MATCHMANIP_THREADS")) {
        try {
            const int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring MATCHMANIP_THREADS='" << env << "'\n";
    }
    return 1;
}

json blocking_json(const std::vector<BlockingPair>& pairs) {
    json out = json::array();
    for (const auto& b : pairs) out.push_back({b.man + 1, b.woman + 1});
    return out;
}

json report_json(const Misreport& r) {
    return {{"agent", r.agent.label()}, {"list", format_list(r.agent.side, r.list)}};
}

json labels(Side side, const std::vector<int>& agents) {
    json out = json::array();
    for (int a : agents) out.push_back(AgentId{side, a}.label());
    return out;
}

json outcome_json(const Profile& p, const ManipulationOutcome& o) {
    json j;
    j["beneficiary"] = AgentId::woman(o.beneficiary).label();
    j["reports"] = json::array();
    for (const auto& r : o.reports) j["reports"].push_back(report_json(r));
    j["truthful"] = matching_to_json(o.truthful);
    j["matching"] = matching_to_json(o.matching);
    j["women_rank_deltas"] = o.women_deltas;
    j["men_rank_deltas"] = o.men_deltas;
    j["beneficiary_partner"] = AgentId::man(o.matching.husband_of(o.beneficiary)).label();
    j["beneficiary_rank"] = p.woman_rank(o.beneficiary, o.matching.husband_of(o.beneficiary)) + 1;
    j["improved"] = o.improved;
    j["no_regret"] = o.no_regret;
    j["stable"] = o.stable;
    j["blocking_pairs"] = blocking_json(o.blocking);
    j["inconspicuous"] = o.inconspicuous;
    if (!o.improved) j["message"] = "no improving strategy";
    return j;
}

json pair_json(const Profile& p, const PairStrategy& s) {
    json j;
    j["beneficiary"] = AgentId::woman(s.woman).label();
    j["accomplice"] = AgentId::man(s.man).label();
    j["reports"] = {report_json(s.man_report), report_json(s.woman_report)};
    j["truthful"] = matching_to_json(s.truthful);
    j["matching"] = matching_to_json(s.matching);
    j["women_rank_deltas"] = women_rank_deltas(p, s.truthful, s.matching);
    j["men_rank_deltas"] = men_rank_deltas(p, s.truthful, s.matching);
    j["beneficiary_partner"] = AgentId::man(s.matching.husband_of(s.woman)).label();
    j["beneficiary_rank"] = p.woman_rank(s.woman, s.matching.husband_of(s.woman)) + 1;
    j["improved"] = s.improved;
    j["no_regret"] = s.no_regret;
    j["stable"] = s.blocking.empty();
    j["m_stable"] = s.m_stable;
    j["blocking_pairs"] = blocking_json(s.blocking);
    j["inconspicuous"] = s.inconspicuous;
    if (!s.improved) j["message"] = "no improving strategy";
    return j;
}

json push_json(const Profile& p, const PushUpOutcome& o) {
    json j;
    j["accomplice"] = AgentId::man(o.accomplice).label();
    j["pushed"] = labels(Side::Woman, o.pushed);
    j["reports"] = {report_json({AgentId::man(o.accomplice), o.list})};
    j["truthful"] = matching_to_json(o.truthful);
    j["matching"] = matching_to_json(o.matching);
    j["women_rank_deltas"] = o.women_deltas;
    j["men_rank_deltas"] = men_rank_deltas(p, o.truthful, o.matching);
    j["improved"] = pareto_improves_women(p, o.matching, o.truthful);
    j["no_regret"] = o.no_regret;
    j["stable"] = o.stable;
    j["inconspicuous"] = o.inconspicuous;
    if (!j["improved"].get<bool>()) j["message"] = "no improving strategy";
    return j;
}

struct AgentFlags {
    std::string man, woman;

    int man_index(const Profile& p, const std::string& mode) const { return get(p, man, Side::Man, mode, "--man"); }
    int woman_index(const Profile& p, const std::string& mode) const {
        return get(p, woman, Side::Woman, mode, "--woman");
    }

private:
    static int get(const Profile& p, const std::string& text, Side side, const std::string& mode, const char* flag) {
        if (text.empty()) throw ValidationError("mode '" + mode + "' requires " + flag);
        const AgentId a = AgentId::parse(text, side);
        if (a.index >= p.size())
            throw ValidationError(std::string(flag) + " " + text + " is out of range for n=" + std::to_string(p.size()));
        return a.index;
    }
};

int cmd_da(const std::string& path, const std::string& format) {
    const Profile p = read_profile_file(path);
    const DaResult r = deferred_acceptance(p);
    const auto blocking = blocking_pairs(p, r.matching);
    if (format == "table") {
        std::cout << "man  woman  man-rank  woman-rank\n";
        for (int m = 0; m < p.size(); ++m) {
            const int w = r.matching.wife_of(m);
            std::cout << AgentId::man(m).label() << "   " << AgentId::woman(w).label() << "     "
                      << p.man_rank(m, w) + 1 << "         " << p.woman_rank(w, m) + 1 << "\n";
        }
        std::cout << "blocking pairs: " << blocking.size() << "\n";
        return 0;
    }
    json j;
    j["n"] = p.size();
    j["matching"] = matching_to_json(r.matching);
    j["blocking_pairs"] = blocking_json(blocking);
    j["stable"] = blocking.empty();
    j["proposals"] = r.log.size();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_manipulate(const std::string& path, const std::string& mode, const AgentFlags& agents, int threads) {
    const Profile p = read_profile_file(path);
    json j;
    if (mode == "self") {
        j = outcome_json(p, optimal_self_manipulation(p, agents.woman_index(p, mode)));
    } else if (mode == "accomplice") {
        j = outcome_json(p, optimal_accomplice_manipulation(p, agents.man_index(p, mode), agents.woman_index(p, mode)));
    } else if (mode == "pair") {
        const int m = agents.man_index(p, mode), w = agents.woman_index(p, mode);
        j = pair_json(p, threads > 1 ? optimal_pair_manipulation_parallel(p, m, w, threads)
                                     : optimal_pair_manipulation(p, m, w));
    } else if (mode == "one-for-all") {
        const int m = agents.man_index(p, mode);
        j = push_json(p, optimal_one_for_all(p, m));
        j["no_regret_set"] = labels(Side::Woman, no_regret_set(p, m).members);
    } else {
        j = push_json(p, minimum_push_up_set(p, agents.man_index(p, mode)));
    }
    j["mode"] = mode;
    std::cout << j.dump(2) << "\n";
    return 0;
}

std::vector<int> parse_range(const std::string& text) {
    int lo = 0, hi = 0, step = 1, used = 0;
    const int fields = std::sscanf(text.c_str(), "%d:%d%n:%d%n", &lo, &hi, &used, &step, &used);
    if (fields < 2 || static_cast<size_t>(used) != text.size() || step < 1 || hi < lo || lo < 1)
        throw ValidationError("--n-range expects lo:hi[:step] with 1 <= lo <= hi and step >= 1, got '" + text + "'");
    std::vector<int> out;
    for (int n = lo; n <= hi; n += step) out.push_back(n);
    return out;
}

int cmd_experiment(const std::string& kind, const std::string& range, int trials, std::uint64_t seed,
                   const std::string& out, int threads) {
    ExperimentConfig c;
    c.kind = parse_kind(kind);
    c.n_values = parse_range(range);
    c.trials = trials;
    c.master_seed = seed;
    c.output_path = out;
    c.threads = threads;
    c.validate();
    const auto result = run_and_write(c);
    std::cerr << "wrote " << result.rows.size() << " rows to " << out << "\n";
    return 0;
}

int cmd_oracle(const std::string& path, const std::string& mode, const AgentFlags& agents) {
    const Profile p = read_profile_file(path);
    json j;
    bool agree = false;
    if (mode == "self") {
        const int w = agents.woman_index(p, mode);
        const auto fast = optimal_self_manipulation(p, w);
        const auto slow = oracle_self(p, w);
        const int fast_rank = p.woman_rank(w, fast.matching.husband_of(w)) + 1;
        j["fast"] = {{"rank", fast_rank}, {"matching", matching_to_json(fast.matching)}};
        j["oracle"] = {{"rank", slow.rank + 1}, {"list", format_list(Side::Woman, slow.list)},
                       {"matching", matching_to_json(slow.matching)}};
        agree = fast_rank == slow.rank + 1;
    } else if (mode == "accomplice") {
        const int m = agents.man_index(p, mode), w = agents.woman_index(p, mode);
        const auto fast = optimal_accomplice_manipulation(p, m, w);
        const auto slow = oracle_accomplice(p, m, w);
        const int fast_rank = p.woman_rank(w, fast.matching.husband_of(w)) + 1;
        j["fast"] = {{"rank", fast_rank}, {"matching", matching_to_json(fast.matching)}};
        j["oracle"] = {{"rank", slow.rank + 1}, {"list", format_list(Side::Man, slow.list)},
                       {"matching", matching_to_json(slow.matching)}};
        agree = fast_rank == slow.rank + 1;
    } else if (mode == "pair") {
        const int m = agents.man_index(p, mode), w = agents.woman_index(p, mode);
        const auto slow = oracle_pair(p, m, w);
        const auto fast = optimal_pair_manipulation(p, m, w);
        const int fast_rank = p.woman_rank(w, fast.matching.husband_of(w)) + 1;
        j["fast"] = {{"rank", fast_rank}, {"matching", matching_to_json(fast.matching)}};
        j["oracle"] = {{"rank", slow.rank + 1},
                       {"man_list", format_list(Side::Man, slow.man_list)},
                       {"woman_list", format_list(Side::Woman, slow.woman_list)},
                       {"matching", matching_to_json(slow.matching)}};
        agree = fast_rank == slow.rank + 1;
    } else if (mode == "one-for-all") {
        const int m = agents.man_index(p, mode);
        const auto slow = oracle_one_for_all(p, m);
        const auto fast = optimal_one_for_all(p, m);
        json frontier = json::array();
        for (const auto& mu : slow.frontier) frontier.push_back(matching_to_json(mu));
        j["fast"] = {{"matching", matching_to_json(fast.matching)}};
        j["oracle"] = {{"frontier", frontier}, {"frontier_size", slow.frontier.size()}};
        agree = slow.frontier.size() == 1 && slow.frontier.front() == fast.matching;
    } else {
        const int m = agents.man_index(p, mode);
        const auto slow = oracle_min_subset(p, m);
        const auto fast = minimum_push_up_set(p, m);
        j["fast"] = {{"pushed", labels(Side::Woman, fast.pushed)}, {"size", fast.pushed.size()},
                     {"matching", matching_to_json(fast.matching)}};
        j["oracle"] = {{"subset", labels(Side::Woman, slow.subset)}, {"size", slow.subset.size()},
                       {"matching", matching_to_json(slow.target)}};
        agree = fast.pushed.size() == slow.subset.size() && fast.matching == slow.target;
    }
    j["mode"] = mode;
    j["agree"] = agree;
    std::cout << j.dump(2) << "\n";
    return agree ? 0 : kExitDisagree;
}

int cmd_gen(const std::string& family, int n, std::uint64_t seed, const std::string& out) {
    if (n < 1) throw ValidationError("--n must be >= 1");
    const Profile p = family == "tight" ? tight_bound_family(n) : random_profile(n, seed);
    const std::string text = format_profile(p);
    if (out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out, std::ios::binary);
    if (!(f << text) || !f.flush()) throw std::runtime_error("cannot write '" + out + "'");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deferred acceptance and two-sided manipulation toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> modes{"self", "accomplice", "pair", "one-for-all", "min-pushup"};
    int threads = default_threads();
    AgentFlags agents;

    std::string profile_path, format = "json";
    auto* da = app.add_subcommand("da", "Run deferred acceptance and report stability");
    da->add_option("profile", profile_path, "Profile file")->required();
    da->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    std::string mode;
    auto* manip = app.add_subcommand("manipulate", "Compute an optimal manipulation");
    manip->add_option("profile", profile_path, "Profile file")->required();
    manip->add_option("--mode", mode, "Manipulation model")->required()->check(CLI::IsMember(modes));
    manip->add_option("--man", agents.man, "Accomplice (m3 or 3)");
    manip->add_option("--woman", agents.woman, "Beneficiary (w1 or 1)");
    manip->add_option("--threads", threads, "Threads for the pair search")->check(CLI::PositiveNumber);

    std::string kind, range, out;
    int trials = 1;
    std::uint64_t seed = 1;
    auto* exp = app.add_subcommand("experiment", "Run a seeded Monte-Carlo experiment");
    exp->add_option("--kind", kind, "freq-single, freq-all, rank-single, rank-all or pushup-size")->required();
    exp->add_option("--n-range", range, "lo:hi[:step]")->required();
    exp->add_option("--trials", trials, "Instances per n")->required();
    exp->add_option("--seed", seed, "Master seed");
    exp->add_option("--out", out, "CSV output path")->required();
    exp->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* orc = app.add_subcommand("oracle", "Compare a fast algorithm against brute force");
    orc->add_option("profile", profile_path, "Profile file")->required();
    orc->add_option("--mode", mode, "Manipulation model")->required()->check(CLI::IsMember(modes));
    orc->add_option("--man", agents.man, "Accomplice (m3 or 3)");
    orc->add_option("--woman", agents.woman, "Beneficiary (w1 or 1)");

    std::string family = "random";
    int n = 0;
    auto* gen = app.add_subcommand("gen", "Emit a profile");
    gen->add_option("family", family, "random or tight")->check(CLI::IsMember({"random", "tight"}));
    gen->add_option("--n", n, "Number of men (and women)")->required();
    gen->add_option("--seed", seed, "Seed for random profiles");
    gen->add_option("--out", out, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*da) return cmd_da(profile_path, format);
        if (*manip) return cmd_manipulate(profile_path, mode, agents, threads);
        if (*exp) return cmd_experiment(kind, range, trials, seed, out, threads);
        if (*orc) return cmd_oracle(profile_path, mode, agents);
        if (*gen) return cmd_gen(family, n, seed, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
