#include "matchmanip/one_for_one.hpp"

#include "matchmanip/deferred_acceptance.hpp"

namespace matchmanip {

ManipulationOutcome describe_outcome(const Profile& profile, int beneficiary, std::vector<Misreport> reports,
                                     const Matching& truthful, const Matching& matching) {
    ManipulationOutcome out;
    out.beneficiary = beneficiary;
    out.truthful = truthful;
    out.matching = matching;
    out.women_deltas = women_rank_deltas(profile, truthful, matching);
    out.men_deltas = men_rank_deltas(profile, truthful, matching);
    out.beneficiary_delta = out.women_deltas[static_cast<size_t>(beneficiary)];
    out.improved = out.beneficiary_delta > 0;
    out.blocking = blocking_pairs(profile, matching);
    out.stable = out.blocking.empty();
    out.inconspicuous = true;
    out.no_regret = true;
    for (const auto& r : reports) {
        const auto true_list = profile.list_of(r.agent);
        out.inconspicuous = out.inconspicuous && is_inconspicuous(true_list, r.list);
        if (r.agent.side == Side::Man)
            out.no_regret = out.no_regret && matching.wife_of(r.agent.index) == truthful.wife_of(r.agent.index);
    }
    out.reports = std::move(reports);
    return out;
}

ManipulationOutcome optimal_self_manipulation(const Profile& profile, int w) {
    const int n = profile.size();
    DaKernel kernel;
    const Matching truthful = kernel.run_matching(profile);
    const auto true_list = profile.woman_list(w);

    PreferenceList best_list(true_list.begin(), true_list.end());
    int best_rank = profile.woman_rank(w, truthful.husband_of(w));
    for (int man = 0; man < n && best_rank > 0; ++man) {
        const int from = profile.woman_rank(w, man);
        for (int pos = 0; pos < from; ++pos) {
            auto candidate = promote(true_list, man, pos);
            auto ranks = ranks_of(candidate);
            kernel.run(profile, {.woman = w, .woman_ranks = ranks});
            const int r = profile.woman_rank(w, kernel.husbands()[static_cast<size_t>(w)]);
            if (r < best_rank) {
                best_rank = r;
                best_list = std::move(candidate);
            }
        }
    }
    const Matching result = da_matching(profile.with_woman_list(w, best_list));
    return describe_outcome(profile, w, {{AgentId::woman(w), best_list}}, truthful, result);
}

ManipulationOutcome optimal_accomplice_manipulation(const Profile& profile, int m, int w) {
    const int n = profile.size();
    DaKernel kernel;
    const Matching truthful = kernel.run_matching(profile);
    const int partner = truthful.wife_of(m);
    const auto true_list = profile.man_list(m);

    PreferenceList best_list(true_list.begin(), true_list.end());
    int best_rank = profile.woman_rank(w, truthful.husband_of(w));
    for (int pushed = 0; pushed < n && best_rank > 0; ++pushed) {
        if (!profile.man_prefers(m, partner, pushed)) continue;
        const int one[] = {pushed};
        auto candidate = push_up(true_list, partner, one);
        auto wives = kernel.run(profile, {.man = m, .man_list = candidate});
        if (wives[static_cast<size_t>(m)] != partner) continue;
        const int r = profile.woman_rank(w, kernel.husbands()[static_cast<size_t>(w)]);
        if (r < best_rank) {
            best_rank = r;
            best_list = std::move(candidate);
        }
    }
    const Matching result = da_matching(profile.with_man_list(m, best_list));
    return describe_outcome(profile, w, {{AgentId::man(m), best_list}}, truthful, result);
}

}  // namespace matchmanip
