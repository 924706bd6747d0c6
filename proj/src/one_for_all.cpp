#include "matchmanip/one_for_all.hpp"

#include <algorithm>
#include <string>

#include "matchmanip/stability.hpp"
#include "matchmanip/surgery.hpp"

namespace matchmanip {

NoRegretSet no_regret_set(const Profile& profile, int m) {
    DaKernel kernel;
    const Matching truthful = kernel.run_matching(profile);
    NoRegretSet s;
    s.accomplice = m;
    s.partner = truthful.wife_of(m);
    const auto true_list = profile.man_list(m);
    for (int w = 0; w < profile.size(); ++w) {
        if (!profile.man_prefers(m, s.partner, w)) continue;
        const int one[] = {w};
        const auto list = push_up(true_list, s.partner, one);
        Matching mu = kernel.run_matching(profile, {.man = m, .man_list = list});
        if (mu.wife_of(m) == s.partner) {
            s.members.push_back(w);
            s.per_woman.emplace(w, std::move(mu));
        } else {
            s.with_regret.push_back(w);
        }
    }
    return s;
}

namespace {

PushUpOutcome describe(const Profile& profile, int m, std::vector<int> pushed, const Matching& truthful,
                       DaKernel& kernel) {
    std::sort(pushed.begin(), pushed.end());
    PushUpOutcome out;
    out.accomplice = m;
    out.truthful = truthful;
    out.list = push_up(profile.man_list(m), truthful.wife_of(m), pushed);
    out.matching = kernel.run_matching(profile, {.man = m, .man_list = out.list});
    out.pushed = std::move(pushed);
    out.no_regret = out.matching.wife_of(m) == truthful.wife_of(m);
    out.stable = is_stable(profile, out.matching);
    out.women_deltas = women_rank_deltas(profile, truthful, out.matching);
    out.inconspicuous = is_inconspicuous(profile.man_list(m), out.list);
    return out;
}

}  // namespace

PushUpOutcome push_up_outcome(const Profile& profile, int m, std::span<const int> pushed) {
    DaKernel kernel;
    const Matching truthful = kernel.run_matching(profile);
    return describe(profile, m, {pushed.begin(), pushed.end()}, truthful, kernel);
}

PushUpOutcome optimal_one_for_all(const Profile& profile, int m) {
    DaKernel kernel;
    const Matching truthful = kernel.run_matching(profile);
    return describe(profile, m, no_regret_set(profile, m).members, truthful, kernel);
}

PushUpOutcome minimum_push_up_set(const Profile& profile, int m) {
    DaKernel kernel;
    const Matching truthful = kernel.run_matching(profile);
    const int partner = truthful.wife_of(m);
    const auto true_list = profile.man_list(m);

    std::vector<int> current = no_regret_set(profile, m).members;
    const Matching target = kernel.run_matching(profile, {.man = m, .man_list = push_up(true_list, partner, current)});

    bool dropped = true;
    while (dropped) {
        dropped = false;
        for (size_t i = 0; i < current.size(); ++i) {
            std::vector<int> reduced = current;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(i));
            const auto list = push_up(true_list, partner, reduced);
            auto wives = kernel.run(profile, {.man = m, .man_list = list});
            if (std::equal(wives.begin(), wives.end(), target.wives().begin())) {
                current = std::move(reduced);
                dropped = true;
                break;
            }
        }
    }
    return describe(profile, m, current, truthful, kernel);
}

Profile tight_bound_family(int n) {
    if (n < 3) throw ValidationError("tight_bound_family requires n >= 3, got " + std::to_string(n));
    const int core = n % 2 == 1 ? n : n - 1;  // odd-sized core; for even n the last pair is a dummy
    std::vector<PreferenceList> men(static_cast<size_t>(n)), women(static_cast<size_t>(n));
    auto fill = [n](std::vector<int> head) {
        for (int x = 0; x < n; ++x)
            if (std::find(head.begin(), head.end(), x) == head.end()) head.push_back(x);
        return head;
    };
    // 0-based: agent 0 is the accomplice; pairs (1,2), (3,4), ... within the core.
    men[0] = fill({0});
    women[0] = fill({0});
    for (int i = 1; i + 1 < core; i += 2) {
        men[static_cast<size_t>(i)] = fill({i, i + 1});
        men[static_cast<size_t>(i + 1)] = fill({i + 1, i});
        women[static_cast<size_t>(i)] = fill({i + 1, 0, i});
        women[static_cast<size_t>(i + 1)] = fill({i, i + 1});
    }
    if (core != n) {
        men[static_cast<size_t>(n - 1)] = fill({n - 1});
        women[static_cast<size_t>(n - 1)] = fill({n - 1});
    }
    Profile p(std::move(men), std::move(women));
    if (da_matching(p) != Matching::identity(n))
        throw std::logic_error("tight_bound_family: constructed profile does not have the identity DA matching");
    return p;
}

std::set<Proposal> proposal_delta(const Profile& base, const Profile& misreport) {
    if (base.size() != misreport.size()) throw ValidationError("proposal_delta: profiles differ in size");
    const int n = base.size();
    int changed = -1;
    for (int w = 0; w < n; ++w)
        if (!std::ranges::equal(base.woman_list(w), misreport.woman_list(w)))
            throw ValidationError("proposal_delta: profiles differ in a woman's list");
    for (int m = 0; m < n; ++m) {
        if (std::ranges::equal(base.man_list(m), misreport.man_list(m))) continue;
        if (changed >= 0) throw ValidationError("proposal_delta: profiles differ in more than one man's list");
        changed = m;
    }
    const auto before = deferred_acceptance(base).log.as_set();
    const DaResult after = deferred_acceptance(misreport);
    std::set<Proposal> out;
    for (const Proposal& p : after.log.order())
        if (p.man != changed && !before.contains(p)) out.insert(p);
    return out;
}

}  // namespace matchmanip
