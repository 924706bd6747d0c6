#include "matchmanip/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "matchmanip/deferred_acceptance.hpp"
#include "matchmanip/surgery.hpp"

namespace matchmanip {

namespace {

void require(int n, int guard, const char* what) {
    if (n > guard)
        throw ValidationError(std::string(what) + ": n=" + std::to_string(n) + " exceeds oracle guard " +
                              std::to_string(guard));
}

}  // namespace

void for_each_misreport(std::span<const int> list, const std::function<void(std::span<const int>)>& visit,
                        int guard) {
    require(static_cast<int>(list.size()), guard, "enumerate_misreports");
    PreferenceList perm(list.begin(), list.end());
    std::sort(perm.begin(), perm.end());
    do {
        visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<PreferenceList> enumerate_misreports(std::span<const int> list, int guard) {
    std::vector<PreferenceList> out;
    for_each_misreport(list, [&](std::span<const int> p) { out.emplace_back(p.begin(), p.end()); }, guard);
    return out;
}

OracleBest oracle_self(const Profile& profile, int w) {
    require(profile.size(), kSingleOracleGuard, "oracle_self");
    DaKernel kernel;
    OracleBest best;
    best.matching = kernel.run_matching(profile);
    best.truthful_rank = best.rank = profile.woman_rank(w, best.matching.husband_of(w));
    const auto wl = profile.woman_list(w);
    best.list.assign(wl.begin(), wl.end());
    for_each_misreport(wl, [&](std::span<const int> list) {
        const auto ranks = ranks_of(list);
        kernel.run(profile, {.woman = w, .woman_ranks = ranks});
        const int r = profile.woman_rank(w, kernel.husbands()[static_cast<size_t>(w)]);
        if (r < best.rank) {
            best.rank = r;
            best.list.assign(list.begin(), list.end());
        }
    });
    best.matching = da_matching(profile.with_woman_list(w, best.list));
    return best;
}

OracleBest oracle_accomplice(const Profile& profile, int m, int w) {
    require(profile.size(), kSingleOracleGuard, "oracle_accomplice");
    DaKernel kernel;
    OracleBest best;
    best.matching = kernel.run_matching(profile);
    const int partner = best.matching.wife_of(m);
    best.truthful_rank = best.rank = profile.woman_rank(w, best.matching.husband_of(w));
    const auto ml = profile.man_list(m);
    best.list.assign(ml.begin(), ml.end());
    for_each_misreport(ml, [&](std::span<const int> list) {
        auto wives = kernel.run(profile, {.man = m, .man_list = list});
        if (wives[static_cast<size_t>(m)] != partner) return;
        const int r = profile.woman_rank(w, kernel.husbands()[static_cast<size_t>(w)]);
        if (r < best.rank) {
            best.rank = r;
            best.list.assign(list.begin(), list.end());
        }
    });
    best.matching = da_matching(profile.with_man_list(m, best.list));
    return best;
}

OraclePairBest oracle_pair(const Profile& profile, int m, int w) {
    require(profile.size(), kPairOracleGuard, "oracle_pair");
    DaKernel kernel;
    OraclePairBest best;
    const Matching truthful = kernel.run_matching(profile);
    const int partner = truthful.wife_of(m);
    best.truthful_rank = best.rank = profile.woman_rank(w, truthful.husband_of(w));
    const auto ml = profile.man_list(m);
    const auto wl = profile.woman_list(w);
    best.man_list.assign(ml.begin(), ml.end());
    best.woman_list.assign(wl.begin(), wl.end());

    const auto woman_lists = enumerate_misreports(wl);
    std::vector<std::vector<int>> woman_ranks;
    woman_ranks.reserve(woman_lists.size());
    for (const auto& l : woman_lists) woman_ranks.push_back(ranks_of(l));

    for_each_misreport(ml, [&](std::span<const int> man_list) {
        for (size_t i = 0; i < woman_lists.size() && best.rank > 0; ++i) {
            auto wives = kernel.run(profile, {.man = m, .man_list = man_list, .woman = w, .woman_ranks = woman_ranks[i]});
            if (wives[static_cast<size_t>(m)] != partner) continue;
            const int r = profile.woman_rank(w, kernel.husbands()[static_cast<size_t>(w)]);
            if (r < best.rank) {
                best.rank = r;
                best.man_list.assign(man_list.begin(), man_list.end());
                best.woman_list = woman_lists[i];
            }
        }
    });
    best.matching = da_matching(profile.with_man_list(m, best.man_list).with_woman_list(w, best.woman_list));
    return best;
}

OracleFrontier oracle_one_for_all(const Profile& profile, int m) {
    require(profile.size(), kSingleOracleGuard, "oracle_one_for_all");
    DaKernel kernel;
    OracleFrontier out;
    out.truthful = kernel.run_matching(profile);
    const int partner = out.truthful.wife_of(m);
    std::set<std::vector<int>> reachable;
    for_each_misreport(profile.man_list(m), [&](std::span<const int> list) {
        auto wives = kernel.run(profile, {.man = m, .man_list = list});
        if (wives[static_cast<size_t>(m)] == partner) reachable.emplace(wives.begin(), wives.end());
    });
    std::vector<Matching> all;
    for (const auto& wives : reachable) all.push_back(Matching::from_wives(wives));
    for (const auto& a : all) {
        const bool dominated = std::any_of(all.begin(), all.end(), [&](const Matching& b) {
            return b != a && dominates_for_women(profile, b, a);
        });
        if (!dominated) out.frontier.push_back(a);
    }
    return out;
}

OracleSubset oracle_min_subset(const Profile& profile, int m) {
    const int n = profile.size();
    DaKernel kernel;
    const Matching truthful = kernel.run_matching(profile);
    const int partner = truthful.wife_of(m);
    const auto true_list = profile.man_list(m);

    OracleSubset out;
    for (int w = 0; w < n; ++w) {
        if (!profile.man_prefers(m, partner, w)) continue;
        const int one[] = {w};
        const auto list = push_up(true_list, partner, one);
        if (kernel.run(profile, {.man = m, .man_list = list})[static_cast<size_t>(m)] == partner)
            out.no_regret.push_back(w);
    }
    const int k = static_cast<int>(out.no_regret.size());
    if (k > kSubsetOracleGuard)
        throw ValidationError("oracle_min_subset: no-regret set of size " + std::to_string(k) +
                              " exceeds oracle guard " + std::to_string(kSubsetOracleGuard));
    out.target = kernel.run_matching(profile, {.man = m, .man_list = push_up(true_list, partner, out.no_regret)});

    for (int size = 0; size <= k; ++size) {
        // Lexicographic combinations of `size` positions out of k.
        std::vector<int> idx(static_cast<size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<int> subset;
            for (int i : idx) subset.push_back(out.no_regret[static_cast<size_t>(i)]);
            auto wives = kernel.run(profile, {.man = m, .man_list = push_up(true_list, partner, subset)});
            if (std::ranges::equal(wives, out.target.wives())) {
                out.subset = std::move(subset);
                return out;
            }
            int i = size - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == k - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    out.subset = out.no_regret;  // unreachable: the full set reproduces the target
    return out;
}

Matching naive_deferred_acceptance(const Profile& profile) {
    const int n = profile.size();
    std::vector<int> wife(static_cast<size_t>(n), -1), husband(static_cast<size_t>(n), -1);
    std::vector<int> next(static_cast<size_t>(n), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int m = 0; m < n; ++m) {
            if (wife[static_cast<size_t>(m)] >= 0) continue;
            const int w = profile.man_list(m)[static_cast<size_t>(next[static_cast<size_t>(m)]++)];
            const int h = husband[static_cast<size_t>(w)];
            if (h < 0 || profile.woman_prefers(w, m, h)) {
                if (h >= 0) wife[static_cast<size_t>(h)] = -1;
                husband[static_cast<size_t>(w)] = m;
                wife[static_cast<size_t>(m)] = w;
            }
            changed = true;
        }
    }
    return Matching::from_wives(std::move(wife));
}

}  // namespace matchmanip
