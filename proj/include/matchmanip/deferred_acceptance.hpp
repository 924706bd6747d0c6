#pragma once

#include <compare>
#include <set>
#include <span>
#include <vector>

#include "matchmanip/matching.hpp"
#include "matchmanip/profile.hpp"

namespace matchmanip {

struct Proposal {
    int man = 0;
    int woman = 0;
    auto operator<=>(const Proposal&) const = default;
};

/// Proposals made during one DA run, in execution order.
class ProposalLog {
public:
    void record(int man, int woman) { order_.push_back({man, woman}); }
    const std::vector<Proposal>& order() const { return order_; }
    std::set<Proposal> as_set() const { return {order_.begin(), order_.end()}; }
    size_t size() const { return order_.size(); }

private:
    std::vector<Proposal> order_;
};

struct DaResult {
    Matching matching;
    ProposalLog log;
};

/// Men-proposing deferred acceptance. Rounds: every free man, in ascending
/// index order, proposes to the best woman who has not rejected him; each
/// woman then holds her favourite proposal.
DaResult deferred_acceptance(const Profile& profile);

/// Same matching as deferred_acceptance, without the log.
Matching da_matching(const Profile& profile);

/// One man's list and/or one woman's ranking substituted for the profile's.
struct ListOverrides {
    int man = -1;
    std::span<const int> man_list{};
    int woman = -1;
    std::span<const int> woman_ranks{};  // rank row (inverse of her list)
};

/// Allocation-free DA for hot loops. Not thread-safe; use one per thread.
class DaKernel {
public:
    /// Returns wife_of for DA on `profile` with `overrides` applied. The span
    /// stays valid until the next call.
    std::span<const int> run(const Profile& profile, const ListOverrides& overrides = {});

    /// husband_of from the most recent run.
    std::span<const int> husbands() const { return husband_; }

    Matching run_matching(const Profile& profile, const ListOverrides& overrides = {}) {
        auto w = run(profile, overrides);
        return Matching::from_wives({w.begin(), w.end()});
    }

private:
    std::vector<int> next_, husband_, wife_, stack_;
};

}  // namespace matchmanip
