#pragma once

#include <map>
#include <set>
#include <span>
#include <vector>

#include "matchmanip/deferred_acceptance.hpp"
#include "matchmanip/matching.hpp"
#include "matchmanip/profile.hpp"

namespace matchmanip {

/// Women below the accomplice's DA partner whose individual push-up leaves
/// him with that partner.
struct NoRegretSet {
    int accomplice = 0;
    int partner = 0;
    std::vector<int> members;                  // ascending index
    std::vector<int> with_regret;              // the other women below the partner
    std::map<int, Matching> per_woman;         // matching after pushing each member alone
};

struct PushUpOutcome {
    int accomplice = 0;
    std::vector<int> pushed;                   // ascending index
    PreferenceList list;                       // the submitted list
    Matching truthful;
    Matching matching;
    bool no_regret = false;
    bool stable = false;                       // w.r.t. the true profile
    std::vector<int> women_deltas;
    bool inconspicuous = false;
};

NoRegretSet no_regret_set(const Profile& profile, int m);

/// DA after accomplice m pushes `pushed` above his truthful partner.
/// Throws ValidationError if a woman is not strictly below that partner.
PushUpOutcome push_up_outcome(const Profile& profile, int m, std::span<const int> pushed);

/// Pushes the whole no-regret set; the result is womanwise optimal among
/// all of m's no-regret misreports.
PushUpOutcome optimal_one_for_all(const Profile& profile, int m);

/// Greedy deletion from the no-regret set: drop women in ascending index
/// order while the full matching is unchanged, restarting after each drop.
PushUpOutcome minimum_push_up_set(const Profile& profile, int m);

/// floor((n-1)/2): the largest possible minimum push-up set.
constexpr int push_up_size_bound(int n) { return (n - 1) / 2; }

/// Profile family on which the minimum push-up set of accomplice m1 has
/// exactly floor((n-1)/2) members. Unspecified tails are filled in ascending
/// index order. For even n the last man/woman are a dummy pair matched to
/// each other. Throws for n < 3.
Profile tight_bound_family(int n);

/// Proposals present when running DA on `misreport` but not on `base`, made
/// by men other than the single man whose list differs. Throws unless the
/// profiles differ in at most one man's list.
std::set<Proposal> proposal_delta(const Profile& base, const Profile& misreport);

}  // namespace matchmanip
