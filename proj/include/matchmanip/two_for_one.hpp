#pragma once

#include <vector>

#include "matchmanip/deferred_acceptance.hpp"
#include "matchmanip/matching.hpp"
#include "matchmanip/profile.hpp"
#include "matchmanip/stability.hpp"
#include "matchmanip/surgery.hpp"

namespace matchmanip {

/// Joint misreport by accomplice `man` and beneficiary `woman`.
struct PairStrategy {
    int man = 0;
    int woman = 0;
    Misreport man_report;
    Misreport woman_report;
    Matching truthful;
    Matching matching;
    int w_rank_delta = 0;             // rank(truthful partner) - rank(new partner) >= 0
    bool improved = false;
    bool no_regret = false;           // man keeps his truthful partner
    std::vector<BlockingPair> blocking;  // w.r.t. the true profile
    bool m_stable = false;            // every blocking pair contains the man
    bool mw_stable = false;           // every blocking pair contains the man or the woman
    bool inconspicuous = false;       // both reports are single promotions (informational)
};

/// The woman's candidate lists: every ordered pair of distinct men moved to
/// the top two positions, rest in true order. Ordered by (first, second)
/// index; n(n-1) lists.
std::vector<PreferenceList> woman_candidate_lists(const Profile& profile, int w);

/// The accomplice's candidate lists: his list with `partner` promoted to the
/// top, followed by that list with each other woman (ascending index) moved
/// above it. n lists.
std::vector<PreferenceList> accomplice_candidate_lists(const Profile& profile, int m, int partner);

/// Exhaustive scan of (truthful + woman candidates) x (truthful + accomplice
/// candidates). Keeps the feasible cell (man's partner unchanged) giving the
/// woman her best true-rank partner; ties go to the earliest cell in
/// row-major order, so the truthful cell wins at zero improvement.
PairStrategy optimal_pair_manipulation(const Profile& profile, int m, int w);

/// OpenMP version of the same scan; identical result for any thread count.
PairStrategy optimal_pair_manipulation_parallel(const Profile& profile, int m, int w, int threads);

/// True as soon as any cell strictly improves the woman.
bool pair_manipulable(const Profile& profile, int m, int w, DaKernel& kernel);

/// 1-based true ranks of the woman's partner under each model.
struct PairComparison {
    int truthful_rank = 0;
    int self_rank = 0;
    int accomplice_rank = 0;
    int pair_rank = 0;
    bool pair_dominates = false;      // pair_rank <= min(self_rank, accomplice_rank)
    bool pair_strictly_better = false;
};

PairComparison pair_dominates_individuals(const Profile& profile, int m, int w);

}  // namespace matchmanip
