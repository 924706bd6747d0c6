#pragma once

#include <vector>

#include "matchmanip/matching.hpp"
#include "matchmanip/profile.hpp"
#include "matchmanip/stability.hpp"
#include "matchmanip/surgery.hpp"

namespace matchmanip {

/// Result of a single-beneficiary manipulation search.
struct ManipulationOutcome {
    int beneficiary = 0;              // woman index
    std::vector<Misreport> reports;   // submitted lists (truthful when nothing helps)
    Matching truthful;
    Matching matching;
    std::vector<int> women_deltas;    // true-rank improvement per woman
    std::vector<int> men_deltas;
    int beneficiary_delta = 0;
    bool improved = false;
    bool no_regret = false;           // accomplice keeps his truthful partner
    bool stable = false;              // w.r.t. the true profile
    std::vector<BlockingPair> blocking;
    bool inconspicuous = false;       // every report is a single promotion
};

/// Best list for woman w over all single-man promotions (an optimal self
/// manipulation is always of this form). Scan: promoted man by ascending
/// index, then target position by ascending rank; first strict best wins.
ManipulationOutcome optimal_self_manipulation(const Profile& profile, int w);

/// Best no-regret single push-up by accomplice m on behalf of woman w.
/// Candidates are pushed women by ascending index; first strict best wins.
ManipulationOutcome optimal_accomplice_manipulation(const Profile& profile, int m, int w);

/// Fills matching-derived fields of an outcome.
ManipulationOutcome describe_outcome(const Profile& profile, int beneficiary, std::vector<Misreport> reports,
                                     const Matching& truthful, const Matching& matching);

}  // namespace matchmanip
