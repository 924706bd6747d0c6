#pragma once

#include <functional>
#include <span>
#include <vector>

#include "matchmanip/matching.hpp"
#include "matchmanip/profile.hpp"

namespace matchmanip {

// Brute-force references. Every oracle enumerates the whole strategy space
// and throws ValidationError instead of sampling when the instance is too big.

inline constexpr int kMisreportGuard = 7;
inline constexpr int kSingleOracleGuard = 6;
inline constexpr int kPairOracleGuard = 5;
inline constexpr int kSubsetOracleGuard = 20;

/// Calls `visit` on every permutation of `list` in lexicographic order.
void for_each_misreport(std::span<const int> list, const std::function<void(std::span<const int>)>& visit,
                        int guard = kMisreportGuard);

/// All permutations of `list`, lexicographic.
std::vector<PreferenceList> enumerate_misreports(std::span<const int> list, int guard = kMisreportGuard);

/// Best true rank (0-based) the beneficiary reaches, with the first list in
/// enumeration order achieving it.
struct OracleBest {
    int truthful_rank = 0;
    int rank = 0;
    PreferenceList list;
    Matching matching;
    bool improved() const { return rank < truthful_rank; }
};

OracleBest oracle_self(const Profile& profile, int w);

/// Over all lists of m that keep his DA partner.
OracleBest oracle_accomplice(const Profile& profile, int m, int w);

struct OraclePairBest {
    int truthful_rank = 0;
    int rank = 0;
    PreferenceList man_list;
    PreferenceList woman_list;
    Matching matching;
    bool improved() const { return rank < truthful_rank; }
};

/// Over all joint lists of (m, w) that keep m's DA partner.
OraclePairBest oracle_pair(const Profile& profile, int m, int w);

struct OracleFrontier {
    Matching truthful;
    /// Womanwise-maximal matchings among those reachable by m without regret,
    /// ascending by wife vector.
    std::vector<Matching> frontier;
};

OracleFrontier oracle_one_for_all(const Profile& profile, int m);

struct OracleSubset {
    std::vector<int> no_regret;   // ascending
    Matching target;              // DA after pushing the whole no-regret set
    std::vector<int> subset;      // first minimum-size subset found
};

/// Subsets of the no-regret set by increasing size, then lexicographically.
OracleSubset oracle_min_subset(const Profile& profile, int m);

/// Textbook DA that rescans every man each round. Independent of the
/// production kernels; used only to cross-check them.
Matching naive_deferred_acceptance(const Profile& profile);

}  // namespace matchmanip
