#pragma once

#include <compare>
#include <vector>

#include "matchmanip/matching.hpp"
#include "matchmanip/profile.hpp"

namespace matchmanip {

/// (man, woman) who both strictly prefer each other to their partners.
struct BlockingPair {
    int man = 0;
    int woman = 0;
    auto operator<=>(const BlockingPair&) const = default;
};

/// All blocking pairs, sorted by (man, woman).
std::vector<BlockingPair> blocking_pairs(const Profile& profile, const Matching& matching);

bool is_stable(const Profile& profile, const Matching& matching);

inline constexpr int kStableEnumerationLimit = 8;

/// Every stable matching, by filtering all n! perfect matchings in
/// lexicographic order of wife_of. Refuses n above `limit`.
std::vector<Matching> all_stable_matchings(const Profile& profile, int limit = kStableEnumerationLimit);

}  // namespace matchmanip
