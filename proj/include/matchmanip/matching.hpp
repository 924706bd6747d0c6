#pragma once

#include <string>
#include <vector>

#include "matchmanip/profile.hpp"

namespace matchmanip {

/// Perfect man-woman matching; wife_of and husband_of are mutually inverse.
class Matching {
public:
    Matching() = default;

    /// Builds from wife_of[m]; throws ValidationError unless it is a permutation.
    static Matching from_wives(std::vector<int> wife_of);
    static Matching identity(int n);

    int size() const { return static_cast<int>(wife_.size()); }
    int wife_of(int m) const { return wife_[static_cast<size_t>(m)]; }
    int husband_of(int w) const { return husband_[static_cast<size_t>(w)]; }
    const std::vector<int>& wives() const { return wife_; }

    bool operator==(const Matching&) const = default;
    auto operator<=>(const Matching& o) const { return wife_ <=> o.wife_; }

    /// "m1-w3 m2-w4 ..." (1-based labels).
    std::string to_string() const;

private:
    std::vector<int> wife_, husband_;
};

/// Every woman weakly prefers a(w) to b(w).
bool dominates_for_women(const Profile& p, const Matching& a, const Matching& b);
/// Every man weakly prefers a(m) to b(m).
bool dominates_for_men(const Profile& p, const Matching& a, const Matching& b);
/// dominates_for_women and at least one woman strictly better.
bool pareto_improves_women(const Profile& p, const Matching& a, const Matching& b);

/// Per-woman improvement in true rank: rank(before) - rank(after).
std::vector<int> women_rank_deltas(const Profile& p, const Matching& before, const Matching& after);
std::vector<int> men_rank_deltas(const Profile& p, const Matching& before, const Matching& after);

}  // namespace matchmanip
