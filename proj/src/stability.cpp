#include "matchmanip/stability.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace matchmanip {

std::vector<BlockingPair> blocking_pairs(const Profile& profile, const Matching& matching) {
    if (matching.size() != profile.size()) throw ValidationError("matching size differs from profile size");
    std::vector<BlockingPair> out;
    for (int m = 0; m < profile.size(); ++m) {
        const int wife = matching.wife_of(m);
        for (int w : profile.man_list(m)) {
            if (w == wife) break;
            if (profile.woman_prefers(w, m, matching.husband_of(w))) out.push_back({m, w});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_stable(const Profile& profile, const Matching& matching) {
    for (int m = 0; m < profile.size(); ++m) {
        const int wife = matching.wife_of(m);
        for (int w : profile.man_list(m)) {
            if (w == wife) break;
            if (profile.woman_prefers(w, m, matching.husband_of(w))) return false;
        }
    }
    return true;
}

std::vector<Matching> all_stable_matchings(const Profile& profile, int limit) {
    const int n = profile.size();
    if (n > limit)
        throw ValidationError("stable-matching enumeration refused: n=" + std::to_string(n) + " exceeds limit " +
                              std::to_string(limit));
    std::vector<int> wives(static_cast<size_t>(n));
    std::iota(wives.begin(), wives.end(), 0);
    std::vector<Matching> out;
    do {
        Matching mu = Matching::from_wives(wives);
        if (is_stable(profile, mu)) out.push_back(std::move(mu));
    } while (std::next_permutation(wives.begin(), wives.end()));
    return out;
}

}  // namespace matchmanip
