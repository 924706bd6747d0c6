#include "matchmanip/deferred_acceptance.hpp"

#include <algorithm>

namespace matchmanip {

DaResult deferred_acceptance(const Profile& profile) {
    const int n = profile.size();
    std::vector<int> next(static_cast<size_t>(n), 0);
    std::vector<int> husband(static_cast<size_t>(n), -1);
    std::vector<int> free_men(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) free_men[static_cast<size_t>(m)] = m;

    DaResult result;
    std::vector<int> rejected;
    while (!free_men.empty()) {
        rejected.clear();
        for (int m : free_men) {
            int w = profile.man_list(m)[static_cast<size_t>(next[static_cast<size_t>(m)]++)];
            result.log.record(m, w);
            int& h = husband[static_cast<size_t>(w)];
            if (h < 0) {
                h = m;
            } else if (profile.woman_prefers(w, m, h)) {
                rejected.push_back(h);
                h = m;
            } else {
                rejected.push_back(m);
            }
        }
        std::sort(rejected.begin(), rejected.end());
        free_men.swap(rejected);
    }

    std::vector<int> wife(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) wife[static_cast<size_t>(husband[static_cast<size_t>(w)])] = w;
    result.matching = Matching::from_wives(std::move(wife));
    return result;
}

Matching da_matching(const Profile& profile) {
    DaKernel k;
    return k.run_matching(profile);
}

std::span<const int> DaKernel::run(const Profile& profile, const ListOverrides& ov) {
    const int n = profile.size();
    const auto un = static_cast<size_t>(n);
    next_.assign(un, 0);
    husband_.assign(un, -1);
    wife_.resize(un);
    stack_.clear();
    for (int m = n - 1; m >= 0; --m) stack_.push_back(m);

    while (!stack_.empty()) {
        const int m = stack_.back();
        stack_.pop_back();
        const int* list = m == ov.man ? ov.man_list.data() : profile.man_list(m).data();
        const int w = list[next_[static_cast<size_t>(m)]++];
        const int* ranks = w == ov.woman ? ov.woman_ranks.data() : profile.woman_ranks(w).data();
        int& h = husband_[static_cast<size_t>(w)];
        if (h < 0) {
            h = m;
        } else if (ranks[m] < ranks[h]) {
            stack_.push_back(h);
            h = m;
        } else {
            stack_.push_back(m);
        }
    }
    for (int w = 0; w < n; ++w) wife_[static_cast<size_t>(husband_[static_cast<size_t>(w)])] = w;
    return wife_;
}

}  // namespace matchmanip
