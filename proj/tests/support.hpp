#pragma once

#include <string>
#include <vector>

#include "matchmanip/matching.hpp"
#include "matchmanip/profile.hpp"
#include "matchmanip/profile_io.hpp"

namespace testing {

using matchmanip::Matching;
using matchmanip::Profile;

// Lists are written 1-based, as in the fixture files.
inline Profile profile1(std::vector<std::vector<int>> men, std::vector<std::vector<int>> women) {
    for (auto* side : {&men, &women})
        for (auto& list : *side)
            for (int& x : list) --x;
    return Profile(std::move(men), std::move(women));
}

inline std::vector<int> list1(std::vector<int> list) {
    for (int& x : list) --x;
    return list;
}

inline Matching wives1(std::vector<int> wives) { return Matching::from_wives(list1(std::move(wives))); }

inline Profile fixture(const std::string& name) {
    return matchmanip::read_profile_file(std::string(MATCHMANIP_FIXTURE_DIR) + "/" + name);
}

}  // namespace testing
