#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "matchmanip/matching.hpp"
#include "matchmanip/profile.hpp"

namespace matchmanip {

/// Parses the text profile format:
///
///     n
///     <n lines: man i's list of woman indices, 1-based>
///     <n lines: woman i's list of man indices, 1-based>
///
/// '#' starts a comment and blank lines are ignored. Errors name the line.
Profile parse_profile(std::string_view text);
Profile read_profile_file(const std::filesystem::path& path);

/// Canonical text form; parse_profile(format_profile(p)) == p.
std::string format_profile(const Profile& profile);

/// "w3 w1 w4" style rendering of a list owned by an agent on `owner_side`.
std::string format_list(Side owner_side, std::span<const int> list);
/// Inverse of format_list; also accepts bare 1-based integers.
PreferenceList parse_list(Side owner_side, std::string_view text);

/// {"pairs": [[1,3],[2,4],...]} with 1-based indices, ordered by man.
nlohmann::json matching_to_json(const Matching& matching);
Matching matching_from_json(const nlohmann::json& j);

}  // namespace matchmanip
