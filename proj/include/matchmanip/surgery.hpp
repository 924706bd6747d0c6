#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "matchmanip/profile.hpp"

namespace matchmanip {

/// A single agent's submitted list.
struct Misreport {
    AgentId agent;
    PreferenceList list;
    bool operator==(const Misreport&) const = default;
};

/// Push-up / push-down normal form of a list around `pivot`.
/// `up` holds agents moved from below the pivot to above it, `down` the
/// reverse. Both sorted by index, disjoint, and never containing the pivot.
struct PushSpec {
    int pivot = 0;
    std::vector<int> up;
    std::vector<int> down;
    bool operator==(const PushSpec&) const = default;
};

struct NormalizationFailure {
    std::string reason;
};

/// Moves `up` (all strictly below `pivot`) into a block immediately above
/// the pivot, keeping true-list order inside every block.
PreferenceList push_up(std::span<const int> true_list, int pivot, std::span<const int> up);

/// Moves `down` (all strictly above `pivot`) into a block immediately below
/// the pivot.
PreferenceList push_down(std::span<const int> true_list, int pivot, std::span<const int> down);

/// Both at once: (above \ down, up, pivot, down, below \ up).
PreferenceList push_up_down(std::span<const int> true_list, int pivot, std::span<const int> up,
                            std::span<const int> down);

PreferenceList apply_push(std::span<const int> true_list, const PushSpec& spec);

PreferenceList promote_to_top(std::span<const int> list, int agent);

/// Moves `agent` to position `position` (0-based), shifting the agents in
/// between one place down. Requires position <= current position.
PreferenceList promote(std::span<const int> list, int agent, int position);

/// True iff `misreport` is `true_list` with at most one agent moved earlier.
bool is_inconspicuous(std::span<const int> true_list, std::span<const int> misreport);

/// Reads off which agents crossed the pivot. Fails when the lists are not
/// permutations of the same agents or the pivot is missing.
std::variant<PushSpec, NormalizationFailure> decompose_as_push(std::span<const int> true_list,
                                                               std::span<const int> misreport, int pivot);

}  // namespace matchmanip
