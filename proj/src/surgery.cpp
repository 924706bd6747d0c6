#include "matchmanip/surgery.hpp"

#include <algorithm>

namespace matchmanip {

namespace {

int position_of(std::span<const int> list, int agent) {
    auto it = std::find(list.begin(), list.end(), agent);
    if (it == list.end()) throw ValidationError("agent " + std::to_string(agent + 1) + " not in list");
    return static_cast<int>(it - list.begin());
}

// Membership mask over agent indices, validating the side of the pivot.
std::vector<char> mask_of(std::span<const int> list, int pivot_pos, std::span<const int> set, bool must_be_below,
                          const char* op) {
    std::vector<char> mask(list.size(), 0);
    for (int a : set) {
        if (a < 0 || a >= static_cast<int>(list.size())) throw ValidationError(std::string(op) + ": agent out of range");
        if (mask[static_cast<size_t>(a)]) throw ValidationError(std::string(op) + ": duplicate agent");
        const int pos = position_of(list, a);
        if (pos == pivot_pos) throw ValidationError(std::string(op) + ": set contains the pivot");
        if (must_be_below && pos < pivot_pos)
            throw ValidationError(std::string(op) + ": agent " + std::to_string(a + 1) + " is already above the pivot");
        if (!must_be_below && pos > pivot_pos)
            throw ValidationError(std::string(op) + ": agent " + std::to_string(a + 1) + " is already below the pivot");
        mask[static_cast<size_t>(a)] = 1;
    }
    return mask;
}

}  // namespace

PreferenceList push_up_down(std::span<const int> true_list, int pivot, std::span<const int> up,
                            std::span<const int> down) {
    const int pivot_pos = position_of(true_list, pivot);
    auto up_mask = mask_of(true_list, pivot_pos, up, true, "push_up");
    auto down_mask = mask_of(true_list, pivot_pos, down, false, "push_down");

    PreferenceList out;
    out.reserve(true_list.size());
    auto above = true_list.subspan(0, static_cast<size_t>(pivot_pos));
    auto below = true_list.subspan(static_cast<size_t>(pivot_pos) + 1);
    for (int a : above)
        if (!down_mask[static_cast<size_t>(a)]) out.push_back(a);
    for (int a : below)
        if (up_mask[static_cast<size_t>(a)]) out.push_back(a);
    out.push_back(pivot);
    for (int a : above)
        if (down_mask[static_cast<size_t>(a)]) out.push_back(a);
    for (int a : below)
        if (!up_mask[static_cast<size_t>(a)]) out.push_back(a);
    return out;
}

PreferenceList push_up(std::span<const int> true_list, int pivot, std::span<const int> up) {
    return push_up_down(true_list, pivot, up, {});
}

PreferenceList push_down(std::span<const int> true_list, int pivot, std::span<const int> down) {
    return push_up_down(true_list, pivot, {}, down);
}

PreferenceList apply_push(std::span<const int> true_list, const PushSpec& spec) {
    return push_up_down(true_list, spec.pivot, spec.up, spec.down);
}

PreferenceList promote_to_top(std::span<const int> list, int agent) {
    return promote(list, agent, 0);
}

PreferenceList promote(std::span<const int> list, int agent, int position) {
    const int from = position_of(list, agent);
    if (position < 0 || position > from) throw ValidationError("promote: target position is not earlier");
    PreferenceList out(list.begin(), list.end());
    std::rotate(out.begin() + position, out.begin() + from, out.begin() + from + 1);
    return out;
}

bool is_inconspicuous(std::span<const int> true_list, std::span<const int> misreport) {
    if (true_list.size() != misreport.size()) return false;
    size_t i = 0;
    while (i < true_list.size() && true_list[i] == misreport[i]) ++i;
    if (i == true_list.size()) return true;
    // The first disagreement must be the promoted agent landing early.
    const int promoted = misreport[i];
    auto it = std::find(true_list.begin() + static_cast<std::ptrdiff_t>(i), true_list.end(), promoted);
    if (it == true_list.end()) return false;
    size_t a = i, b = i + 1;
    while (a < true_list.size() && b < misreport.size()) {
        if (true_list[a] == promoted) {
            ++a;
            continue;
        }
        if (true_list[a] != misreport[b]) return false;
        ++a;
        ++b;
    }
    return true;
}

std::variant<PushSpec, NormalizationFailure> decompose_as_push(std::span<const int> true_list,
                                                               std::span<const int> misreport, int pivot) {
    const int n = static_cast<int>(true_list.size());
    if (!is_permutation_of_n(true_list, n) || !is_permutation_of_n(misreport, n))
        return NormalizationFailure{"lists are not permutations of the same agents"};
    if (pivot < 0 || pivot >= n) return NormalizationFailure{"pivot is not in the lists"};
    const auto true_rank = ranks_of(true_list);
    const auto mis_rank = ranks_of(misreport);
    const auto p = static_cast<size_t>(pivot);
    PushSpec spec{pivot, {}, {}};
    for (int a = 0; a < n; ++a) {
        if (a == pivot) continue;
        const auto ua = static_cast<size_t>(a);
        const bool was_above = true_rank[ua] < true_rank[p];
        const bool now_above = mis_rank[ua] < mis_rank[p];
        if (!was_above && now_above) spec.up.push_back(a);
        if (was_above && !now_above) spec.down.push_back(a);
    }
    return spec;
}

}  // namespace matchmanip
