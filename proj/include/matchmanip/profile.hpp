#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matchmanip {

/// Thrown for malformed profiles, lists, agent labels and precondition
/// violations on list surgery.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Side : std::uint8_t { Man, Woman };

constexpr Side opposite(Side s) { return s == Side::Man ? Side::Woman : Side::Man; }

/// A man or a woman. Indices are 0-based; labels ("m1", "w3") are 1-based.
struct AgentId {
    Side side = Side::Man;
    int index = 0;

    static AgentId man(int i) { return {Side::Man, i}; }
    static AgentId woman(int i) { return {Side::Woman, i}; }

    /// Accepts "m3", "w1" or a bare 1-based integer (side taken from `expected`).
    static AgentId parse(std::string_view text, Side expected);

    std::string label() const;

    auto operator<=>(const AgentId&) const = default;
};

/// Ordered opposite-side indices, most preferred first.
using PreferenceList = std::vector<int>;

/// True iff `list` is a permutation of 0..n-1.
bool is_permutation_of_n(std::span<const int> list, int n);

/// Inverse permutation: result[list[i]] = i.
std::vector<int> ranks_of(std::span<const int> list);

/// Complete strict preferences of n men and n women. Rank tables are
/// precomputed so comparisons are O(1). Immutable after construction.
class Profile {
public:
    Profile(std::vector<PreferenceList> men, std::vector<PreferenceList> women);

    int size() const { return n_; }

    std::span<const int> man_list(int m) const { return {men_.data() + row(m), static_cast<size_t>(n_)}; }
    std::span<const int> woman_list(int w) const { return {women_.data() + row(w), static_cast<size_t>(n_)}; }
    std::span<const int> man_ranks(int m) const { return {men_rank_.data() + row(m), static_cast<size_t>(n_)}; }
    std::span<const int> woman_ranks(int w) const { return {women_rank_.data() + row(w), static_cast<size_t>(n_)}; }

    /// 0-based position of w in m's list (0 = top choice).
    int man_rank(int m, int w) const { return men_rank_[row(m) + w]; }
    int woman_rank(int w, int m) const { return women_rank_[row(w) + m]; }

    bool man_prefers(int m, int a, int b) const { return man_rank(m, a) < man_rank(m, b); }
    bool woman_prefers(int w, int a, int b) const { return woman_rank(w, a) < woman_rank(w, b); }

    /// 1-based position of `partner` in `agent`'s list.
    int rank(AgentId agent, AgentId partner) const;
    bool prefers(AgentId agent, AgentId a, AgentId b) const;

    PreferenceList list_of(AgentId agent) const;

    Profile with_man_list(int m, PreferenceList list) const;
    Profile with_woman_list(int w, PreferenceList list) const;
    Profile with_list(AgentId agent, PreferenceList list) const;

    bool operator==(const Profile& other) const { return n_ == other.n_ && men_ == other.men_ && women_ == other.women_; }

private:
    Profile() = default;
    size_t row(int i) const { return static_cast<size_t>(i) * static_cast<size_t>(n_); }
    void check_agent(AgentId a) const;
    void set_row(std::vector<int>& lists, std::vector<int>& ranks, int i, std::span<const int> list);

    int n_ = 0;
    std::vector<int> men_, women_;
    std::vector<int> men_rank_, women_rank_;
};

}  // namespace matchmanip
