#include "matchmanip/profile.hpp"

#include <charconv>

namespace matchmanip {

AgentId AgentId::parse(std::string_view text, Side expected) {
    std::string_view digits = text;
    Side side = expected;
    if (!text.empty() && (text.front() == 'm' || text.front() == 'w')) {
        side = text.front() == 'm' ? Side::Man : Side::Woman;
        digits.remove_prefix(1);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
        throw ValidationError("invalid agent label '" + std::string(text) + "'");
    }
    if (side != expected) {
        throw ValidationError("agent '" + std::string(text) + "' is on the wrong side");
    }
    return {side, value - 1};
}

std::string AgentId::label() const {
    return (side == Side::Man ? "m" : "w") + std::to_string(index + 1);
}

bool is_permutation_of_n(std::span<const int> list, int n) {
    if (static_cast<int>(list.size()) != n) return false;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int x : list) {
        if (x < 0 || x >= n || seen[static_cast<size_t>(x)]) return false;
        seen[static_cast<size_t>(x)] = 1;
    }
    return true;
}

std::vector<int> ranks_of(std::span<const int> list) {
    std::vector<int> r(list.size());
    for (size_t i = 0; i < list.size(); ++i) r[static_cast<size_t>(list[i])] = static_cast<int>(i);
    return r;
}

Profile::Profile(std::vector<PreferenceList> men, std::vector<PreferenceList> women) {
    n_ = static_cast<int>(men.size());
    if (n_ < 1) throw ValidationError("profile must contain at least one man and one woman");
    if (women.size() != men.size()) throw ValidationError("profile must have as many women as men");
    men_.resize(row(n_));
    women_.resize(row(n_));
    men_rank_.resize(row(n_));
    women_rank_.resize(row(n_));
    for (int i = 0; i < n_; ++i) {
        if (!is_permutation_of_n(men[static_cast<size_t>(i)], n_))
            throw ValidationError("list of " + AgentId::man(i).label() + " is not a permutation of all women");
        if (!is_permutation_of_n(women[static_cast<size_t>(i)], n_))
            throw ValidationError("list of " + AgentId::woman(i).label() + " is not a permutation of all men");
        set_row(men_, men_rank_, i, men[static_cast<size_t>(i)]);
        set_row(women_, women_rank_, i, women[static_cast<size_t>(i)]);
    }
}

void Profile::set_row(std::vector<int>& lists, std::vector<int>& ranks, int i, std::span<const int> list) {
    for (int k = 0; k < n_; ++k) {
        lists[row(i) + static_cast<size_t>(k)] = list[static_cast<size_t>(k)];
        ranks[row(i) + static_cast<size_t>(list[static_cast<size_t>(k)])] = k;
    }
}

void Profile::check_agent(AgentId a) const {
    if (a.index < 0 || a.index >= n_) throw ValidationError("agent " + a.label() + " is out of range");
}

int Profile::rank(AgentId agent, AgentId partner) const {
    check_agent(agent);
    check_agent(partner);
    if (agent.side == partner.side) throw ValidationError("rank requires agents on opposite sides");
    return 1 + (agent.side == Side::Man ? man_rank(agent.index, partner.index) : woman_rank(agent.index, partner.index));
}

bool Profile::prefers(AgentId agent, AgentId a, AgentId b) const {
    return rank(agent, a) < rank(agent, b);
}

PreferenceList Profile::list_of(AgentId agent) const {
    check_agent(agent);
    auto l = agent.side == Side::Man ? man_list(agent.index) : woman_list(agent.index);
    return {l.begin(), l.end()};
}

Profile Profile::with_man_list(int m, PreferenceList list) const {
    check_agent(AgentId::man(m));
    if (!is_permutation_of_n(list, n_))
        throw ValidationError("replacement list of " + AgentId::man(m).label() + " is not a permutation");
    Profile p = *this;
    p.set_row(p.men_, p.men_rank_, m, list);
    return p;
}

Profile Profile::with_woman_list(int w, PreferenceList list) const {
    check_agent(AgentId::woman(w));
    if (!is_permutation_of_n(list, n_))
        throw ValidationError("replacement list of " + AgentId::woman(w).label() + " is not a permutation");
    Profile p = *this;
    p.set_row(p.women_, p.women_rank_, w, list);
    return p;
}

Profile Profile::with_list(AgentId agent, PreferenceList list) const {
    return agent.side == Side::Man ? with_man_list(agent.index, std::move(list))
                                   : with_woman_list(agent.index, std::move(list));
}

}  // namespace matchmanip
