#include "matchmanip/matching.hpp"

#include <numeric>

namespace matchmanip {

Matching Matching::from_wives(std::vector<int> wife_of) {
    const int n = static_cast<int>(wife_of.size());
    if (!is_permutation_of_n(wife_of, n)) throw ValidationError("matching is not a perfect matching");
    Matching mu;
    mu.husband_ = ranks_of(wife_of);
    mu.wife_ = std::move(wife_of);
    return mu;
}

Matching Matching::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return from_wives(std::move(w));
}

std::string Matching::to_string() const {
    std::string s;
    for (int m = 0; m < size(); ++m) {
        if (m) s += ' ';
        s += AgentId::man(m).label() + "-" + AgentId::woman(wife_of(m)).label();
    }
    return s;
}

bool dominates_for_women(const Profile& p, const Matching& a, const Matching& b) {
    for (int w = 0; w < p.size(); ++w)
        if (p.woman_prefers(w, b.husband_of(w), a.husband_of(w))) return false;
    return true;
}

bool dominates_for_men(const Profile& p, const Matching& a, const Matching& b) {
    for (int m = 0; m < p.size(); ++m)
        if (p.man_prefers(m, b.wife_of(m), a.wife_of(m))) return false;
    return true;
}

bool pareto_improves_women(const Profile& p, const Matching& a, const Matching& b) {
    return dominates_for_women(p, a, b) && a != b &&
           [&] {
               for (int w = 0; w < p.size(); ++w)
                   if (p.woman_prefers(w, a.husband_of(w), b.husband_of(w))) return true;
               return false;
           }();
}

std::vector<int> women_rank_deltas(const Profile& p, const Matching& before, const Matching& after) {
    std::vector<int> d(static_cast<size_t>(p.size()));
    for (int w = 0; w < p.size(); ++w)
        d[static_cast<size_t>(w)] = p.woman_rank(w, before.husband_of(w)) - p.woman_rank(w, after.husband_of(w));
    return d;
}

std::vector<int> men_rank_deltas(const Profile& p, const Matching& before, const Matching& after) {
    std::vector<int> d(static_cast<size_t>(p.size()));
    for (int m = 0; m < p.size(); ++m)
        d[static_cast<size_t>(m)] = p.man_rank(m, before.wife_of(m)) - p.man_rank(m, after.wife_of(m));
    return d;
}

}  // namespace matchmanip
