#include "matchmanip/two_for_one.hpp"

#include <algorithm>
#include <climits>

#include <omp.h>

#include "matchmanip/one_for_one.hpp"

namespace matchmanip {

std::vector<PreferenceList> woman_candidate_lists(const Profile& profile, int w) {
    const int n = profile.size();
    const auto true_list = profile.woman_list(w);
    std::vector<PreferenceList> out;
    out.reserve(static_cast<size_t>(n) * static_cast<size_t>(std::max(n - 1, 0)));
    for (int first = 0; first < n; ++first) {
        for (int second = 0; second < n; ++second) {
            if (first == second) continue;
            PreferenceList list{first, second};
            for (int x : true_list)
                if (x != first && x != second) list.push_back(x);
            out.push_back(std::move(list));
        }
    }
    return out;
}

std::vector<PreferenceList> accomplice_candidate_lists(const Profile& profile, int m, int partner) {
    const int n = profile.size();
    std::vector<PreferenceList> out;
    out.reserve(static_cast<size_t>(n));
    out.push_back(promote_to_top(profile.man_list(m), partner));
    for (int other = 0; other < n; ++other)
        if (other != partner) out.push_back(promote_to_top(out.front(), other));
    return out;
}

namespace {

// Rows are woman lists, columns man lists; row 0 and column 0 are truthful.
struct Grid {
    std::vector<PreferenceList> woman_lists;
    std::vector<std::vector<int>> woman_ranks;
    std::vector<PreferenceList> man_lists;
    int partner = 0;
    int truthful_rank = 0;
};

Grid build_grid(const Profile& profile, int m, int w, const Matching& truthful) {
    Grid g;
    g.partner = truthful.wife_of(m);
    g.truthful_rank = profile.woman_rank(w, truthful.husband_of(w));
    const auto wl = profile.woman_list(w);
    g.woman_lists.emplace_back(wl.begin(), wl.end());
    for (auto& l : woman_candidate_lists(profile, w)) g.woman_lists.push_back(std::move(l));
    for (const auto& l : g.woman_lists) g.woman_ranks.push_back(ranks_of(l));
    const auto ml = profile.man_list(m);
    g.man_lists.emplace_back(ml.begin(), ml.end());
    for (auto& l : accomplice_candidate_lists(profile, m, g.partner)) g.man_lists.push_back(std::move(l));
    return g;
}

struct Cell {
    int rank = INT_MAX;
    int row = 0;
    int col = 0;
    bool before(const Cell& o) const {
        if (rank != o.rank) return rank < o.rank;
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
};

// True rank of the woman's partner, or INT_MAX when the man's partner moved.
int evaluate(const Profile& profile, const Grid& g, int m, int w, int row, int col, DaKernel& kernel) {
    auto wives = kernel.run(profile, {.man = m,
                                      .man_list = g.man_lists[static_cast<size_t>(col)],
                                      .woman = w,
                                      .woman_ranks = g.woman_ranks[static_cast<size_t>(row)]});
    if (wives[static_cast<size_t>(m)] != g.partner) return INT_MAX;
    return profile.woman_rank(w, kernel.husbands()[static_cast<size_t>(w)]);
}

PairStrategy finish(const Profile& profile, int m, int w, const Matching& truthful, const Grid& g, Cell best) {
    PairStrategy s;
    s.man = m;
    s.woman = w;
    s.man_report = {AgentId::man(m), g.man_lists[static_cast<size_t>(best.col)]};
    s.woman_report = {AgentId::woman(w), g.woman_lists[static_cast<size_t>(best.row)]};
    s.truthful = truthful;
    s.matching = da_matching(profile.with_man_list(m, s.man_report.list).with_woman_list(w, s.woman_report.list));
    s.w_rank_delta = g.truthful_rank - profile.woman_rank(w, s.matching.husband_of(w));
    s.improved = s.w_rank_delta > 0;
    s.no_regret = s.matching.wife_of(m) == truthful.wife_of(m);
    s.blocking = blocking_pairs(profile, s.matching);
    s.m_stable = std::all_of(s.blocking.begin(), s.blocking.end(), [&](const BlockingPair& b) { return b.man == m; });
    s.mw_stable = std::all_of(s.blocking.begin(), s.blocking.end(),
                              [&](const BlockingPair& b) { return b.man == m || b.woman == w; });
    s.inconspicuous = is_inconspicuous(profile.man_list(m), s.man_report.list) &&
                      is_inconspicuous(profile.woman_list(w), s.woman_report.list);
    return s;
}

}  // namespace

PairStrategy optimal_pair_manipulation(const Profile& profile, int m, int w) {
    DaKernel kernel;
    const Matching truthful = kernel.run_matching(profile);
    const Grid g = build_grid(profile, m, w, truthful);
    const int rows = static_cast<int>(g.woman_lists.size());
    const int cols = static_cast<int>(g.man_lists.size());

    Cell best{g.truthful_rank, 0, 0};
    for (int row = 0; row < rows && best.rank > 0; ++row) {
        for (int col = 0; col < cols; ++col) {
            if (row == 0 && col == 0) continue;
            const int r = evaluate(profile, g, m, w, row, col, kernel);
            if (r < best.rank) {
                best = {r, row, col};
                if (r == 0) break;
            }
        }
    }
    return finish(profile, m, w, truthful, g, best);
}

PairStrategy optimal_pair_manipulation_parallel(const Profile& profile, int m, int w, int threads) {
    const Matching truthful = da_matching(profile);
    const Grid g = build_grid(profile, m, w, truthful);
    const int rows = static_cast<int>(g.woman_lists.size());
    const int cols = static_cast<int>(g.man_lists.size());

    Cell best{g.truthful_rank, 0, 0};
#pragma omp parallel num_threads(std::max(threads, 1))
    {
        DaKernel kernel;
        Cell local = best;
#pragma omp for schedule(static)
        for (int row = 0; row < rows; ++row) {
            for (int col = 0; col < cols; ++col) {
                if (row == 0 && col == 0) continue;
                const Cell c{evaluate(profile, g, m, w, row, col, kernel), row, col};
                if (c.before(local)) local = c;
            }
        }
#pragma omp critical(matchmanip_pair_reduce)
        if (local.before(best)) best = local;
    }
    return finish(profile, m, w, truthful, g, best);
}

bool pair_manipulable(const Profile& profile, int m, int w, DaKernel& kernel) {
    const Matching truthful = kernel.run_matching(profile);
    const Grid g = build_grid(profile, m, w, truthful);
    if (g.truthful_rank == 0) return false;
    const int rows = static_cast<int>(g.woman_lists.size());
    const int cols = static_cast<int>(g.man_lists.size());
    for (int row = 0; row < rows; ++row)
        for (int col = 0; col < cols; ++col)
            if ((row || col) && evaluate(profile, g, m, w, row, col, kernel) < g.truthful_rank) return true;
    return false;
}

PairComparison pair_dominates_individuals(const Profile& profile, int m, int w) {
    const auto self = optimal_self_manipulation(profile, w);
    const auto accomplice = optimal_accomplice_manipulation(profile, m, w);
    const auto pair = optimal_pair_manipulation(profile, m, w);
    PairComparison c;
    c.truthful_rank = profile.woman_rank(w, self.truthful.husband_of(w)) + 1;
    c.self_rank = profile.woman_rank(w, self.matching.husband_of(w)) + 1;
    c.accomplice_rank = profile.woman_rank(w, accomplice.matching.husband_of(w)) + 1;
    c.pair_rank = profile.woman_rank(w, pair.matching.husband_of(w)) + 1;
    c.pair_dominates = c.pair_rank <= std::min(c.self_rank, c.accomplice_rank);
    c.pair_strictly_better = c.pair_rank < std::min(c.self_rank, c.accomplice_rank);
    return c;
}

}  // namespace matchmanip
