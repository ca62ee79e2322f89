#include "qpoker/dominance.hpp"

#include <numeric>

namespace qp {

namespace {

// Walks all profiles of players other than `player`, with `player` pinned to
// each of x and y in turn; f(fx, fy) sees the two flat indices.
template <typename F>
void for_each_opponent_profile(const strategic_game& g, int player, std::size_t x, std::size_t y,
                               const std::vector<std::vector<std::size_t>>& alive, F&& f) {
    int n = g.players();
    std::vector<std::size_t> oi(std::size_t(n), 0);
    std::vector<std::size_t> profile(std::size_t(n), 0);
    while (true) {
        for (int p = 0; p < n; ++p)
            if (p != player) profile[std::size_t(p)] = alive[std::size_t(p)][oi[std::size_t(p)]];
        profile[std::size_t(player)] = x;
        std::size_t fx = g.flat_index(profile);
        profile[std::size_t(player)] = y;
        std::size_t fy = g.flat_index(profile);
        if (!f(fx, fy)) return;
        int k = n - 1;
        while (k >= 0) {
            if (k == player) {
                --k;
                continue;
            }
            if (oi[std::size_t(k)] + 1 < alive[std::size_t(k)].size()) {
                ++oi[std::size_t(k)];
                break;
            }
            oi[std::size_t(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
}

std::vector<std::vector<std::size_t>> full_alive(const strategic_game& g) {
    std::vector<std::vector<std::size_t>> alive(std::size_t(g.players()));
    for (int p = 0; p < g.players(); ++p) {
        alive[std::size_t(p)].resize(g.count(p));
        std::iota(alive[std::size_t(p)].begin(), alive[std::size_t(p)].end(), 0);
    }
    return alive;
}

strategic_game subgame(const strategic_game& g,
                       const std::vector<std::vector<std::size_t>>& keep) {
    int n = g.players();
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        for (std::size_t s : keep[std::size_t(p)])
            labels[std::size_t(p)].push_back(g.label(p, s));
    strategic_game out(labels, g.zero_sum());
    std::vector<std::size_t> profile(static_cast<std::size_t>(n));
    for (std::size_t f = 0; f < out.total_profiles(); ++f) {
        std::size_t rem = f;
        for (int p = n - 1; p >= 0; --p) {
            profile[std::size_t(p)] = keep[std::size_t(p)][rem % out.count(p)];
            rem /= out.count(p);
        }
        std::size_t src = g.flat_index(profile);
        for (int p = 0; p < n; ++p) out.payoff(f, p) = g.payoff(src, p);
    }
    return out;
}

}  // namespace

bool payoff_equivalent(const strategic_game& g, int player, std::size_t x, std::size_t y) {
    auto alive = full_alive(g);
    bool equal = true;
    for_each_opponent_profile(g, player, x, y, alive, [&](std::size_t fx, std::size_t fy) {
        for (int p = 0; p < g.players(); ++p)
            if (!(g.payoff(fx, p) == g.payoff(fy, p))) {
                equal = false;
                return false;
            }
        return true;
    });
    return equal;
}

quotient_result quotient_by_payoff_equivalence(const strategic_game& g) {
    quotient_result out;
    int n = g.players();
    out.classes.resize(static_cast<std::size_t>(n));
    out.representative.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        for (std::size_t s = 0; s < g.count(p); ++s) {
            bool placed = false;
            for (auto& cls : out.classes[std::size_t(p)])
                if (payoff_equivalent(g, p, cls.front(), s)) {
                    cls.push_back(s);
                    placed = true;
                    break;
                }
            if (!placed) out.classes[std::size_t(p)].push_back({s});
        }
        for (const auto& cls : out.classes[std::size_t(p)])
            out.representative[std::size_t(p)].push_back(cls.front());
    }
    out.game = subgame(g, out.representative);
    return out;
}

bool dominates(const strategic_game& g, int player, std::size_t x, std::size_t y,
               dominance_mode mode, const std::vector<std::vector<std::size_t>>& alive) {
    bool strict_seen = false;
    bool dominated = true;
    for_each_opponent_profile(g, player, x, y, alive, [&](std::size_t fx, std::size_t fy) {
        const rational& px = g.payoff(fx, player);
        const rational& py = g.payoff(fy, player);
        if (py < px || (mode == dominance_mode::strong && py == px)) {
            dominated = false;
            return false;
        }
        if (px < py) strict_seen = true;
        return true;
    });
    return dominated && strict_seen;
}

reduction_result reduce_by_dominance(const strategic_game& g, bool strong_phase,
                                     bool weak_phase) {
    reduction_result out;
    int n = g.players();
    auto alive = full_alive(g);
    int round = 1;

    auto run_phase = [&](dominance_mode mode) {
        bool removed_this_cycle = true;
        while (removed_this_cycle) {
            removed_this_cycle = false;
            for (int pl = 0; pl < n; ++pl) {
                bool removed = false;
                auto& mine = alive[std::size_t(pl)];
                for (std::size_t xi = 0; xi < mine.size() && !removed; ++xi)
                    for (std::size_t yi = 0; yi < mine.size() && !removed; ++yi) {
                        if (xi == yi) continue;
                        if (dominates(g, pl, mine[xi], mine[yi], mode, alive)) {
                            out.trace.push_back(
                                {round, pl + 1, g.label(pl, mine[xi]), g.label(pl, mine[yi]),
                                 mode == dominance_mode::strong ? "strong" : "weak"});
                            mine.erase(mine.begin() + long(xi));
                            removed = true;
                            removed_this_cycle = true;
                        }
                    }
            }
            ++round;
        }
    };

    if (strong_phase) run_phase(dominance_mode::strong);
    if (weak_phase) run_phase(dominance_mode::weak);

    out.surviving = alive;
    out.game = subgame(g, alive);
    return out;
}

}  // namespace qp
