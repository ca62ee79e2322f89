#include "qpoker/solvers.hpp"

#include <cmath>
#include <stdexcept>

#include "qpoker/mixed.hpp"
#include "qpoker/poker.hpp"
#include "qpoker/sampling.hpp"

namespace qp {

namespace {

strategic_game bimatrix(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                        const std::vector<std::vector<std::array<rational, 2>>>& cells,
                        bool zero_sum) {
    strategic_game g({rows, cols}, zero_sum);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) {
            g.payoff({r, c}, 0) = cells[r][c][0];
            g.payoff({r, c}, 1) = cells[r][c][1];
        }
    return g;
}

std::vector<std::vector<std::string>> alias_labels(int players) {
    std::vector<std::vector<std::string>> labels;
    for (int p = 0; p < players; ++p)
        labels.push_back({reduced_alias(p, 0), reduced_alias(p, 1)});
    return labels;
}

std::vector<std::vector<unsigned>> table_ids(const poker_spec& spec) {
    std::vector<std::vector<unsigned>> ids;
    for (const auto& pair : table_plan_ids(spec)) ids.push_back({pair[0], pair[1]});
    return ids;
}

}  // namespace

strategic_game builtin_game(builtin which) {
    rational z(0);
    switch (which) {
        case builtin::prisoners_dilemma:
            return bimatrix({"C", "D"}, {"C", "D"},
                            {{{rational(3), rational(3)}, {z, rational(5)}},
                             {{rational(5), z}, {rational(1), rational(1)}}},
                            false);
        case builtin::chicken:
            return bimatrix({"swerve", "straight"}, {"swerve", "straight"},
                            {{{rational(2), rational(2)}, {z, rational(3)}},
                             {{rational(3), z}, {rational(-1), rational(-1)}}},
                            false);
        case builtin::simplified_poker_reduced: {
            poker_spec spec(poker_variant::simplified, rational(15), rational(10));
            return restricted_strategic_form(spec, table_ids(spec), alias_labels(2));
        }
        case builtin::three_player_poker_reduced: {
            poker_spec spec(poker_variant::three_player, rational(16), rational(64));
            return restricted_strategic_form(spec, table_ids(spec), alias_labels(3));
        }
    }
    throw std::invalid_argument("builtin_game: unknown id");
}

strategic_game builtin_game(const std::string& name) {
    if (name == "prisoners-dilemma") return builtin_game(builtin::prisoners_dilemma);
    if (name == "chicken") return builtin_game(builtin::chicken);
    if (name == "simplified-poker") return builtin_game(builtin::simplified_poker_reduced);
    if (name == "three-player-poker") return builtin_game(builtin::three_player_poker_reduced);
    throw std::invalid_argument("builtin_game: unknown name '" + name + "'");
}

std::vector<std::string> builtin_game_names() {
    return {"prisoners-dilemma", "chicken", "simplified-poker", "three-player-poker"};
}

zero_sum_solution solve_zero_sum_2x2(const strategic_game& g) {
    if (g.players() != 2 || g.count(0) != 2 || g.count(1) != 2)
        throw std::invalid_argument("solve_zero_sum_2x2: need a 2x2 bimatrix");
    if (!check_zero_sum(g)) throw std::invalid_argument("solve_zero_sum_2x2: not zero-sum");
    rational a = g.payoff({0, 0}, 0), b = g.payoff({0, 1}, 0);
    rational c = g.payoff({1, 0}, 0), d = g.payoff({1, 1}, 0);

    // Pure saddle: an entry minimal in its row and maximal in its column.
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t cidx = 0; cidx < 2; ++cidx) {
            rational v = g.payoff({r, cidx}, 0);
            rational row_other = g.payoff({r, 1 - cidx}, 0);
            rational col_other = g.payoff({1 - r, cidx}, 0);
            if (!(row_other < v) && !(v < col_other)) {
                zero_sum_solution sol;
                sol.row = {rational(r == 0 ? 1 : 0), rational(r == 0 ? 0 : 1)};
                sol.col = {rational(cidx == 0 ? 1 : 0), rational(cidx == 0 ? 0 : 1)};
                sol.value = v;
                sol.saddle = true;
                return sol;
            }
        }

    rational det = a - b - c + d;
    zero_sum_solution sol;
    rational x = (d - c) / det;  // weight of row 1
    rational y = (d - b) / det;  // weight of column 1
    sol.row = {x, rational(1) - x};
    sol.col = {y, rational(1) - y};
    sol.value = (a * d - b * c) / det;
    return sol;
}

rational security_level(const strategic_game& g, int player, const std::vector<rational>& mix) {
    if (player < 0 || player >= g.players()) throw std::out_of_range("security_level: player");
    if (mix.size() != g.count(player)) throw std::invalid_argument("security_level: mix length");
    bool first = true;
    rational worst;
    std::vector<std::size_t> profile(std::size_t(g.players()), 0);
    while (true) {
        rational e;
        for (std::size_t s = 0; s < mix.size(); ++s) {
            profile[std::size_t(player)] = s;
            e += mix[s] * g.payoff(profile, player);
        }
        if (first || e < worst) {
            worst = e;
            first = false;
        }
        int k = g.players() - 1;
        while (k >= 0) {
            if (k == player) {
                --k;
                continue;
            }
            if (profile[std::size_t(k)] + 1 < g.count(k)) {
                ++profile[std::size_t(k)];
                break;
            }
            profile[std::size_t(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return worst;
}

simplified_poker_solution solve_simplified_poker() {
    simplified_poker_solution out;
    out.reduced = builtin_game(builtin::simplified_poker_reduced);
    out.sol = solve_zero_sum_2x2(out.reduced);
    out.value = out.sol.value;
    out.first_strategy_weight = out.sol.row[0];
    out.deceptive_weight = out.sol.row[1];
    out.security_reduced = security_level(out.reduced, 0, out.sol.row);

    poker_spec spec(poker_variant::simplified, rational(15), rational(10));
    strategic_game full = strategic_form(spec);
    std::vector<rational> embedded(full.count(0), rational(0));
    auto ids = table_plan_ids(spec);
    embedded[ids[0][0]] = out.sol.row[0];
    embedded[ids[0][1]] = out.sol.row[1];
    out.security_full = security_level(full, 0, embedded);
    return out;
}

three_player_solution solve_three_player_poker() {
    three_player_solution out;
    out.p = std::sqrt(7.0 / 5.0) - 1.0;  // positive root of 5p^2 + 10p - 2
    out.z = (4.0 * out.p + 8.0) / (5.0 * out.p + 12.0);

    real_game g = to_real(builtin_game(builtin::three_player_poker_reduced));
    std::vector<std::vector<double>> mix = {
        {1.0 - out.p, out.p}, {1.0 - out.p, out.p}, {out.z, 1.0 - out.z}};
    auto rep = analyze_profile(g, mix);
    for (int p = 0; p < 3; ++p) out.payoffs[std::size_t(p)] = rep.values[std::size_t(p)];
    out.exact_payoffs = {rational(-2, 5), rational(-2, 5), rational(4, 5)};
    out.indifference_gap = 0.0;
    for (int p = 0; p < 3; ++p) {
        double gap = std::abs(rep.pure[std::size_t(p)][0] - rep.pure[std::size_t(p)][1]);
        if (gap > out.indifference_gap) out.indifference_gap = gap;
    }
    out.max_regret = rep.max_regret;
    out.is_nash = rep.max_regret <= 1e-9;
    return out;
}

double snap_off_probability(double p) {
    if (p < 0.0 || p > 1.0) throw std::domain_error("snap_off_probability: p in [0,1]");
    double q = 1.0 + p;
    return 1.0 - 1.0 / (q * q);
}

snap_off_estimate simulate_snap_off(std::uint64_t seed, std::size_t deals) {
    if (deals == 0) throw std::invalid_argument("simulate_snap_off: need deals");
    three_player_solution eq = solve_three_player_poker();
    poker_spec spec(poker_variant::three_player, rational(16), rational(64));
    auto ids = table_plan_ids(spec);
    int sets = spec.info_sets();

    snap_off_estimate est;
    est.total = deals;
    est.exact = snap_off_probability(eq.p);
    rng_stream rng(seed);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < deals; ++i) {
        std::array<card, 3> cards{};
        for (int p = 0; p < 3; ++p)
            cards[std::size_t(p)] = rng.uniform() < 0.5 ? card::high : card::low;
        std::vector<pure_strategy_plan> plans(3);
        double w1 = rng.uniform(), w2 = rng.uniform(), w3 = rng.uniform();
        plans[0] = pure_strategy_plan::from_id(w1 < eq.p ? ids[0][1] : ids[0][0], sets);
        plans[1] = pure_strategy_plan::from_id(w2 < eq.p ? ids[1][1] : ids[1][0], sets);
        plans[2] = pure_strategy_plan::from_id(w3 < eq.z ? ids[2][0] : ids[2][1], sets);
        auto res = play_out(spec, cards, plans);
        if (res.sequence.size() >= 2 && res.sequence[0] == 'P' && res.sequence[1] == 'P') {
            ++est.conditioned;
            if (cards[0] == card::high || cards[1] == card::high) ++hits;
        }
    }
    if (est.conditioned == 0) return est;
    est.estimate = double(hits) / double(est.conditioned);
    est.stderr_ = std::sqrt(est.estimate * (1.0 - est.estimate) / double(est.conditioned));
    return est;
}

}  // namespace qp
