#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qpoker/game.hpp"
#include "qpoker/rational.hpp"

namespace qp {

// Named example games, exact payoffs. The poker entries are the reduced
// two-strategy forms with aliased labels.
enum class builtin {
    prisoners_dilemma,
    chicken,
    simplified_poker_reduced,
    three_player_poker_reduced,
};

strategic_game builtin_game(builtin which);
strategic_game builtin_game(const std::string& name);
std::vector<std::string> builtin_game_names();

struct zero_sum_solution {
    std::vector<rational> row;
    std::vector<rational> col;
    rational value;
    bool saddle = false;  // solved by a pure saddle point
};

// Exact optimal mixed strategies of a 2x2 zero-sum game.
zero_sum_solution solve_zero_sum_2x2(const strategic_game& g);

// Minimum expected payoff of `player` using `mix` over all pure profiles of
// the other players.
rational security_level(const strategic_game& g, int player, const std::vector<rational>& mix);

struct simplified_poker_solution {
    strategic_game reduced;
    zero_sum_solution sol;            // row = (s1, s2), col = (t1, t2)
    rational value;
    rational first_strategy_weight;   // weight of s1
    rational deceptive_weight;        // weight of s2, the always-bet plan
    rational security_reduced;        // row mix guarantee in the reduced game
    rational security_full;           // same mix embedded among all 16 plans
};

simplified_poker_solution solve_simplified_poker();

struct three_player_solution {
    double p;                       // deceptive weight shared by players 1 and 2
    double z;                       // weight of u1 in player 3's mix
    std::array<double, 3> payoffs;
    std::array<rational, 3> exact_payoffs;  // algebraic limits of the payoffs
    double indifference_gap;        // largest payoff spread across any player's two plans
    double max_regret;
    bool is_nash;                   // max_regret <= 1e-9
};

// Mixed equilibrium of the reduced three-player game: players 1 and 2 mix
// (1-p, p), player 3 mixes (z, 1-z), p the positive root of 5p^2+10p-2.
three_player_solution solve_three_player_poker();

// Chance that a bet after two initial passes runs into a concealed high card,
// given the posterior pass weight w = p/(1+p) per passer: 1 - 1/(1+p)^2.
double snap_off_probability(double p);

struct snap_off_estimate {
    double estimate = 0.0;
    double stderr_ = 0.0;
    double exact = 0.0;
    std::size_t conditioned = 0;   // deals whose first two actions were passes
    std::size_t total = 0;
};

// Monte Carlo check of the snap-off chance under equilibrium play of the
// three-player game.
snap_off_estimate simulate_snap_off(std::uint64_t seed, std::size_t deals);

}  // namespace qp
