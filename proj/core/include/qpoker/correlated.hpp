#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qpoker/game.hpp"
#include "qpoker/mixed.hpp"

namespace qp {

// Joint distribution over pure profiles, indexed like the game's flat
// profiles.
using correlated_distribution = std::vector<rational>;

void validate_distribution(const strategic_game& g, const correlated_distribution& rho);

std::vector<rational> correlated_payoffs(const strategic_game& g,
                                         const correlated_distribution& rho);

struct obedience_check {
    bool ok = true;
    rational worst_gain;       // best deviation gain, positive when not an equilibrium
    int player = -1;
    std::size_t signal = 0;
    std::size_t deviation = 0;
};

// Obedience constraints of the signal device: no player gains by deviating
// from a recommendation with positive mass. Zero-mass signals bind nothing.
obedience_check check_correlated_equilibrium(const strategic_game& g,
                                             const correlated_distribution& rho);

correlated_distribution product_distribution(const strategic_game& g,
                                             const std::vector<std::vector<rational>>& mix);

// Whether rho factors as a product of marginals; for two players this is a
// rank-one test on the joint matrix, exact.
bool is_product_realizable(const strategic_game& g, const correlated_distribution& rho);

// The commitment meta-game of a signal device: each player chooses a
// response function to her recommendation. With two base strategies the
// responses are always-first, always-second, obey, invert.
strategic_game build_mediated_game(const strategic_game& g, const correlated_distribution& rho);

// Index of the obedient response in the mediated game's strategy order.
std::size_t mediated_obey_index();

// rho is a correlated equilibrium iff all-obey is a Nash profile of the
// mediated game.
bool mediated_obedience_holds(const strategic_game& g, const correlated_distribution& rho);

}  // namespace qp
