#pragma once

#include <cstddef>
#include <vector>

#include "qpoker/game.hpp"
#include "qpoker/poker.hpp"

namespace qp {

enum class dominance_mode { strong, weak };

// Identical payoff vectors at every profile of the other players.
bool payoff_equivalent(const strategic_game& g, int player, std::size_t x, std::size_t y);

struct quotient_result {
    strategic_game game;  // one representative per class
    std::vector<std::vector<std::vector<std::size_t>>> classes;  // per player, per class
    std::vector<std::vector<std::size_t>> representative;        // per player
};

quotient_result quotient_by_payoff_equivalence(const strategic_game& g);

// True iff y does at least as well as x for `player` against every surviving
// opponent combination, strictly somewhere (weak) or everywhere (strong).
bool dominates(const strategic_game& g, int player, std::size_t x, std::size_t y,
               dominance_mode mode, const std::vector<std::vector<std::size_t>>& alive);

struct reduction_result {
    strategic_game game;
    std::vector<std::vector<std::size_t>> surviving;  // original indices per player
    std::vector<elimination_step> trace;
};

// Iterated elimination, scanning players round-robin, removing the first
// dominated strategy found and rechecking after every removal. Runs a strong
// phase to a fixed point, then a weak phase, when both are enabled.
reduction_result reduce_by_dominance(const strategic_game& g, bool strong_phase = true,
                                     bool weak_phase = true);

}  // namespace qp
