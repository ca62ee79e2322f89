#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qpoker/game.hpp"
#include "qpoker/rational.hpp"

namespace qp {

enum class poker_variant { simplified, three_player };

// Ante and bet sizes for the two endgame models. Two players for simplified,
// three for the positional model.
struct poker_spec {
    poker_variant variant = poker_variant::simplified;
    rational ante{0};
    rational bet{0};

    poker_spec() = default;
    poker_spec(poker_variant v, rational a, rational b);

    int players() const { return variant == poker_variant::simplified ? 2 : 3; }
    // Decision points per player: 1 in the two-player game, 4 in the
    // three-player game.
    int info_sets() const { return variant == poker_variant::simplified ? 1 : 4; }
    int plans_per_player() const { return 1 << (2 * info_sets()); }
};

enum class card : int { low = 0, high = 1 };

// Bet bits per information set, one mask per held card. Encoded id is
// h_bits * 2^sets + l_bits, matching the label order of the plan tables.
struct pure_strategy_plan {
    unsigned h_bits = 0;
    unsigned l_bits = 0;

    unsigned id(int sets) const { return (h_bits << sets) | l_bits; }
    static pure_strategy_plan from_id(unsigned id, int sets) {
        unsigned mask = (1u << sets) - 1;
        return {id >> sets, id & mask};
    }
    bool bets(card c, int info_set) const {
        unsigned bits = (c == card::high) ? h_bits : l_bits;
        return (bits >> info_set) & 1u;
    }
};

// Context labels of each player's decision points, in bit order.
std::vector<std::string> info_set_labels(const poker_spec& spec, int player);

// Human-readable plan label, e.g. "H=BPBB,L=PPPP" or "H=B,L=P".
std::string plan_label(const poker_spec& spec, unsigned plan_id);

std::vector<pure_strategy_plan> enumerate_pure_strategies(const poker_spec& spec, int player);

// All terminal action sequences, sorted with B before P.
std::vector<std::string> enumerate_action_sequences(const poker_spec& spec);

std::vector<std::array<card, 3>> enumerate_deals(const poker_spec& spec);

struct play_result {
    std::string sequence;
    std::vector<rational> payoffs;
};

// Deterministic play of one deal. Folders lose their ante, an uncontested
// bettor takes the pot, showdowns split ties exactly; the three-player
// all-pass play returns the antes.
play_result play_out(const poker_spec& spec, const std::array<card, 3>& cards,
                     const std::vector<pure_strategy_plan>& plans);

// Full strategic form over every plan. The three-player tensor has 256^3
// profiles; prefer build_poker for analysis.
strategic_game strategic_form(const poker_spec& spec);

// Strategic form restricted to the given plan ids per player.
strategic_game restricted_strategic_form(const poker_spec& spec,
                                         const std::vector<std::vector<unsigned>>& plan_ids,
                                         const std::vector<std::vector<std::string>>& labels);

struct elimination_step {
    int round = 0;
    int player = 0;
    std::string removed;
    std::string dominator;
    std::string mode;
};

// Payoff-equivalence classes of one player's plans.
struct plan_classes {
    std::vector<std::vector<unsigned>> members;  // per class, plan ids
    std::vector<unsigned> representative;        // per class
};

struct poker_build {
    poker_spec spec;
    std::vector<std::string> action_sequences;
    std::vector<plan_classes> classes;       // per player
    std::vector<std::size_t> class_counts;   // per player
    strategic_game reduced;                  // survivors after dominance
    std::vector<std::vector<unsigned>> surviving_representatives;  // per player, plan ids
    std::vector<elimination_step> trace;
};

// Quotient by payoff equivalence, then strong dominance to a fixed point,
// then weak dominance, scanning players round-robin and recomputing after
// each removal.
poker_build build_poker(const poker_spec& spec);

// Plan ids of the named table strategies for the reduced games: the direct
// plan and the deceptive plan per player.
std::vector<std::array<unsigned, 2>> table_plan_ids(const poker_spec& spec);

// Short alias for a reduced strategy of `player`: "s1","s2","t1","t2",
// "u1","u2".
std::string reduced_alias(int player, int which);

}  // namespace qp
