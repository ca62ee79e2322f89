#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qpoker/ewl.hpp"
#include "qpoker/game.hpp"
#include "qpoker/octonion.hpp"
#include "qpoker/quaternion.hpp"

namespace qp {

// Bijection from canonical quaternion components to outcome indices.
struct outcome_assignment {
    std::array<int, 4> outcome_of_component{0, 1, 2, 3};
    static outcome_assignment identity() { return {}; }
};

struct calibration_result {
    bool found = false;
    bool unique = false;
    outcome_assignment assignment;
    double max_error = 0.0;      // worst deviation from the oracle on the generators
    int consistent_count = 0;    // bijections that reproduce the oracle
    std::string note;
};

// Searches component-to-outcome bijections against the state-vector oracle
// on a generating profile set. The three-player search also ranges over
// octonion embeddings, involutions, and association orders; it reports
// failure when no closed form reproduces the oracle.
calibration_result calibrate_assignment(int players);

quaternion chart_u();
quaternion tau(const quaternion& q);            // reflects the j component
quaternion chart_left(const quaternion& x1);    // u x1 u^-1
quaternion chart_right(const quaternion& x2);   // u tau(x2) u^-1

// Squared canonical components of the charted product, before assignment.
std::array<double, 4> quaternion_outcome_components(const quaternion& p, const quaternion& q);

struct fast_path_eval {
    std::vector<double> distribution;
    std::vector<double> payoffs;
};

// Closed-form outcome distribution and payoffs of a pure two-player profile.
fast_path_eval quaternion_payoff(const strategic_game& reduced, const quaternion& p,
                                 const quaternion& q, const outcome_assignment& assignment);

// Quaternion sitting in the first Cayley-Dickson factor; throws
// domain_error when the upper components are nonzero.
quaternion quaternion_in_copy(const octonion& o, double tol = 1e-9);

// Three-player pure profile, each move an octonion inside its strategy
// copy. The 3-qubit oracle is authoritative.
fast_path_eval octonion_payoff(const strategic_game& reduced, const octonion& p,
                               const octonion& q, const octonion& r);

// Arithmetic mean of the pure payoff vectors, exact.
std::vector<rational> uniform_equilibrium_payoff(const strategic_game& g);

// Uniform mixture over the moves {1, i, j, k}.
quantum_mixed q8_strategy();
// The octonion-unit mixture restricted to a player's strategy copy; the
// four units outside the copy do not name player moves.
quantum_mixed oct8_strategy();
std::vector<quantum_mixed> discrete_equivalent(int players);

struct security_entry {
    std::vector<quaternion> opponent_moves;
    std::vector<double> discrete_payoffs;
    double discrete_spread = 0.0;   // max deviation of the outcome distribution from uniform
    bool discrete_uniform = false;
    std::vector<double> haar_payoffs;
    std::vector<double> haar_stderrs;
    bool haar_within = false;       // holder payoffs within 4 standard errors of uniform
};

struct security_report {
    int holder = 0;
    bool joint = false;             // three players: positions 1 and 2 mix together
    std::vector<rational> uniform_payoffs;
    std::vector<security_entry> entries;
    bool all_discrete_uniform = false;
    bool all_haar_within = false;
    std::vector<std::string> notes; // recorded-only configurations
};

// Plays the holder's uniform mixtures against random pure opponents and
// checks the payoff floor. For the three-player game a holder in {0,1}
// means positions 1 and 2 mix jointly; the single-mixer configuration is
// recorded in the notes without being asserted.
security_report verify_security(const strategic_game& game, int holder, std::size_t samples,
                                int opponents, std::uint64_t seed);

struct deviation_witness {
    bool found = false;
    int deviator = -1;              // 0 or 1
    quaternion new_move;
    double current_payoff = 0.0;
    double achieved_payoff = 0.0;
    double best_outcome_payoff = 0.0;
    std::string note;
};

// A strict improvement for one player at a pure two-player profile,
// reaching the deviator's best outcome exactly; none exists for a constant
// game.
deviation_witness no_pure_equilibrium_witness(const strategic_game& game, const quaternion& p,
                                              const quaternion& q,
                                              const outcome_assignment& assignment);

struct comparison_row {
    std::string game;
    std::vector<rational> classical_exact;
    std::vector<double> classical;
    std::vector<rational> quantized_exact;
    std::vector<double> quantized;
    std::string note;
};

// Classical equilibrium values beside the uniform-mixture quantized values.
std::vector<comparison_row> comparison_report();

}  // namespace qp
