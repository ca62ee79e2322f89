#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qpoker/game.hpp"
#include "qpoker/quaternion.hpp"
#include "qpoker/su2.hpp"

namespace qp {

// Joint state of `players` qubits; player 1 owns the leftmost (most
// significant) bit of the basis index.
using joint_state = std::vector<cplx>;

joint_state initial_state(int players, bool entangled);

// The flip move. Orthogonality of the readout basis on the entangled initial
// state forces a different axis per player count.
quaternion flip_quaternion(int players);
mat2 flip_operator(int players);

// Outcome labels in flat order, e.g. "NN","NF","FN","FF".
std::vector<std::string> nf_labels(int players);

joint_state apply_single(const joint_state& amp, const mat2& op, int qubit);
joint_state apply_profile(const joint_state& amp, const std::vector<mat2>& ops);

// Normalized images of the initial state under every N/F profile; the
// readout states, indexed like nf_labels.
std::vector<joint_state> profile_images(int players, bool entangled);

cplx inner(const joint_state& a, const joint_state& b);

// P(outcome k) = |<basis_k|psi>|^2 / sum_j |<basis_j|psi>|^2 after the
// players' moves act on the initial state.
std::vector<double> outcome_distribution(int players, bool entangled,
                                         const std::vector<mat2>& ops);

// Expected payoffs when outcome k pays the k-th profile of `reduced`.
std::vector<double> quantum_payoffs(const strategic_game& reduced,
                                    const std::vector<double>& dist);

// Mixed quantum strategy: finitely many unit-quaternion moves with weights,
// or the rotation-invariant distribution on the full move group.
struct quantum_mixed {
    bool haar = false;
    std::vector<quaternion> atoms;
    std::vector<double> weights;
};

quantum_mixed pure_move(const quaternion& q);
quantum_mixed atom_mixture(std::vector<quaternion> atoms, std::vector<double> weights);
quantum_mixed haar_move();

struct quantum_eval {
    std::vector<double> payoffs;
    std::vector<double> stderrs;               // zero when exact
    std::vector<double> mean_distribution;
    std::vector<double> distribution_stderrs;  // zero when exact
    bool exact = true;
    std::size_t samples = 0;
};

// Exact enumeration over atom products; Monte Carlo with per-player
// substreams when any strategy is the invariant distribution (then samples
// and a seed are required).
quantum_eval eval_quantum(const strategic_game& reduced, bool entangled,
                          const std::vector<quantum_mixed>& strategies,
                          std::uint64_t seed = 0, std::size_t samples = 0);

}  // namespace qp
