#include "qpoker/ewl.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "qpoker/sampling.hpp"

namespace qp {

namespace {

void check_players(int players) {
    if (players != 2 && players != 3)
        throw std::domain_error("quantum: two or three players");
}

int qubit_bit(int players, int qubit) { return players - 1 - qubit; }

}  // namespace

joint_state initial_state(int players, bool entangled) {
    check_players(players);
    joint_state amp(std::size_t(1) << players, cplx(0.0));
    if (!entangled) {
        amp[0] = 1.0;
        return amp;
    }
    double r = 1.0 / std::sqrt(2.0);
    amp.front() = r;
    amp.back() = r;
    return amp;
}

quaternion flip_quaternion(int players) {
    check_players(players);
    double r = 1.0 / std::sqrt(2.0);
    // Two players: axis (i+j)/sqrt(2); three: axis j.
    if (players == 2) return quaternion(0.0, r, r, 0.0);
    return quaternion(0.0, 0.0, 1.0, 0.0);
}

mat2 flip_operator(int players) { return su2(flip_quaternion(players)); }

std::vector<std::string> nf_labels(int players) {
    check_players(players);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < (std::size_t(1) << players); ++k) {
        std::string s;
        for (int p = 0; p < players; ++p)
            s += ((k >> qubit_bit(players, p)) & 1u) ? 'F' : 'N';
        labels.push_back(s);
    }
    return labels;
}

joint_state apply_single(const joint_state& amp, const mat2& op, int qubit) {
    std::size_t dim = amp.size();
    int players = 0;
    while ((std::size_t(1) << players) < dim) ++players;
    if ((std::size_t(1) << players) != dim) throw std::invalid_argument("quantum: state size");
    if (qubit < 0 || qubit >= players) throw std::out_of_range("quantum: qubit index");
    std::size_t stride = std::size_t(1) << qubit_bit(players, qubit);
    joint_state out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & stride) continue;
        cplx a0 = amp[i], a1 = amp[i | stride];
        out[i] = op(0, 0) * a0 + op(0, 1) * a1;
        out[i | stride] = op(1, 0) * a0 + op(1, 1) * a1;
    }
    return out;
}

joint_state apply_profile(const joint_state& amp, const std::vector<mat2>& ops) {
    joint_state cur = amp;
    for (std::size_t p = 0; p < ops.size(); ++p) cur = apply_single(cur, ops[p], int(p));
    return cur;
}

std::vector<joint_state> profile_images(int players, bool entangled) {
    check_players(players);
    joint_state init = initial_state(players, entangled);
    mat2 flip = flip_operator(players);
    std::vector<joint_state> basis;
    for (std::size_t k = 0; k < (std::size_t(1) << players); ++k) {
        std::vector<mat2> ops;
        for (int p = 0; p < players; ++p)
            ops.push_back(((k >> qubit_bit(players, p)) & 1u) ? flip : mat2::identity());
        joint_state img = apply_profile(init, ops);
        double norm = 0.0;
        for (const cplx& a : img) norm += std::norm(a);
        norm = std::sqrt(norm);
        for (cplx& a : img) a /= norm;
        basis.push_back(std::move(img));
    }
    return basis;
}

cplx inner(const joint_state& a, const joint_state& b) {
    if (a.size() != b.size()) throw std::invalid_argument("quantum: state size mismatch");
    cplx s(0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

std::vector<double> outcome_distribution(int players, bool entangled,
                                         const std::vector<mat2>& ops) {
    check_players(players);
    if (int(ops.size()) != players) throw std::invalid_argument("quantum: one move per player");
    joint_state psi = apply_profile(initial_state(players, entangled), ops);
    // The readout basis depends only on (players, entangled); cache all four.
    static const std::array<std::vector<joint_state>, 4> cached = {
        profile_images(2, false), profile_images(2, true),
        profile_images(3, false), profile_images(3, true)};
    const auto& basis = cached[std::size_t(2 * (players - 2) + (entangled ? 1 : 0))];
    std::vector<double> p(basis.size());
    double total = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        p[k] = std::norm(inner(basis[k], psi));
        total += p[k];
    }
    if (total <= 0.0) throw std::domain_error("quantum: degenerate readout");
    for (double& v : p) v /= total;
    return p;
}

std::vector<double> quantum_payoffs(const strategic_game& reduced,
                                    const std::vector<double>& dist) {
    if (reduced.total_profiles() != dist.size())
        throw std::invalid_argument("quantum: outcome count mismatch");
    std::vector<double> pay(std::size_t(reduced.players()), 0.0);
    for (std::size_t k = 0; k < dist.size(); ++k)
        for (int p = 0; p < reduced.players(); ++p)
            pay[std::size_t(p)] += dist[k] * reduced.payoff(k, p).to_double();
    return pay;
}

quantum_mixed pure_move(const quaternion& q) {
    quantum_mixed m;
    m.atoms = {q.normalized()};
    m.weights = {1.0};
    return m;
}

quantum_mixed atom_mixture(std::vector<quaternion> atoms, std::vector<double> weights) {
    if (atoms.empty() || atoms.size() != weights.size())
        throw std::invalid_argument("quantum: atoms and weights must pair up");
    double sum = 0.0;
    for (double w : weights) {
        if (w < -1e-12) throw std::invalid_argument("quantum: negative weight");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("quantum: weights must sum to 1");
    quantum_mixed m;
    for (auto& a : atoms) a = a.normalized();
    m.atoms = std::move(atoms);
    m.weights = std::move(weights);
    return m;
}

quantum_mixed haar_move() {
    quantum_mixed m;
    m.haar = true;
    return m;
}

quantum_eval eval_quantum(const strategic_game& reduced, bool entangled,
                          const std::vector<quantum_mixed>& strategies,
                          std::uint64_t seed, std::size_t samples) {
    int players = int(strategies.size());
    check_players(players);
    if (reduced.players() != players) throw std::invalid_argument("quantum: player count");
    for (int p = 0; p < players; ++p)
        if (reduced.count(p) != 2) throw std::invalid_argument("quantum: need binary game");
    std::size_t outcomes = std::size_t(1) << players;

    bool any_haar = false;
    for (const auto& s : strategies) any_haar = any_haar || s.haar;

    quantum_eval out;
    out.mean_distribution.assign(outcomes, 0.0);

    if (!any_haar) {
        // Exact product enumeration of the atoms.
        std::vector<std::size_t> idx(std::size_t(players), 0);
        while (true) {
            double w = 1.0;
            std::vector<mat2> ops;
            for (int p = 0; p < players; ++p) {
                const auto& s = strategies[std::size_t(p)];
                w *= s.weights[idx[std::size_t(p)]];
                ops.push_back(su2(s.atoms[idx[std::size_t(p)]]));
            }
            if (w > 0.0) {
                auto dist = outcome_distribution(players, entangled, ops);
                for (std::size_t k = 0; k < outcomes; ++k)
                    out.mean_distribution[k] += w * dist[k];
            }
            int k = players - 1;
            while (k >= 0 && idx[std::size_t(k)] + 1 == strategies[std::size_t(k)].atoms.size())
                idx[std::size_t(k--)] = 0;
            if (k < 0) break;
            ++idx[std::size_t(k)];
        }
        out.payoffs = quantum_payoffs(reduced, out.mean_distribution);
        out.stderrs.assign(out.payoffs.size(), 0.0);
        out.distribution_stderrs.assign(outcomes, 0.0);
        out.exact = true;
        return out;
    }

    if (samples == 0) throw std::invalid_argument("quantum: sampling needs a sample count");
    out.exact = false;
    out.samples = samples;
    std::vector<rng_stream> streams;
    for (int p = 0; p < players; ++p) streams.emplace_back(substream_seed(seed, std::uint64_t(p)));

    std::vector<double> mean(std::size_t(players), 0.0), m2(std::size_t(players), 0.0);
    std::vector<double> dm2(outcomes, 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<mat2> ops;
        for (int p = 0; p < players; ++p) {
            const auto& strat = strategies[std::size_t(p)];
            auto& stream = streams[std::size_t(p)];
            if (strat.haar) {
                ops.push_back(su2(sample_unit_quaternion(stream)));
            } else {
                std::size_t a = sample_index(strat.weights, stream.uniform());
                ops.push_back(su2(strat.atoms[a]));
            }
        }
        auto dist = outcome_distribution(players, entangled, ops);
        auto pay = quantum_payoffs(reduced, dist);
        for (std::size_t k = 0; k < outcomes; ++k) {
            double d = dist[k] - out.mean_distribution[k];
            out.mean_distribution[k] += d / double(s + 1);
            dm2[k] += d * (dist[k] - out.mean_distribution[k]);
        }
        for (int p = 0; p < players; ++p) {
            double d = pay[std::size_t(p)] - mean[std::size_t(p)];
            mean[std::size_t(p)] += d / double(s + 1);
            m2[std::size_t(p)] += d * (pay[std::size_t(p)] - mean[std::size_t(p)]);
        }
    }
    out.payoffs = mean;
    out.stderrs.assign(std::size_t(players), 0.0);
    out.distribution_stderrs.assign(outcomes, 0.0);
    if (samples > 1) {
        for (int p = 0; p < players; ++p)
            out.stderrs[std::size_t(p)] =
                std::sqrt(m2[std::size_t(p)] / double(samples - 1) / double(samples));
        for (std::size_t k = 0; k < outcomes; ++k)
            out.distribution_stderrs[k] = std::sqrt(dm2[k] / double(samples - 1) / double(samples));
    }
    return out;
}

}  // namespace qp
