#include "qpoker/quantized.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qpoker/sampling.hpp"
#include "qpoker/solvers.hpp"
#include "qpoker/su2.hpp"

namespace qp {

namespace {

const double kPi = 3.14159265358979323846;

std::vector<quaternion> generator_moves() {
    double r = 1.0 / std::sqrt(2.0);
    return {quaternion::one(), quaternion::i(), quaternion::j(), quaternion::k(),
            quaternion(0.0, r, r, 0.0)};
}

std::array<double, 4> squared_components(const quaternion& q) {
    double n = q.norm_sq();
    return {q.w * q.w / n, q.x * q.x / n, q.y * q.y / n, q.z * q.z / n};
}

// Counts perfect matchings of a component-outcome compatibility relation,
// remembering the first one found.
template <std::size_t N>
void count_matchings(const std::array<std::array<bool, N>, N>& ok, std::size_t c,
                     std::array<int, N>& pick, std::array<bool, N>& used, int& count,
                     std::array<int, N>& first) {
    if (c == N) {
        if (count == 0) first = pick;
        ++count;
        return;
    }
    for (std::size_t o = 0; o < N; ++o) {
        if (used[o] || !ok[c][o]) continue;
        used[o] = true;
        pick[c] = int(o);
        count_matchings(ok, c + 1, pick, used, count, first);
        used[o] = false;
    }
}

calibration_result calibrate_two_player() {
    calibration_result res;
    auto gens = generator_moves();
    std::vector<std::array<double, 4>> comp;
    std::vector<std::vector<double>> oracle;
    for (const auto& p : gens)
        for (const auto& q : gens) {
            comp.push_back(quaternion_outcome_components(p, q));
            oracle.push_back(outcome_distribution(2, true, {su2(p), su2(q)}));
        }
    std::array<std::array<bool, 4>, 4> ok{};
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t o = 0; o < 4; ++o) {
            bool compatible = true;
            for (std::size_t t = 0; t < comp.size() && compatible; ++t)
                compatible = std::abs(comp[t][c] - oracle[t][o]) <= 1e-9;
            ok[c][o] = compatible;
        }
    std::array<int, 4> pick{}, first{};
    std::array<bool, 4> used{};
    int count = 0;
    count_matchings(ok, 0, pick, used, count, first);
    res.consistent_count = count;
    res.found = count > 0;
    res.unique = count == 1;
    if (res.found) {
        res.assignment.outcome_of_component = first;
        for (std::size_t t = 0; t < comp.size(); ++t)
            for (std::size_t c = 0; c < 4; ++c)
                res.max_error = std::max(
                    res.max_error, std::abs(comp[t][c] - oracle[t][std::size_t(first[c])]));
        res.note = "bijection fixed by the generator profiles";
    } else {
        res.note = "no component-outcome bijection reproduces the oracle";
    }
    return res;
}

octonion embed(const quaternion& q, int slot) {
    return slot == 0 ? octonion(q, quaternion(0, 0, 0, 0)) : octonion(quaternion(0, 0, 0, 0), q);
}

std::array<double, 8> squared_components8(const octonion& o) {
    std::array<double, 8> s{};
    double n = o.norm_sq();
    for (int k = 0; k < 8; ++k) s[std::size_t(k)] = o.c[std::size_t(k)] * o.c[std::size_t(k)] / n;
    return s;
}

bool same_multiset(std::array<double, 8> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t k = 0; k < 8; ++k)
        if (std::abs(a[k] - b[k]) > 1e-9) return false;
    return true;
}

calibration_result calibrate_three_player() {
    calibration_result res;
    std::vector<quaternion> gens = {quaternion::one(), quaternion::i(), quaternion::j(),
                                    quaternion::k()};
    std::vector<std::array<quaternion, 3>> profiles;
    std::vector<std::vector<double>> oracle;
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens) {
                profiles.push_back({a, b, c});
                oracle.push_back(outcome_distribution(3, true, {su2(a), su2(b), su2(c)}));
            }

    int surviving = 0;
    // Candidate closed forms: per-player embedding slot and optional
    // reflection, both association orders of the triple product.
    for (int combo = 0; combo < 128; ++combo) {
        bool assoc_left = combo & 1;
        bool falsified = false;
        for (std::size_t t = 0; t < profiles.size() && !falsified; ++t) {
            std::array<octonion, 3> o{};
            for (int p = 0; p < 3; ++p) {
                quaternion q = profiles[t][std::size_t(p)];
                if ((combo >> (1 + p)) & 1) q = tau(q);
                o[std::size_t(p)] = embed(q, (combo >> (4 + p)) & 1);
            }
            octonion prod = assoc_left ? (o[0] * o[1]) * o[2] : o[0] * (o[1] * o[2]);
            if (prod.norm_sq() < 1e-18 || !same_multiset(squared_components8(prod), oracle[t]))
                falsified = true;
        }
        if (!falsified) ++surviving;
    }

    res.found = false;
    res.unique = false;
    res.consistent_count = surviving;
    res.note =
        "no octonion product form reproduces the oracle: the three-player "
        "outcome weights are sums of two independent squares each (16 squares), "
        "which cannot all be squared components of a single unit octonion (8); "
        "the state-vector oracle stays authoritative";
    if (surviving > 0)
        res.note = "unexpected surviving product form; revisit the search";
    return res;
}

}  // namespace

quaternion chart_u() {
    return quaternion(std::cos(kPi / 8.0), 0.0, 0.0, std::sin(kPi / 8.0));
}

quaternion tau(const quaternion& q) { return quaternion(q.w, q.x, -q.y, q.z); }

quaternion chart_left(const quaternion& x1) {
    quaternion u = chart_u();
    return u * x1 * u.conjugate();
}

quaternion chart_right(const quaternion& x2) {
    quaternion u = chart_u();
    return u * tau(x2) * u.conjugate();
}

std::array<double, 4> quaternion_outcome_components(const quaternion& p, const quaternion& q) {
    return squared_components(chart_left(p) * chart_right(q));
}

calibration_result calibrate_assignment(int players) {
    if (players == 2) return calibrate_two_player();
    if (players == 3) return calibrate_three_player();
    throw std::domain_error("calibrate_assignment: two or three players");
}

fast_path_eval quaternion_payoff(const strategic_game& reduced, const quaternion& p,
                                 const quaternion& q, const outcome_assignment& assignment) {
    if (std::abs(p.norm() - 1.0) > 1e-9 || std::abs(q.norm() - 1.0) > 1e-9)
        throw std::domain_error("quaternion_payoff: unit quaternions required");
    auto comp = quaternion_outcome_components(p, q);
    fast_path_eval out;
    out.distribution.assign(4, 0.0);
    for (std::size_t c = 0; c < 4; ++c)
        out.distribution[std::size_t(assignment.outcome_of_component[c])] = comp[c];
    out.payoffs = quantum_payoffs(reduced, out.distribution);
    return out;
}

quaternion quaternion_in_copy(const octonion& o, double tol) {
    for (int k = 4; k < 8; ++k)
        if (std::abs(o.c[std::size_t(k)]) > tol)
            throw std::domain_error("octonion move outside the strategy copy");
    return quaternion(o.c[0], o.c[1], o.c[2], o.c[3]);
}

fast_path_eval octonion_payoff(const strategic_game& reduced, const octonion& p,
                               const octonion& q, const octonion& r) {
    std::array<quaternion, 3> moves = {quaternion_in_copy(p), quaternion_in_copy(q),
                                       quaternion_in_copy(r)};
    for (const auto& m : moves)
        if (std::abs(m.norm() - 1.0) > 1e-9)
            throw std::domain_error("octonion_payoff: unit moves required");
    fast_path_eval out;
    out.distribution =
        outcome_distribution(3, true, {su2(moves[0]), su2(moves[1]), su2(moves[2])});
    out.payoffs = quantum_payoffs(reduced, out.distribution);
    return out;
}

std::vector<rational> uniform_equilibrium_payoff(const strategic_game& g) {
    if (g.players() < 2 || g.players() > 3)
        throw std::invalid_argument("uniform_equilibrium_payoff: two or three players");
    for (int p = 0; p < g.players(); ++p)
        if (g.count(p) != 2)
            throw std::invalid_argument("uniform_equilibrium_payoff: two strategies per player");
    std::vector<rational> mean(std::size_t(g.players()), rational(0));
    for (std::size_t f = 0; f < g.total_profiles(); ++f)
        for (int p = 0; p < g.players(); ++p) mean[std::size_t(p)] += g.payoff(f, p);
    for (auto& v : mean) v /= rational(std::int64_t(g.total_profiles()));
    return mean;
}

quantum_mixed q8_strategy() {
    return atom_mixture({quaternion::one(), quaternion::i(), quaternion::j(), quaternion::k()},
                        {0.25, 0.25, 0.25, 0.25});
}

quantum_mixed oct8_strategy() { return q8_strategy(); }

std::vector<quantum_mixed> discrete_equivalent(int players) {
    if (players != 2 && players != 3)
        throw std::domain_error("discrete_equivalent: two or three players");
    std::vector<quantum_mixed> out;
    for (int p = 0; p < players; ++p)
        out.push_back(players == 2 ? q8_strategy() : oct8_strategy());
    return out;
}

security_report verify_security(const strategic_game& game, int holder, std::size_t samples,
                                int opponents, std::uint64_t seed) {
    int n = game.players();
    if (holder < 0 || holder >= n) throw std::out_of_range("verify_security: holder");
    if (!check_zero_sum(game)) throw std::invalid_argument("verify_security: zero-sum only");
    security_report rep;
    rep.holder = holder;
    rep.joint = n == 3 && holder != 2;
    rep.uniform_payoffs = uniform_equilibrium_payoff(game);
    std::size_t uniform_n = game.total_profiles();

    std::vector<int> holders, others;
    if (rep.joint) {
        holders = {0, 1};
        others = {2};
    } else {
        holders = {holder};
        for (int p = 0; p < n; ++p)
            if (p != holder) others.push_back(p);
    }

    rng_stream opp_rng(substream_seed(seed, 0x5ECC'0001ULL));
    bool all_discrete = true, all_haar = true;
    for (int t = 0; t < opponents; ++t) {
        security_entry e;
        std::vector<quantum_mixed> discrete(static_cast<std::size_t>(n));
        std::vector<quantum_mixed> haar(static_cast<std::size_t>(n));
        for (int h : holders) {
            discrete[std::size_t(h)] = q8_strategy();
            haar[std::size_t(h)] = haar_move();
        }
        for (int o : others) {
            quaternion m = sample_unit_quaternion(opp_rng);
            e.opponent_moves.push_back(m);
            discrete[std::size_t(o)] = pure_move(m);
            haar[std::size_t(o)] = pure_move(m);
        }

        auto dq = eval_quantum(game, true, discrete);
        e.discrete_payoffs = dq.payoffs;
        for (double v : dq.mean_distribution)
            e.discrete_spread = std::max(e.discrete_spread, std::abs(v - 1.0 / double(uniform_n)));
        e.discrete_uniform = e.discrete_spread <= 1e-12;

        auto hq = eval_quantum(game, true, haar, substream_seed(seed, 0xA11'0000ULL + unsigned(t)),
                               samples);
        e.haar_payoffs = hq.payoffs;
        e.haar_stderrs = hq.stderrs;
        e.haar_within = true;
        for (int h : holders) {
            double target = rep.uniform_payoffs[std::size_t(h)].to_double();
            double err = std::max(hq.stderrs[std::size_t(h)], 1e-15);
            if (std::abs(hq.payoffs[std::size_t(h)] - target) > 4.0 * err) e.haar_within = false;
        }
        all_discrete = all_discrete && e.discrete_uniform;
        all_haar = all_haar && e.haar_within;
        rep.entries.push_back(std::move(e));
    }
    rep.all_discrete_uniform = all_discrete;
    rep.all_haar_within = all_haar;

    if (rep.joint) {
        // Whether one early mixer alone flattens the outcome is recorded,
        // not asserted.
        rng_stream single_rng(substream_seed(seed, 0x51D3'0001ULL));
        for (int t = 0; t < std::min(opponents, 3); ++t) {
            std::vector<quantum_mixed> single(3);
            single[0] = q8_strategy();
            single[1] = pure_move(sample_unit_quaternion(single_rng));
            single[2] = pure_move(sample_unit_quaternion(single_rng));
            auto sq = eval_quantum(game, true, single);
            double spread = 0.0;
            for (double v : sq.mean_distribution)
                spread = std::max(spread, std::abs(v - 1.0 / double(uniform_n)));
            rep.notes.push_back("single-mixer outcome spread vs uniform: " +
                                std::to_string(spread) + " (recorded only)");
        }
    }
    if (n == 3 && holder == 2)
        rep.notes.push_back("third-seat mixture floor is not claimed; payoffs recorded only");
    return rep;
}

deviation_witness no_pure_equilibrium_witness(const strategic_game& game, const quaternion& p,
                                              const quaternion& q,
                                              const outcome_assignment& assignment) {
    if (game.players() != 2 || game.count(0) != 2 || game.count(1) != 2)
        throw std::invalid_argument("no_pure_equilibrium_witness: 2x2 game");
    deviation_witness w;
    bool constant = true;
    for (std::size_t f = 1; f < game.total_profiles(); ++f)
        if (!(game.payoff(f, 0) == game.payoff(0, 0))) constant = false;
    if (constant) {
        w.note = "constant game: every distribution pays the same";
        return w;
    }

    auto cur = quaternion_payoff(game, p, q, assignment);
    double best0 = game.payoff(std::size_t(0), 0).to_double();
    std::size_t arg0 = 0;
    for (std::size_t f = 0; f < 4; ++f) {
        double v = game.payoff(f, 0).to_double();
        if (v > best0) {
            best0 = v;
            arg0 = f;
        }
    }
    int deviator = cur.payoffs[0] < best0 - 1e-12 ? 0 : 1;
    std::size_t target = arg0;
    if (deviator == 1) {
        double best1 = game.payoff(std::size_t(0), 1).to_double();
        target = 0;
        for (std::size_t f = 0; f < 4; ++f) {
            double v = game.payoff(f, 1).to_double();
            if (v > best1) {
                best1 = v;
                target = f;
            }
        }
    }

    int component = 0;
    for (int c = 0; c < 4; ++c)
        if (assignment.outcome_of_component[std::size_t(c)] == int(target)) component = c;
    quaternion unit[4] = {quaternion::one(), quaternion::i(), quaternion::j(), quaternion::k()};
    quaternion e = unit[component];
    quaternion u = chart_u();

    quaternion moved;
    if (deviator == 0) {
        quaternion P = e * chart_right(q).inverse();
        moved = u.conjugate() * P * u;
    } else {
        quaternion Q = chart_left(p).inverse() * e;
        moved = tau(u.conjugate() * Q * u);
    }
    moved = moved.normalized();

    auto after = deviator == 0 ? quaternion_payoff(game, moved, q, assignment)
                               : quaternion_payoff(game, p, moved, assignment);
    w.found = true;
    w.deviator = deviator;
    w.new_move = moved;
    w.current_payoff = cur.payoffs[std::size_t(deviator)];
    w.achieved_payoff = after.payoffs[std::size_t(deviator)];
    w.best_outcome_payoff = game.payoff(target, deviator).to_double();
    return w;
}

std::vector<comparison_row> comparison_report() {
    std::vector<comparison_row> rows;

    comparison_row sp;
    sp.game = "simplified-poker";
    auto sps = solve_simplified_poker();
    sp.classical_exact = {sps.value, rational(0) - sps.value};
    auto spq = uniform_equilibrium_payoff(builtin_game(builtin::simplified_poker_reduced));
    sp.quantized_exact = spq;
    sp.note = "player 1's equilibrium edge widens under the uniform quantum mixture";
    rows.push_back(sp);

    comparison_row ns;
    ns.game = "three-player-poker";
    auto nss = solve_three_player_poker();
    ns.classical_exact = {nss.exact_payoffs[0], nss.exact_payoffs[1], nss.exact_payoffs[2]};
    ns.quantized_exact = uniform_equilibrium_payoff(builtin_game(builtin::three_player_poker_reduced));
    ns.note = "positions 1 and 2 flip from losing to winning; the dealer's edge is destroyed";
    rows.push_back(ns);

    for (auto& row : rows) {
        for (const auto& v : row.classical_exact) row.classical.push_back(v.to_double());
        for (const auto& v : row.quantized_exact) row.quantized.push_back(v.to_double());
    }
    return rows;
}

}  // namespace qp
