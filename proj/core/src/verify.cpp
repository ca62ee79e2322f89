#include "qpoker/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "qpoker/correlated.hpp"
#include "qpoker/dominance.hpp"
#include "qpoker/ewl.hpp"
#include "qpoker/mixed.hpp"
#include "qpoker/poker.hpp"
#include "qpoker/quantized.hpp"
#include "qpoker/sampling.hpp"
#include "qpoker/solvers.hpp"
#include "qpoker/su2.hpp"

namespace qp {

namespace {

using clock_type = std::chrono::steady_clock;

struct check_stream {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "FAILED: " << what << "; ";
        }
    }
};

rational rat(std::int64_t n, std::int64_t d = 1) { return rational(n, d); }

std::vector<rational> expected_table2() {
    // (s,t) payoff of player 1; flat order (s1,t1),(s1,t2),(s2,t1),(s2,t2)
    return {rat(0), rat(5, 2), rat(5, 4), rat(0)};
}

struct table6_entry {
    std::array<rational, 3> pay;
};

std::vector<table6_entry> expected_table6() {
    auto e = [](std::int64_t a, std::int64_t b, std::int64_t c) {
        return table6_entry{{rational(a), rational(b), rational(c)}};
    };
    // flat order (s,t,u) with u fastest
    return {e(0, 0, 0),   e(-2, -2, 4), e(2, -4, 2), e(-2, 6, -4),
            e(-4, 2, 2),  e(6, -2, -4), e(-3, -3, 6), e(10, 10, -20)};
}

criterion_result timed(int id, const std::string& name,
                       const std::function<void(check_stream&, criterion_result&)>& body) {
    criterion_result res;
    res.id = id;
    res.name = name;
    check_stream cs;
    auto t0 = clock_type::now();
    try {
        body(cs, res);
    } catch (const std::exception& e) {
        cs.ok = false;
        cs.detail << "EXCEPTION: " << e.what();
    }
    res.seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    res.pass = cs.ok;
    std::string fails = cs.detail.str();
    if (!fails.empty() && fails.back() == ' ') fails.pop_back();
    if (!fails.empty() && fails.back() == ';') fails.pop_back();
    if (!fails.empty())
        res.detail = res.detail.empty() ? fails : fails + " | " + res.detail;
    return res;
}

void require_runtime(check_stream& cs, criterion_result& res, double limit,
                     const clock_type::time_point& t0) {
    double s = std::chrono::duration<double>(clock_type::now() - t0).count();
    std::ostringstream o;
    o << "runtime " << s << "s (limit " << limit << "s)";
    cs.require(s < limit, o.str());
    (void)res;
}

criterion_result criterion_golden_tables() {
    return timed(1, "golden-tables", [](check_stream& cs, criterion_result& res) {
        auto t0 = clock_type::now();
        poker_spec sp(poker_variant::simplified, rat(15), rat(10));
        auto bsp = build_poker(sp);
        cs.require(bsp.reduced.players() == 2 && bsp.reduced.count(0) == 2 &&
                       bsp.reduced.count(1) == 2,
                   "reduced two-player game is 2x2");
        auto t2 = expected_table2();
        for (std::size_t f = 0; f < 4 && bsp.reduced.total_profiles() == 4; ++f) {
            cs.require(bsp.reduced.payoff(f, 0) == t2[f], "two-player reduced entry " +
                                                              std::to_string(f));
            cs.require(bsp.reduced.payoff(f, 1) == rat(0) - t2[f],
                       "two-player reduced mirror " + std::to_string(f));
        }
        cs.require(bsp.reduced.labels() ==
                       std::vector<std::vector<std::string>>{{"s1", "s2"}, {"t1", "t2"}},
                   "two-player reduced labels are the aliases");

        poker_spec ns(poker_variant::three_player, rat(16), rat(64));
        auto bns = build_poker(ns);
        bool shape = bns.reduced.players() == 3;
        for (int p = 0; p < 3; ++p) shape = shape && bns.reduced.count(p) == 2;
        cs.require(shape, "reduced three-player game is 2x2x2");
        if (shape) {
            auto t6 = expected_table6();
            for (std::size_t f = 0; f < 8; ++f)
                for (int p = 0; p < 3; ++p)
                    cs.require(bns.reduced.payoff(f, p) == t6[f].pay[std::size_t(p)],
                               "three-player reduced entry " + std::to_string(f) + " player " +
                                   std::to_string(p + 1));
            cs.require(bns.reduced.labels() == std::vector<std::vector<std::string>>{
                                                   {"s1", "s2"}, {"t1", "t2"}, {"u1", "u2"}},
                       "three-player reduced labels are the aliases");
            auto table = table_plan_ids(ns);
            for (int p = 0; p < 3; ++p)
                for (int w = 0; w < 2; ++w) {
                    bool found = false;
                    for (std::size_t cls = 0; cls < bns.classes[std::size_t(p)].members.size();
                         ++cls) {
                        const auto& mem = bns.classes[std::size_t(p)].members[cls];
                        bool here = false;
                        for (unsigned m : mem) here = here || m == table[std::size_t(p)][w];
                        bool survives = false;
                        for (unsigned rep : bns.surviving_representatives[std::size_t(p)])
                            survives = survives ||
                                       rep == bns.classes[std::size_t(p)].representative[cls];
                        if (here && survives) found = true;
                    }
                    cs.require(found, "named plan survives for player " + std::to_string(p + 1));
                }
        }
        res.detail = "quotient counts " + std::to_string(bns.class_counts[0]) + "/" +
                     std::to_string(bns.class_counts[1]) + "/" +
                     std::to_string(bns.class_counts[2]) + "; trace rows " +
                     std::to_string(bns.trace.size());
        require_runtime(cs, res, 10.0, t0);
    });
}

criterion_result criterion_counts() {
    return timed(2, "counts", [](check_stream& cs, criterion_result& res) {
        poker_spec sp(poker_variant::simplified, rat(15), rat(10));
        poker_spec ns(poker_variant::three_player, rat(16), rat(64));
        auto seqs = enumerate_action_sequences(ns);
        cs.require(seqs.size() == 13, "three-player action sequences = 13");
        cs.require(ns.plans_per_player() == 256, "three-player plans = 256");
        cs.require(sp.plans_per_player() == 4, "two-player plans = 4");
        cs.require(enumerate_pure_strategies(ns, 0).size() == 256, "plan enumeration size");
        res.detail = "sequences " + std::to_string(seqs.size());
    });
}

criterion_result criterion_sp_equilibrium() {
    return timed(3, "two-player-equilibrium", [](check_stream& cs, criterion_result& res) {
        auto s = solve_simplified_poker();
        cs.require(s.value == rat(5, 6), "value 5/6 exact");
        cs.require(s.first_strategy_weight == rat(1, 3), "first-strategy weight 1/3");
        cs.require(s.deceptive_weight == rat(2, 3), "always-bet weight 2/3");
        cs.require(s.sol.col[1] == rat(1, 3), "call-both weight 1/3");
        cs.require(s.security_reduced == rat(5, 6), "security floor 5/6 in the reduced game");
        cs.require(s.security_full == rat(5, 6), "security floor 5/6 among all plans");
        res.detail = "mix (" + s.sol.row[0].str() + "," + s.sol.row[1].str() + ") vs (" +
                     s.sol.col[0].str() + "," + s.sol.col[1].str() + "), value " + s.value.str();
    });
}

criterion_result criterion_ns_equilibrium() {
    return timed(4, "three-player-equilibrium", [](check_stream& cs, criterion_result& res) {
        auto s = solve_three_player_poker();
        double p_closed = std::sqrt(7.0 / 5.0) - 1.0;
        cs.require(std::abs(s.p - p_closed) <= 1e-12, "p closed form");
        cs.require(std::abs(5.0 * s.p * s.p + 10.0 * s.p - 2.0) <= 1e-9, "p root residual");
        cs.require(s.indifference_gap < 1e-9, "indifference residuals < 1e-9");
        double z_closed = (4.0 * p_closed + 8.0) / (5.0 * p_closed + 12.0);
        cs.require(std::abs(s.z - z_closed) <= 1e-3, "z within 0.001 of closed form");
        double target[3] = {-0.3998, -0.3998, 0.7996};
        for (int p = 0; p < 3; ++p)
            cs.require(std::abs(s.payoffs[std::size_t(p)] - target[p]) <= 0.01,
                       "payoff " + std::to_string(p + 1) + " within 0.01");
        cs.require(s.is_nash, "profile certified as an equilibrium");
        std::ostringstream o;
        o << "p=" << s.p << " z=" << s.z << " payoffs=(" << s.payoffs[0] << "," << s.payoffs[1]
          << "," << s.payoffs[2] << ") regret=" << s.max_regret;
        res.detail = o.str();
    });
}

criterion_result criterion_snap_off(std::uint64_t seed) {
    return timed(5, "snap-off", [seed](check_stream& cs, criterion_result& res) {
        double p = std::sqrt(7.0 / 5.0) - 1.0;
        double closed = snap_off_probability(p);
        cs.require(std::abs(closed - 0.2857) <= 1e-4, "closed form 0.2857");
        auto est = simulate_snap_off(substream_seed(seed, 5), 1000000);
        cs.require(est.conditioned > 0, "conditioning event observed");
        double err = std::max(est.stderr_, 1e-12);
        cs.require(std::abs(est.estimate - closed) <= 4.0 * err, "simulation within 4 sigma");
        std::ostringstream o;
        o << "closed " << closed << ", estimate " << est.estimate << " +/- " << est.stderr_
          << " on " << est.conditioned << " conditioned deals";
        res.detail = o.str();
    });
}

criterion_result criterion_unentangled_equivalence(std::uint64_t seed) {
    return timed(6, "unentangled-equivalence", [seed](check_stream& cs, criterion_result& res) {
        auto t0 = clock_type::now();
        std::vector<strategic_game> games = {builtin_game(builtin::simplified_poker_reduced),
                                             builtin_game(builtin::prisoners_dilemma),
                                             builtin_game(builtin::chicken)};
        quaternion flip2 = flip_quaternion(2);
        rng_stream rng(substream_seed(seed, 6));
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto& g = games[std::size_t(trial % 3)];
            real_game rg = to_real(g);
            std::vector<std::vector<double>> mix;
            std::vector<quantum_mixed> strat;
            for (int p = 0; p < 2; ++p) {
                double w = rng.uniform();
                mix.push_back({w, 1.0 - w});
                strat.push_back(
                    atom_mixture({quaternion::one(), flip2}, {w, 1.0 - w}));
            }
            auto classical = expected_payoffs(rg, mix);
            auto quantum = eval_quantum(g, false, strat);
            for (int p = 0; p < 2; ++p)
                worst = std::max(worst,
                                 std::abs(classical[std::size_t(p)] - quantum.payoffs[std::size_t(p)]));
        }
        cs.require(worst <= 1e-12, "mixed-embedding payoffs match within 1e-12");
        res.detail = "worst deviation " + std::to_string(worst);
        require_runtime(cs, res, 5.0, t0);
    });
}

criterion_result criterion_oracle_equivalence(std::uint64_t seed) {
    return timed(7, "oracle-equivalence", [seed](check_stream& cs, criterion_result& res) {
        auto t0 = clock_type::now();
        auto cal = calibrate_assignment(2);
        cs.require(cal.found, "calibration finds an assignment");
        cs.require(cal.unique, "assignment is unique");
        rng_stream rng(substream_seed(seed, 7));
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            quaternion p = sample_unit_quaternion(rng);
            quaternion q = sample_unit_quaternion(rng);
            auto comp = quaternion_outcome_components(p, q);
            auto oracle = outcome_distribution(2, true, {su2(p), su2(q)});
            for (std::size_t c = 0; c < 4; ++c) {
                std::size_t o = std::size_t(cal.assignment.outcome_of_component[c]);
                worst = std::max(worst, std::abs(comp[c] - oracle[o]));
            }
        }
        cs.require(worst <= 1e-12, "fast path matches oracle within 1e-12 on 1000 pairs");
        res.detail = "worst deviation " + std::to_string(worst) + ", consistent bijections " +
                     std::to_string(cal.consistent_count);
        require_runtime(cs, res, 5.0, t0);
    });
}

criterion_result criterion_quantized_sp(std::uint64_t seed) {
    return timed(8, "quantized-two-player", [seed](check_stream& cs, criterion_result& res) {
        auto game = builtin_game(builtin::simplified_poker_reduced);
        auto rep = verify_security(game, 0, 100000, 50, substream_seed(seed, 8));
        cs.require(rep.uniform_payoffs[0] == rat(15, 16), "uniform value 15/16 exact");
        cs.require(rep.uniform_payoffs[1] == rat(-15, 16), "uniform value -15/16 exact");
        cs.require(rep.all_discrete_uniform,
                   "q8 mixture flattens the outcome distribution for 50 opponents");
        double worst_pay = 0.0;
        for (const auto& e : rep.entries)
            for (std::size_t p = 0; p < 2; ++p)
                worst_pay = std::max(
                    worst_pay, std::abs(e.discrete_payoffs[p] -
                                        rep.uniform_payoffs[p].to_double()));
        cs.require(worst_pay <= 1e-12, "q8 payoffs exactly (15/16, -15/16)");
        cs.require(rep.all_haar_within, "Haar estimates within 4 standard errors");
        res.detail = "worst q8 payoff deviation " + std::to_string(worst_pay);
    });
}

criterion_result criterion_quantized_ns(std::uint64_t seed) {
    return timed(9, "quantized-three-player", [seed](check_stream& cs, criterion_result& res) {
        auto t0 = clock_type::now();
        auto game = builtin_game(builtin::three_player_poker_reduced);
        auto all_haar = eval_quantum(game, true,
                                     {haar_move(), haar_move(), haar_move()},
                                     substream_seed(seed, 9), 100000);
        double target[3] = {0.875, 0.875, -1.75};
        for (int p = 0; p < 3; ++p) {
            double err = std::max(all_haar.stderrs[std::size_t(p)], 1e-12);
            cs.require(std::abs(all_haar.payoffs[std::size_t(p)] - target[p]) <= 4.0 * err,
                       "all-Haar payoff " + std::to_string(p + 1) + " within 4 SE");
        }
        auto rep = verify_security(game, 0, 100000, 20, substream_seed(seed, 90));
        cs.require(rep.joint, "positions 1 and 2 mix jointly");
        bool third_ok = true;
        for (const auto& e : rep.entries) {
            double err = std::max(e.haar_stderrs[2], 1e-12);
            third_ok = third_ok && std::abs(e.haar_payoffs[2] - (-1.75)) <= 4.0 * err;
        }
        cs.require(third_ok, "third seat within 4 SE of -1.75 for 20 random strategies");
        cs.require(rep.all_discrete_uniform, "discrete mixture flattens the distribution");
        std::ostringstream o;
        o << "all-Haar payoffs (" << all_haar.payoffs[0] << "," << all_haar.payoffs[1] << ","
          << all_haar.payoffs[2] << ")";
        res.detail = o.str();
        require_runtime(cs, res, 60.0, t0);
    });
}

criterion_result criterion_no_pure_equilibrium(std::uint64_t seed) {
    return timed(10, "no-pure-equilibrium", [seed](check_stream& cs, criterion_result& res) {
        auto game = builtin_game(builtin::simplified_poker_reduced);
        auto cal = calibrate_assignment(2);
        cs.require(cal.found, "calibration available");
        rng_stream rng(substream_seed(seed, 10));
        double worst_gap = 0.0;
        int improved = 0;
        for (int trial = 0; trial < 100; ++trial) {
            quaternion p = sample_unit_quaternion(rng);
            quaternion q = sample_unit_quaternion(rng);
            auto w = no_pure_equilibrium_witness(game, p, q, cal.assignment);
            cs.require(w.found, "witness exists");
            if (!w.found) continue;
            worst_gap = std::max(worst_gap, std::abs(w.achieved_payoff - w.best_outcome_payoff));
            if (w.achieved_payoff > w.current_payoff + 1e-9) ++improved;
        }
        cs.require(worst_gap <= 1e-9, "deviation reaches the best outcome exactly");
        cs.require(improved == 100, "deviation strictly improves the deviator");
        res.detail = "strict improvements " + std::to_string(improved) +
                     "/100, worst target gap " + std::to_string(worst_gap);
    });
}

criterion_result criterion_correlated() {
    return timed(11, "correlated-equilibria", [](check_stream& cs, criterion_result& res) {
        auto chicken = builtin_game(builtin::chicken);
        correlated_distribution three = {rat(1, 3), rat(1, 3), rat(1, 3), rat(0)};
        auto c1 = check_correlated_equilibrium(chicken, three);
        cs.require(c1.ok, "uniform-over-three is a correlated equilibrium");
        cs.require(mediated_obedience_holds(chicken, three), "all-obey is a Nash profile");
        auto pay1 = correlated_payoffs(chicken, three);
        cs.require(pay1[0] == rat(5, 3) && pay1[1] == rat(5, 3), "payoff (5/3, 5/3)");

        correlated_distribution coin = {rat(0), rat(1, 2), rat(1, 2), rat(0)};
        auto c2 = check_correlated_equilibrium(chicken, coin);
        cs.require(c2.ok, "coin-flip agreement is a correlated equilibrium");
        auto pay2 = correlated_payoffs(chicken, coin);
        cs.require(pay2[0] == rat(3, 2) && pay2[1] == rat(3, 2), "payoff (3/2, 3/2)");

        auto pd = builtin_game(builtin::prisoners_dilemma);
        int rejected = 0, tested = 0;
        for (int a = 0; a <= 20; ++a)
            for (int b = 0; b <= 20 - a; ++b)
                for (int c = 0; c <= 20 - a - b; ++c) {
                    int d = 20 - a - b - c;
                    if (d == 20) continue;  // all mass on the dominant pair
                    correlated_distribution rho = {rat(a, 20), rat(b, 20), rat(c, 20),
                                                   rat(d, 20)};
                    ++tested;
                    if (!check_correlated_equilibrium(pd, rho).ok) ++rejected;
                }
        cs.require(rejected == tested, "every grid distribution with cooperative mass rejected");

        correlated_distribution diag = {rat(1, 2), rat(0), rat(0), rat(1, 2)};
        cs.require(!is_product_realizable(pd, diag), "diagonal distribution is not a product");
        bool products_ok = true;
        for (int num1 = 0; num1 <= 10; ++num1)
            for (int num2 = 0; num2 <= 10; ++num2) {
                std::vector<std::vector<rational>> mix = {
                    {rat(num1, 10), rat(10 - num1, 10)}, {rat(num2, 10), rat(10 - num2, 10)}};
                auto rho = product_distribution(pd, mix);
                products_ok = products_ok && is_product_realizable(pd, rho);
            }
        cs.require(products_ok, "every product distribution passes the rank test");
        res.detail = "grid distributions rejected " + std::to_string(rejected) + "/" +
                     std::to_string(tested);
    });
}

criterion_result criterion_flags() {
    return timed(12, "surfaced-discrepancies", [](check_stream& cs, criterion_result& res) {
        auto pd_avg = uniform_equilibrium_payoff(builtin_game(builtin::prisoners_dilemma));
        cs.require(pd_avg[0] == rat(9, 4) && pd_avg[1] == rat(9, 4),
                   "uniform-mixture average of the dilemma is 9/4");
        auto s = solve_simplified_poker();
        cs.require(s.first_strategy_weight == rat(1, 3), "first-strategy weight 1/3");
        res.flags.push_back(
            "uniform-mixture average payoff of the prisoner's dilemma computes to 9/4 = 2.25; "
            "the commonly quoted 2.5 does not follow from averaging the four cells");
        res.flags.push_back(
            "the two-player equilibrium puts 1/3 on the first strategy (bet only when strong) "
            "and 2/3 on the always-bet plan; quoting 1/3 as the bluff frequency attaches the "
            "number to the wrong plan");
        res.detail = "flags " + std::to_string(res.flags.size());
    });
}

}  // namespace

std::vector<criterion_result> run_acceptance(std::uint64_t seed, const std::string& suite) {
    std::vector<int> ids;
    if (suite == "all")
        ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    else if (suite == "tables")
        ids = {1, 2};
    else if (suite == "classical")
        ids = {3, 4, 5};
    else if (suite == "quantum")
        ids = {6, 7, 8, 9, 10};
    else if (suite == "correlated")
        ids = {11};
    else
        throw std::invalid_argument("unknown suite '" + suite + "'");

    std::vector<criterion_result> out;
    for (int id : ids) {
        switch (id) {
            case 1: out.push_back(criterion_golden_tables()); break;
            case 2: out.push_back(criterion_counts()); break;
            case 3: out.push_back(criterion_sp_equilibrium()); break;
            case 4: out.push_back(criterion_ns_equilibrium()); break;
            case 5: out.push_back(criterion_snap_off(seed)); break;
            case 6: out.push_back(criterion_unentangled_equivalence(seed)); break;
            case 7: out.push_back(criterion_oracle_equivalence(seed)); break;
            case 8: out.push_back(criterion_quantized_sp(seed)); break;
            case 9: out.push_back(criterion_quantized_ns(seed)); break;
            case 10: out.push_back(criterion_no_pure_equilibrium(seed)); break;
            case 11: out.push_back(criterion_correlated()); break;
            case 12: out.push_back(criterion_flags()); break;
        }
    }
    return out;
}

bool all_passed(const std::vector<criterion_result>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace qp
