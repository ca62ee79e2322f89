#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qpoker/ewl.hpp"
#include "qpoker/mixed.hpp"
#include "qpoker/quantized.hpp"
#include "qpoker/sampling.hpp"
#include "qpoker/solvers.hpp"

using namespace qp;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

TEST_CASE("initial states") {
    auto plain2 = initial_state(2, false);
    REQUIRE(plain2.size() == 4);
    CHECK(std::abs(plain2[0] - cplx(1.0)) < 1e-15);
    CHECK(std::abs(plain2[1]) + std::abs(plain2[2]) + std::abs(plain2[3]) < 1e-15);

    auto ghz2 = initial_state(2, true);
    CHECK(std::abs(ghz2[0] - cplx(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(ghz2[3] - cplx(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(ghz2[1]) + std::abs(ghz2[2]) < 1e-15);

    auto ghz3 = initial_state(3, true);
    REQUIRE(ghz3.size() == 8);
    CHECK(std::abs(ghz3[0] - cplx(kInvSqrt2)) < 1e-15);
    CHECK(std::abs(ghz3[7] - cplx(kInvSqrt2)) < 1e-15);

    CHECK_THROWS_AS(initial_state(4, true), std::domain_error);
}

TEST_CASE("outcome labels order player 1 first") {
    CHECK(nf_labels(2) == std::vector<std::string>{"NN", "NF", "FN", "FF"});
    CHECK(nf_labels(3) == std::vector<std::string>{"NNN", "NNF", "NFN", "NFF", "FNN", "FNF",
                                                   "FFN", "FFF"});
}

TEST_CASE("flip axes differ by player count") {
    quaternion f2 = flip_quaternion(2);
    CHECK(approx_equal(f2, quaternion(0, kInvSqrt2, kInvSqrt2, 0)));
    quaternion f3 = flip_quaternion(3);
    CHECK(approx_equal(f3, quaternion::j()));
    CHECK(approx_equal(flip_operator(2), su2(f2)));
}

TEST_CASE("readout bases are orthonormal") {
    for (int players : {2, 3})
        for (bool entangled : {false, true}) {
            auto basis = profile_images(players, entangled);
            REQUIRE(basis.size() == (std::size_t(1) << players));
            for (std::size_t a = 0; a < basis.size(); ++a)
                for (std::size_t b = 0; b < basis.size(); ++b) {
                    double want = a == b ? 1.0 : 0.0;
                    CHECK(std::abs(inner(basis[a], basis[b]) - cplx(want)) < 1e-12);
                }
        }
}

TEST_CASE("identity and flip profiles reproduce the base game") {
    auto games = {builtin_game(builtin::simplified_poker_reduced),
                  builtin_game(builtin::prisoners_dilemma)};
    for (const auto& g : games)
        for (bool entangled : {false, true})
            for (std::size_t s1 = 0; s1 < 2; ++s1)
                for (std::size_t s2 = 0; s2 < 2; ++s2) {
                    std::vector<quantum_mixed> prof = {
                        pure_move(s1 ? flip_quaternion(2) : quaternion::one()),
                        pure_move(s2 ? flip_quaternion(2) : quaternion::one())};
                    auto e = eval_quantum(g, entangled, prof);
                    CHECK(e.exact);
                    std::size_t flat = g.flat_index({s1, s2});
                    for (int p = 0; p < 2; ++p)
                        CHECK(std::abs(e.payoffs[std::size_t(p)] -
                                       g.payoff(flat, p).to_double()) < 1e-12);
                }

    auto ns = builtin_game(builtin::three_player_poker_reduced);
    for (std::size_t k = 0; k < 8; ++k) {
        std::vector<quantum_mixed> prof;
        for (int p = 0; p < 3; ++p)
            prof.push_back(pure_move((k >> (2 - p)) & 1 ? flip_quaternion(3)
                                                        : quaternion::one()));
        auto e = eval_quantum(ns, true, prof);
        for (int p = 0; p < 3; ++p)
            CHECK(std::abs(e.payoffs[std::size_t(p)] - ns.payoff(k, p).to_double()) < 1e-12);
    }
}

TEST_CASE("a known superposition profile") {
    auto sp = builtin_game(builtin::simplified_poker_reduced);
    quaternion move(kInvSqrt2, kInvSqrt2, 0, 0);
    auto dist = outcome_distribution(2, true, {su2(move), su2(quaternion::one())});
    CHECK(dist[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(dist[1] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(dist[2] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(dist[3]) < 1e-12);
    auto pay = quantum_payoffs(sp, dist);
    CHECK(pay[0] == doctest::Approx(15.0 / 16.0).epsilon(1e-12));
    CHECK(pay[1] == doctest::Approx(-15.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("unentangled play is the classical mixed extension") {
    auto g = builtin_game(builtin::chicken);
    rng_stream rng(17);
    for (int t = 0; t < 25; ++t) {
        double w1 = rng.uniform(), w2 = rng.uniform();
        std::vector<std::vector<double>> mix = {{w1, 1.0 - w1}, {w2, 1.0 - w2}};
        std::vector<quantum_mixed> strat = {
            atom_mixture({quaternion::one(), flip_quaternion(2)}, {w1, 1.0 - w1}),
            atom_mixture({quaternion::one(), flip_quaternion(2)}, {w2, 1.0 - w2})};
        auto classical = expected_payoffs(to_real(g), mix);
        auto quantum = eval_quantum(g, false, strat);
        for (int p = 0; p < 2; ++p)
            CHECK(std::abs(classical[std::size_t(p)] - quantum.payoffs[std::size_t(p)]) < 1e-12);
    }
}

TEST_CASE("sampling needs a sample count and is reproducible") {
    auto sp = builtin_game(builtin::simplified_poker_reduced);
    std::vector<quantum_mixed> strat = {haar_move(), haar_move()};
    CHECK_THROWS_AS(eval_quantum(sp, true, strat, 5, 0), std::invalid_argument);

    auto a = eval_quantum(sp, true, strat, 5, 2000);
    auto b = eval_quantum(sp, true, strat, 5, 2000);
    CHECK_FALSE(a.exact);
    CHECK(a.samples == 2000);
    CHECK(a.payoffs == b.payoffs);
    CHECK(a.stderrs == b.stderrs);
    CHECK(a.mean_distribution == b.mean_distribution);
    CHECK(a.stderrs[0] > 0.0);
    CHECK(a.distribution_stderrs[0] > 0.0);

    auto c = eval_quantum(sp, true, strat, 6, 2000);
    CHECK(c.payoffs != a.payoffs);
}

TEST_CASE("calibration pins a unique component map") {
    auto cal = calibrate_assignment(2);
    CHECK(cal.found);
    CHECK(cal.unique);
    CHECK(cal.consistent_count == 1);
    CHECK(cal.max_error < 1e-9);

    rng_stream rng(23);
    auto sp = builtin_game(builtin::simplified_poker_reduced);
    for (int t = 0; t < 50; ++t) {
        quaternion p = sample_unit_quaternion(rng);
        quaternion q = sample_unit_quaternion(rng);
        auto fast = quaternion_payoff(sp, p, q, cal.assignment);
        auto oracle = outcome_distribution(2, true, {su2(p), su2(q)});
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(std::abs(fast.distribution[k] - oracle[k]) < 1e-12);
    }
    CHECK_THROWS_AS(
        quaternion_payoff(sp, quaternion(2, 0, 0, 0), quaternion::one(), cal.assignment),
        std::domain_error);
}

TEST_CASE("no closed form survives the three-player search") {
    auto cal = calibrate_assignment(3);
    CHECK_FALSE(cal.found);
    CHECK_FALSE(cal.note.empty());
}

TEST_CASE("a known pure profile through the fast path") {
    auto sp = builtin_game(builtin::simplified_poker_reduced);
    auto cal = calibrate_assignment(2);
    auto r = quaternion_payoff(sp, quaternion::i(), quaternion::one(), cal.assignment);
    CHECK(r.distribution[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.distribution[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.distribution[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(r.distribution[3]) < 1e-12);
    CHECK(r.payoffs[0] == doctest::Approx(15.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("strategy copies inside the octonions") {
    octonion inside(quaternion(0.5, 0.5, 0.5, 0.5), quaternion(0, 0, 0, 0));
    CHECK(approx_equal(quaternion_in_copy(inside), quaternion(0.5, 0.5, 0.5, 0.5)));
    octonion outside = octonion::unit(4);
    CHECK_THROWS_AS(quaternion_in_copy(outside), std::domain_error);

    auto ns = builtin_game(builtin::three_player_poker_reduced);
    octonion p(quaternion::i(), quaternion(0, 0, 0, 0));
    octonion q(quaternion::j(), quaternion(0, 0, 0, 0));
    octonion r(quaternion::k(), quaternion(0, 0, 0, 0));
    auto fast = octonion_payoff(ns, p, q, r);
    auto oracle = outcome_distribution(
        3, true, {su2(quaternion::i()), su2(quaternion::j()), su2(quaternion::k())});
    for (std::size_t k = 0; k < 8; ++k)
        CHECK(std::abs(fast.distribution[k] - oracle[k]) < 1e-12);
}

TEST_CASE("uniform discrete mixtures") {
    auto q8 = q8_strategy();
    REQUIRE(q8.atoms.size() == 4);
    CHECK(approx_equal(q8.atoms[0], quaternion::one()));
    CHECK(q8.weights == std::vector<double>{0.25, 0.25, 0.25, 0.25});
    CHECK(discrete_equivalent(2).size() == 2);
    CHECK(discrete_equivalent(3).size() == 3);

    auto sp = builtin_game(builtin::simplified_poker_reduced);
    auto uni = uniform_equilibrium_payoff(sp);
    CHECK(uni[0] == rational(15, 16));
    CHECK(uni[1] == rational(-15, 16));
    auto ns_uni = uniform_equilibrium_payoff(builtin_game(builtin::three_player_poker_reduced));
    CHECK(ns_uni[0] == rational(7, 8));
    CHECK(ns_uni[1] == rational(7, 8));
    CHECK(ns_uni[2] == rational(-7, 4));
    auto pd_uni = uniform_equilibrium_payoff(builtin_game(builtin::prisoners_dilemma));
    CHECK(pd_uni[0] == rational(9, 4));

    // One player's uniform four-point mixture flattens the whole outcome
    // distribution, whatever the pure opponent does.
    rng_stream rng(29);
    for (int t = 0; t < 20; ++t) {
        std::vector<quantum_mixed> strat = {q8_strategy(), pure_move(sample_unit_quaternion(rng))};
        auto e = eval_quantum(sp, true, strat);
        CHECK(e.exact);
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(std::abs(e.mean_distribution[k] - 0.25) < 1e-12);
        CHECK(std::abs(e.payoffs[0] - 15.0 / 16.0) < 1e-12);
    }
}

TEST_CASE("security sweeps") {
    auto sp = builtin_game(builtin::simplified_poker_reduced);
    auto rep = verify_security(sp, 0, 2000, 5, 99);
    CHECK(rep.holder == 0);
    CHECK_FALSE(rep.joint);
    CHECK(rep.uniform_payoffs[0] == rational(15, 16));
    REQUIRE(rep.entries.size() == 5);
    CHECK(rep.all_discrete_uniform);
    for (const auto& e : rep.entries) {
        CHECK(e.discrete_uniform);
        CHECK(e.discrete_spread < 1e-12);
    }

    auto ns = builtin_game(builtin::three_player_poker_reduced);
    auto joint = verify_security(ns, 0, 2000, 3, 99);
    CHECK(joint.joint);
    CHECK(joint.uniform_payoffs[2] == rational(-7, 4));
    CHECK(joint.all_discrete_uniform);

    auto third = verify_security(ns, 2, 2000, 3, 99);
    CHECK_FALSE(third.joint);
    CHECK_FALSE(third.notes.empty());
}

TEST_CASE("every pure profile admits a profitable deviation") {
    auto sp = builtin_game(builtin::simplified_poker_reduced);
    auto cal = calibrate_assignment(2);
    rng_stream rng(31);
    for (int t = 0; t < 20; ++t) {
        quaternion p = sample_unit_quaternion(rng);
        quaternion q = sample_unit_quaternion(rng);
        auto w = no_pure_equilibrium_witness(sp, p, q, cal.assignment);
        REQUIRE(w.found);
        CHECK(w.achieved_payoff > w.current_payoff);
        CHECK(std::abs(w.achieved_payoff - w.best_outcome_payoff) < 1e-9);
    }

    strategic_game flat({{"a", "b"}, {"x", "y"}});
    auto w = no_pure_equilibrium_witness(flat, quaternion::one(), quaternion::one(),
                                         cal.assignment);
    CHECK_FALSE(w.found);
    CHECK_FALSE(w.note.empty());
}

TEST_CASE("classical against quantized values") {
    auto rows = comparison_report();
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].classical_exact[0] == rational(5, 6));
    CHECK(rows[0].quantized_exact[0] == rational(15, 16));
    CHECK(rows[1].classical_exact[2] == rational(4, 5));
    CHECK(rows[1].quantized_exact[2] == rational(-7, 4));
    for (const auto& r : rows) CHECK_FALSE(r.note.empty());
}
