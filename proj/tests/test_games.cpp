#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qpoker/correlated.hpp"
#include "qpoker/dominance.hpp"
#include "qpoker/mixed.hpp"
#include "qpoker/solvers.hpp"

using namespace qp;

TEST_CASE("builtin games") {
    auto names = builtin_game_names();
    CHECK(names.size() == 4);
    CHECK_THROWS_AS(builtin_game("nope"), std::invalid_argument);

    auto pd = builtin_game("prisoners-dilemma");
    CHECK(pd.payoff({0, 0}, 0) == rational(3));
    CHECK(pd.payoff({0, 1}, 0) == rational(0));
    CHECK(pd.payoff({1, 0}, 0) == rational(5));
    CHECK(pd.payoff({1, 1}, 0) == rational(1));
    CHECK(pd.label(0, 1) == "D");
    CHECK_FALSE(pd.zero_sum());

    auto ch = builtin_game("chicken");
    CHECK(ch.payoff({0, 1}, 1) == rational(3));
    CHECK(ch.payoff({1, 1}, 0) == rational(-1));

    auto sp = builtin_game("simplified-poker");
    CHECK(sp.zero_sum());
    CHECK(sp.payoff({0, 1}, 0) == rational(5, 2));
    CHECK(sp.label(0, 0) == "s1");

    auto ns = builtin_game("three-player-poker");
    CHECK(ns.players() == 3);
    CHECK(ns.payoff({1, 1, 1}, 2) == rational(-20));
}

TEST_CASE("the dilemma is dominance solvable") {
    auto pd = builtin_game("prisoners-dilemma");
    auto r = reduce_by_dominance(pd, true, false);
    REQUIRE(r.trace.size() == 2);
    CHECK(r.trace[0].mode == "strong");
    CHECK(r.trace[1].mode == "strong");
    CHECK(r.surviving[0] == std::vector<std::size_t>{1});
    CHECK(r.surviving[1] == std::vector<std::size_t>{1});

    auto rep = analyze_profile<rational>(pd, {{rational(0), rational(1)},
                                             {rational(0), rational(1)}});
    CHECK(is_nash(rep));
    CHECK(rep.values[0] == rational(1));
}

TEST_CASE("mixed profile analysis") {
    auto ch = builtin_game("chicken");
    std::vector<std::vector<rational>> mix = {{rational(1, 2), rational(1, 2)},
                                              {rational(1, 2), rational(1, 2)}};
    auto rep = analyze_profile(ch, mix);
    CHECK(rep.values[0] == rational(1));
    CHECK(rep.values[1] == rational(1));
    CHECK(rep.max_regret == rational(0));
    CHECK(is_nash(rep));

    // Pure straight versus pure swerve is also stable.
    auto pure = analyze_profile<rational>(ch, {{rational(0), rational(1)},
                                               {rational(1), rational(0)}});
    CHECK(is_nash(pure));
    CHECK(pure.values[0] == rational(3));

    CHECK_THROWS_AS(analyze_profile<rational>(ch, {{rational(1)}, {rational(1), rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        analyze_profile<rational>(ch, {{rational(2), rational(-1)}, {rational(1), rational(0)}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        analyze_profile<rational>(ch, {{rational(1, 2), rational(1, 4)}, {rational(1), rational(0)}}),
        std::invalid_argument);
}

TEST_CASE("two-by-two zero-sum solver") {
    auto sp = builtin_game("simplified-poker");
    auto sol = solve_zero_sum_2x2(sp);
    CHECK_FALSE(sol.saddle);
    CHECK(sol.row[0] == rational(1, 3));
    CHECK(sol.row[1] == rational(2, 3));
    CHECK(sol.col[0] == rational(2, 3));
    CHECK(sol.col[1] == rational(1, 3));
    CHECK(sol.value == rational(5, 6));

    strategic_game g({{"a", "b"}, {"x", "y"}}, true);
    g.payoff({0, 0}, 0) = rational(2);
    g.payoff({0, 1}, 0) = rational(1);
    g.payoff({1, 0}, 0) = rational(4);
    g.payoff({1, 1}, 0) = rational(3);
    for (std::size_t f = 0; f < 4; ++f) g.payoff(f, 1) = -g.payoff(f, 0);
    auto saddle = solve_zero_sum_2x2(g);
    CHECK(saddle.saddle);
    CHECK(saddle.row == std::vector<rational>{rational(0), rational(1)});
    CHECK(saddle.col == std::vector<rational>{rational(0), rational(1)});
    CHECK(saddle.value == rational(3));
}

TEST_CASE("security levels") {
    auto sp = builtin_game("simplified-poker");
    CHECK(security_level(sp, 0, {rational(1, 3), rational(2, 3)}) == rational(5, 6));
    CHECK(security_level(sp, 0, {rational(1), rational(0)}) == rational(0));
    CHECK(security_level(sp, 1, {rational(2, 3), rational(1, 3)}) == rational(-5, 6));
}

TEST_CASE("two-player poker solution") {
    auto s = solve_simplified_poker();
    CHECK(s.value == rational(5, 6));
    CHECK(s.first_strategy_weight == rational(1, 3));
    CHECK(s.deceptive_weight == rational(2, 3));
    CHECK(s.sol.col[0] == rational(2, 3));
    CHECK(s.sol.col[1] == rational(1, 3));
    CHECK(s.security_reduced == rational(5, 6));
    CHECK(s.security_full == rational(5, 6));

    auto rep = analyze_profile<rational>(s.reduced, {s.sol.row, s.sol.col});
    CHECK(is_nash(rep));
    CHECK(rep.values[0] == rational(5, 6));
    CHECK(rep.values[1] == rational(-5, 6));
}

TEST_CASE("three-player poker solution") {
    auto s = solve_three_player_poker();
    CHECK(s.p == doctest::Approx(std::sqrt(1.4) - 1.0).epsilon(1e-12));
    CHECK(std::abs(5.0 * s.p * s.p + 10.0 * s.p - 2.0) < 1e-9);
    CHECK(s.z == doctest::Approx((4.0 * s.p + 8.0) / (5.0 * s.p + 12.0)).epsilon(1e-9));
    CHECK(s.indifference_gap < 1e-9);
    CHECK(s.is_nash);
    CHECK(s.max_regret < 1e-9);
    CHECK(s.payoffs[0] == doctest::Approx(-0.4).epsilon(1e-2));
    CHECK(s.payoffs[1] == doctest::Approx(-0.4).epsilon(1e-2));
    CHECK(s.payoffs[2] == doctest::Approx(0.8).epsilon(1e-2));
    CHECK(s.exact_payoffs[0] == rational(-2, 5));
    CHECK(s.exact_payoffs[1] == rational(-2, 5));
    CHECK(s.exact_payoffs[2] == rational(4, 5));
}

TEST_CASE("snap-off chance") {
    CHECK(snap_off_probability(0.0) == doctest::Approx(0.0));
    CHECK(snap_off_probability(1.0) == doctest::Approx(0.75));
    double p = std::sqrt(1.4) - 1.0;
    CHECK(snap_off_probability(p) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
    CHECK_THROWS_AS(snap_off_probability(-0.1), std::domain_error);
    CHECK_THROWS_AS(snap_off_probability(1.5), std::domain_error);

    auto est = simulate_snap_off(123, 20000);
    CHECK(est.total == 20000);
    CHECK(est.conditioned > 0);
    CHECK(est.exact == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
    CHECK(std::abs(est.estimate - est.exact) < 5.0 * est.stderr_);

    auto again = simulate_snap_off(123, 20000);
    CHECK(again.estimate == est.estimate);
    CHECK(again.conditioned == est.conditioned);
}

TEST_CASE("correlated distribution validation") {
    auto ch = builtin_game("chicken");
    correlated_distribution bad = {rational(1, 2), rational(1, 2), rational(1, 2), rational(-1, 2)};
    CHECK_THROWS_AS(validate_distribution(ch, bad), std::invalid_argument);
    correlated_distribution short_rho = {rational(1)};
    CHECK_THROWS_AS(validate_distribution(ch, short_rho), std::invalid_argument);
    correlated_distribution not_one = {rational(1, 2), rational(0), rational(0), rational(0)};
    CHECK_THROWS_AS(validate_distribution(ch, not_one), std::invalid_argument);
}

TEST_CASE("signal devices on chicken") {
    auto ch = builtin_game("chicken");
    correlated_distribution three = {rational(1, 3), rational(1, 3), rational(1, 3), rational(0)};
    auto pay = correlated_payoffs(ch, three);
    CHECK(pay[0] == rational(5, 3));
    CHECK(pay[1] == rational(5, 3));
    auto check = check_correlated_equilibrium(ch, three);
    CHECK(check.ok);
    CHECK(check.worst_gain <= rational(0));

    correlated_distribution coin = {rational(0), rational(1, 2), rational(1, 2), rational(0)};
    auto coin_pay = correlated_payoffs(ch, coin);
    CHECK(coin_pay[0] == rational(3, 2));
    CHECK(coin_pay[1] == rational(3, 2));
    CHECK(check_correlated_equilibrium(ch, coin).ok);

    CHECK(mediated_obedience_holds(ch, three));
    CHECK(mediated_obedience_holds(ch, coin));

    auto meta = build_mediated_game(ch, three);
    CHECK(meta.count(0) == 4);
    CHECK(meta.label(0, 0) == "always-swerve");
    CHECK(meta.label(0, 1) == "always-straight");
    CHECK(meta.label(0, mediated_obey_index()) == "obey");
    CHECK(meta.label(0, 3) == "invert");
    std::size_t obey = mediated_obey_index();
    CHECK(meta.payoff({obey, obey}, 0) == rational(5, 3));
    CHECK(meta.payoff({obey, obey}, 1) == rational(5, 3));
}

TEST_CASE("signal devices on the dilemma") {
    auto pd = builtin_game("prisoners-dilemma");
    correlated_distribution all_defect = {rational(0), rational(0), rational(0), rational(1)};
    CHECK(check_correlated_equilibrium(pd, all_defect).ok);
    CHECK(mediated_obedience_holds(pd, all_defect));

    correlated_distribution uniform = {rational(1, 4), rational(1, 4), rational(1, 4),
                                       rational(1, 4)};
    auto check = check_correlated_equilibrium(pd, uniform);
    CHECK_FALSE(check.ok);
    CHECK(check.worst_gain > rational(0));
    CHECK_FALSE(mediated_obedience_holds(pd, uniform));
}

TEST_CASE("product realizability") {
    auto ch = builtin_game("chicken");
    auto rho = product_distribution(ch, {{rational(1, 3), rational(2, 3)},
                                         {rational(3, 4), rational(1, 4)}});
    CHECK(rho[0] == rational(1, 4));
    CHECK(rho[3] == rational(1, 6));
    CHECK(is_product_realizable(ch, rho));

    correlated_distribution diag = {rational(1, 2), rational(0), rational(0), rational(1, 2)};
    CHECK_FALSE(is_product_realizable(ch, diag));
}
