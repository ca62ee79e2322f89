#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "qpoker/json_io.hpp"
#include "qpoker/solvers.hpp"

using namespace qp;

TEST_CASE("tagged numerics") {
    auto e = exact_number(rational(5, 6));
    CHECK(e["type"] == "exact");
    CHECK(e["value"] == "5/6");
    CHECK(exact_number(rational(-7, 4))["value"] == "-7/4");
    CHECK(exact_number(rational(3))["value"] == "3");

    auto m = estimate_number(1.5, 0.25);
    CHECK(m["type"] == "estimate");
    CHECK(m["value"] == 1.5);
    CHECK(m["stderr"] == 0.25);
}

TEST_CASE("game serialization round-trips") {
    for (auto which : {builtin::simplified_poker_reduced, builtin::three_player_poker_reduced,
                       builtin::chicken}) {
        auto g = builtin_game(which);
        auto j = game_to_json(g);
        CHECK(j["players"] == g.players());
        auto back = game_from_json(j);
        CHECK(back.labels() == g.labels());
        CHECK(back.zero_sum() == g.zero_sum());
        for (std::size_t f = 0; f < g.total_profiles(); ++f)
            for (int p = 0; p < g.players(); ++p)
                CHECK(back.payoff(f, p) == g.payoff(f, p));
    }

    auto j = game_to_json(builtin_game(builtin::chicken));
    j["payoffs"].erase(3);
    CHECK_THROWS_AS(game_from_json(j), std::invalid_argument);
}

TEST_CASE("build payload") {
    poker_spec spec(poker_variant::simplified, rational(15), rational(10));
    auto b = build_poker(spec);
    auto j = build_to_json(b, false);
    CHECK(j["variant"] == "sp");
    CHECK(j["players"] == 2);
    CHECK(j["ante"]["value"] == "15");
    CHECK(j["bet"]["value"] == "10");
    CHECK(j["action_sequences"] == std::vector<std::string>{"BB", "BP", "P"});
    CHECK(j["class_counts"] == std::vector<std::size_t>{4, 4});
    REQUIRE(j["quotient"].size() == 2);
    CHECK(j["quotient"][0]["count"] == 4);
    CHECK_FALSE(j["quotient"][0]["classes"][0].contains("members"));
    auto with = build_to_json(b, true);
    CHECK(with["quotient"][0]["classes"][0].contains("members"));
    CHECK(j["surviving_plan_ids"] ==
          std::vector<std::vector<unsigned>>{{2, 3}, {2, 3}});
    REQUIRE(j["trace"].size() == 4);
    CHECK(j["trace"][0]["mode"] == "weak");
    auto reduced = game_from_json(j["reduced"]);
    CHECK(reduced.payoff(std::size_t(1), 0) == rational(5, 2));
}

TEST_CASE("trace rows in CSV") {
    std::vector<elimination_step> trace = {{1, 1, "H=P,L=P", "H=B,L=P", "weak"},
                                           {2, 2, "H=B,L=B", "H=B,L=P", "strong"}};
    CHECK(trace_to_csv(trace) ==
          "round,player,removed,dominator,mode\n"
          "1,1,H=P,L=P,H=B,L=P,weak\n"
          "2,2,H=B,L=B,H=B,L=P,strong\n");
    CHECK(trace_to_csv({}) == "round,player,removed,dominator,mode\n");
}

TEST_CASE("solution payloads") {
    auto sp = simplified_solution_to_json(solve_simplified_poker());
    CHECK(sp["value"]["value"] == "5/6");
    CHECK(sp["row_mix"]["s1"]["value"] == "1/3");
    CHECK(sp["col_mix"]["t1"]["value"] == "2/3");
    CHECK(sp["first_strategy_weight"]["value"] == "1/3");
    CHECK(sp["deceptive_weight"]["value"] == "2/3");
    CHECK(sp["security_full"]["value"] == "5/6");

    auto ns = three_player_solution_to_json(solve_three_player_poker());
    CHECK(ns["p"]["type"] == "estimate");
    CHECK(ns["p"]["stderr"] == 0.0);
    REQUIRE(ns["payoffs"].size() == 3);
    CHECK(ns["payoffs"][2]["exact_limit"]["value"] == "4/5");
    CHECK(ns["is_nash"] == true);

    auto snap = snap_off_to_json(simulate_snap_off(11, 4000));
    CHECK(snap["closed_form"]["value"].get<double>() == doctest::Approx(2.0 / 7.0));
    CHECK(snap["estimate"]["stderr"].get<double>() > 0.0);
    CHECK(snap["total_deals"] == 4000);
}

TEST_CASE("quantum evaluation payload") {
    auto sp = builtin_game(builtin::simplified_poker_reduced);
    auto exact = eval_quantum(sp, true, {pure_move(quaternion::i()), pure_move(quaternion::one())});
    auto j = quantum_eval_to_json(exact, nf_labels(2));
    CHECK(j["deterministic"] == true);
    CHECK(j["distribution"]["NF"]["value"].get<double>() == doctest::Approx(0.5));
    CHECK(j["distribution"]["NF"]["stderr"] == 0.0);
    CHECK(j["payoffs"][0]["stderr"] == 0.0);

    auto mc = eval_quantum(sp, true, {haar_move(), haar_move()}, 3, 500);
    auto mj = quantum_eval_to_json(mc, nf_labels(2));
    CHECK(mj["deterministic"] == false);
    CHECK(mj["samples"] == 500);
    CHECK(mj["distribution"]["NN"]["stderr"].get<double>() > 0.0);
    CHECK(mj["payoffs"][0]["stderr"].get<double>() > 0.0);
}

TEST_CASE("stable dumps") {
    ordered_json j;
    j["b"] = 1;
    j["a"] = 2;
    auto text = dump_stable(j);
    CHECK(text == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
    CHECK(ordered_json::parse(text) == j);
}
