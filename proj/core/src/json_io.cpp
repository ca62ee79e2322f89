#include "qpoker/json_io.hpp"

#include <sstream>

namespace qp {

ordered_json exact_number(const rational& v) {
    return ordered_json{{"type", "exact"}, {"value", v.str()}};
}

ordered_json estimate_number(double value, double stderr_value) {
    return ordered_json{{"type", "estimate"}, {"value", value}, {"stderr", stderr_value}};
}

ordered_json game_to_json(const strategic_game& g) {
    ordered_json j;
    j["players"] = g.players();
    j["strategies"] = g.labels();
    j["zero_sum"] = g.zero_sum();
    ordered_json payoffs = ordered_json::array();
    for (std::size_t f = 0; f < g.total_profiles(); ++f) {
        ordered_json row = ordered_json::array();
        for (int p = 0; p < g.players(); ++p) row.push_back(g.payoff(f, p).str());
        payoffs.push_back(std::move(row));
    }
    j["payoffs"] = std::move(payoffs);
    return j;
}

strategic_game game_from_json(const ordered_json& j) {
    std::vector<std::vector<std::string>> labels =
        j.at("strategies").get<std::vector<std::vector<std::string>>>();
    bool zero_sum = j.value("zero_sum", false);
    strategic_game g(labels, zero_sum);
    const auto& payoffs = j.at("payoffs");
    if (payoffs.size() != g.total_profiles())
        throw std::invalid_argument("game json: payoff row count");
    for (std::size_t f = 0; f < g.total_profiles(); ++f) {
        const auto& row = payoffs.at(f);
        if (int(row.size()) != g.players())
            throw std::invalid_argument("game json: payoff row arity");
        for (int p = 0; p < g.players(); ++p)
            g.payoff(f, p) = rational::parse(row.at(std::size_t(p)).get<std::string>());
    }
    return g;
}

ordered_json build_to_json(const poker_build& b, bool include_classes) {
    ordered_json j;
    j["variant"] = b.spec.variant == poker_variant::simplified ? "sp" : "ns";
    j["players"] = b.spec.players();
    j["ante"] = exact_number(b.spec.ante);
    j["bet"] = exact_number(b.spec.bet);
    j["action_sequences"] = b.action_sequences;
    j["class_counts"] = b.class_counts;
    ordered_json classes = ordered_json::array();
    for (int p = 0; p < b.spec.players(); ++p) {
        ordered_json pc;
        pc["player"] = p + 1;
        pc["count"] = b.class_counts[std::size_t(p)];
        ordered_json reps = ordered_json::array();
        for (std::size_t c = 0; c < b.classes[std::size_t(p)].representative.size(); ++c) {
            ordered_json rc;
            unsigned rep = b.classes[std::size_t(p)].representative[c];
            rc["label"] = plan_label(b.spec, rep);
            rc["plan_id"] = rep;
            rc["size"] = b.classes[std::size_t(p)].members[c].size();
            if (include_classes) rc["members"] = b.classes[std::size_t(p)].members[c];
            reps.push_back(std::move(rc));
        }
        pc["classes"] = std::move(reps);
        classes.push_back(std::move(pc));
    }
    j["quotient"] = std::move(classes);
    j["reduced"] = game_to_json(b.reduced);
    j["surviving_plan_ids"] = b.surviving_representatives;
    ordered_json trace = ordered_json::array();
    for (const auto& step : b.trace) {
        trace.push_back(ordered_json{{"round", step.round},
                                     {"player", step.player},
                                     {"removed", step.removed},
                                     {"dominator", step.dominator},
                                     {"mode", step.mode}});
    }
    j["trace"] = std::move(trace);
    return j;
}

std::string trace_to_csv(const std::vector<elimination_step>& trace) {
    std::ostringstream out;
    out << "round,player,removed,dominator,mode\n";
    for (const auto& s : trace)
        out << s.round << ',' << s.player << ',' << s.removed << ',' << s.dominator << ','
            << s.mode << '\n';
    return out.str();
}

ordered_json simplified_solution_to_json(const simplified_poker_solution& s) {
    ordered_json j;
    j["game"] = "simplified-poker";
    j["row_mix"] = {{"s1", exact_number(s.sol.row[0])}, {"s2", exact_number(s.sol.row[1])}};
    j["col_mix"] = {{"t1", exact_number(s.sol.col[0])}, {"t2", exact_number(s.sol.col[1])}};
    j["value"] = exact_number(s.value);
    j["first_strategy_weight"] = exact_number(s.first_strategy_weight);
    j["deceptive_weight"] = exact_number(s.deceptive_weight);
    j["security_reduced"] = exact_number(s.security_reduced);
    j["security_full"] = exact_number(s.security_full);
    return j;
}

ordered_json three_player_solution_to_json(const three_player_solution& s) {
    ordered_json j;
    j["game"] = "three-player-poker";
    j["p"] = estimate_number(s.p, 0.0);
    j["z"] = estimate_number(s.z, 0.0);
    ordered_json pay = ordered_json::array();
    for (std::size_t k = 0; k < 3; ++k) {
        ordered_json e;
        e["computed"] = estimate_number(s.payoffs[k], 0.0);
        e["exact_limit"] = exact_number(s.exact_payoffs[k]);
        pay.push_back(std::move(e));
    }
    j["payoffs"] = std::move(pay);
    j["indifference_gap"] = estimate_number(s.indifference_gap, 0.0);
    j["max_regret"] = estimate_number(s.max_regret, 0.0);
    j["is_nash"] = s.is_nash;
    return j;
}

ordered_json snap_off_to_json(const snap_off_estimate& e) {
    ordered_json j;
    j["closed_form"] = estimate_number(e.exact, 0.0);
    j["estimate"] = estimate_number(e.estimate, e.stderr_);
    j["conditioned_deals"] = e.conditioned;
    j["total_deals"] = e.total;
    return j;
}

ordered_json zero_sum_solution_to_json(const zero_sum_solution& s,
                                       const std::vector<std::string>& row_labels,
                                       const std::vector<std::string>& col_labels) {
    ordered_json j;
    ordered_json row, col;
    for (std::size_t k = 0; k < row_labels.size(); ++k)
        row[row_labels[k]] = exact_number(s.row[k]);
    for (std::size_t k = 0; k < col_labels.size(); ++k)
        col[col_labels[k]] = exact_number(s.col[k]);
    j["row_mix"] = std::move(row);
    j["col_mix"] = std::move(col);
    j["value"] = exact_number(s.value);
    j["saddle"] = s.saddle;
    return j;
}

ordered_json quantum_eval_to_json(const quantum_eval& e,
                                  const std::vector<std::string>& outcomes) {
    ordered_json j;
    ordered_json dist;
    for (std::size_t k = 0; k < outcomes.size(); ++k)
        dist[outcomes[k]] = estimate_number(e.mean_distribution[k],
                                            e.exact ? 0.0 : e.distribution_stderrs[k]);
    j["distribution"] = std::move(dist);
    ordered_json pay = ordered_json::array();
    for (std::size_t p = 0; p < e.payoffs.size(); ++p)
        pay.push_back(estimate_number(e.payoffs[p], e.stderrs[p]));
    j["payoffs"] = std::move(pay);
    j["deterministic"] = e.exact;
    j["samples"] = e.samples;
    return j;
}

ordered_json security_report_to_json(const security_report& r) {
    ordered_json j;
    j["holder"] = r.holder + 1;
    j["joint"] = r.joint;
    ordered_json uni = ordered_json::array();
    for (const auto& v : r.uniform_payoffs) uni.push_back(exact_number(v));
    j["uniform_payoffs"] = std::move(uni);
    j["all_discrete_uniform"] = r.all_discrete_uniform;
    j["all_haar_within"] = r.all_haar_within;
    ordered_json entries = ordered_json::array();
    for (const auto& e : r.entries) {
        ordered_json ej;
        ordered_json opp = ordered_json::array();
        for (const auto& m : e.opponent_moves) opp.push_back({m.w, m.x, m.y, m.z});
        ej["opponents"] = std::move(opp);
        ordered_json dp = ordered_json::array();
        for (double v : e.discrete_payoffs) dp.push_back(estimate_number(v, 0.0));
        ej["discrete_payoffs"] = std::move(dp);
        ej["discrete_spread"] = estimate_number(e.discrete_spread, 0.0);
        ej["discrete_uniform"] = e.discrete_uniform;
        ordered_json hp = ordered_json::array();
        for (std::size_t p = 0; p < e.haar_payoffs.size(); ++p)
            hp.push_back(estimate_number(e.haar_payoffs[p], e.haar_stderrs[p]));
        ej["haar_payoffs"] = std::move(hp);
        ej["haar_within"] = e.haar_within;
        entries.push_back(std::move(ej));
    }
    j["entries"] = std::move(entries);
    j["notes"] = r.notes;
    return j;
}

ordered_json comparison_to_json(const std::vector<comparison_row>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["game"] = r.game;
        ordered_json ce = ordered_json::array(), qe = ordered_json::array();
        for (const auto& v : r.classical_exact) ce.push_back(exact_number(v));
        for (const auto& v : r.quantized_exact) qe.push_back(exact_number(v));
        j["classical"] = std::move(ce);
        j["quantized"] = std::move(qe);
        j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

ordered_json obedience_to_json(const obedience_check& c) {
    ordered_json j;
    j["ok"] = c.ok;
    j["worst_gain"] = exact_number(c.worst_gain);
    if (c.player >= 0) {
        j["player"] = c.player + 1;
        j["signal"] = c.signal;
        j["deviation"] = c.deviation;
    }
    return j;
}

std::string dump_stable(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace qp
