#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qpoker/correlated.hpp"
#include "qpoker/game.hpp"
#include "qpoker/poker.hpp"
#include "qpoker/quantized.hpp"
#include "qpoker/solvers.hpp"

namespace qp {

using ordered_json = nlohmann::ordered_json;

// Tagged numerics: exact values ship as rational strings, sampled values
// carry their standard error.
ordered_json exact_number(const rational& v);
ordered_json estimate_number(double value, double stderr_value);

ordered_json game_to_json(const strategic_game& g);
strategic_game game_from_json(const ordered_json& j);

ordered_json build_to_json(const poker_build& b, bool include_classes);
std::string trace_to_csv(const std::vector<elimination_step>& trace);

ordered_json simplified_solution_to_json(const simplified_poker_solution& s);
ordered_json three_player_solution_to_json(const three_player_solution& s);
ordered_json snap_off_to_json(const snap_off_estimate& e);
ordered_json zero_sum_solution_to_json(const zero_sum_solution& s,
                                       const std::vector<std::string>& row_labels,
                                       const std::vector<std::string>& col_labels);

ordered_json quantum_eval_to_json(const quantum_eval& e, const std::vector<std::string>& outcomes);
ordered_json security_report_to_json(const security_report& r);
ordered_json comparison_to_json(const std::vector<comparison_row>& rows);
ordered_json obedience_to_json(const obedience_check& c);

std::string dump_stable(const ordered_json& j);

}  // namespace qp
