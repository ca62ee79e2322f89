#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpoker/ewl.hpp"
#include "qpoker/json_io.hpp"
#include "qpoker/mixed.hpp"
#include "qpoker/verify.hpp"

using namespace qp;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

int fail_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

// Builtin name (with sp/ns/pd shorthands) or a path to a game JSON file.
strategic_game resolve_game(const std::string& ref, std::string& canonical) {
    std::string n = lower(ref);
    if (n == "sp") n = "simplified-poker";
    if (n == "ns") n = "three-player-poker";
    if (n == "pd") n = "prisoners-dilemma";
    const auto names = builtin_game_names();
    if (std::find(names.begin(), names.end(), n) != names.end()) {
        canonical = n;
        return builtin_game(n);
    }
    if (std::filesystem::exists(ref)) {
        std::ifstream f(ref);
        if (!f) throw std::runtime_error("cannot read game file: " + ref);
        ordered_json j = ordered_json::parse(f);
        canonical = ref;
        return game_from_json(j);
    }
    throw std::runtime_error("unknown game '" + ref + "' (builtins: " +
                             [&] {
                                 std::string all;
                                 for (const auto& b : names) all += (all.empty() ? "" : ", ") + b;
                                 return all;
                             }() +
                             "; or a JSON file path)");
}

std::string format_game_table(const strategic_game& g) {
    std::ostringstream out;
    auto cell = [&](std::size_t flat) {
        std::string s = "(";
        for (int p = 0; p < g.players(); ++p) s += (p ? "," : "") + g.payoff(flat, p).str();
        return s + ")";
    };
    if (g.players() == 2) {
        for (std::size_t r = 0; r < g.count(0); ++r) {
            out << std::setw(8) << g.label(0, r) << " |";
            for (std::size_t c = 0; c < g.count(1); ++c)
                out << ' ' << std::setw(14) << cell(g.flat_index({r, c}));
            out << '\n';
        }
        out << "   cols:";
        for (std::size_t c = 0; c < g.count(1); ++c) out << ' ' << g.label(1, c);
        out << '\n';
        return out.str();
    }
    if (g.players() == 3) {
        for (std::size_t u = 0; u < g.count(2); ++u) {
            out << "[player 3: " << g.label(2, u) << "]\n";
            for (std::size_t r = 0; r < g.count(0); ++r) {
                out << std::setw(8) << g.label(0, r) << " |";
                for (std::size_t c = 0; c < g.count(1); ++c)
                    out << ' ' << std::setw(14) << cell(g.flat_index({r, c, u}));
                out << '\n';
            }
        }
        return out.str();
    }
    for (std::size_t f = 0; f < g.total_profiles(); ++f) {
        auto prof = g.profile_at(f);
        out << '(';
        for (int p = 0; p < g.players(); ++p) out << (p ? "," : "") << g.label(p, prof[std::size_t(p)]);
        out << ") -> " << cell(f) << '\n';
    }
    return out.str();
}

// A preset string for one player's move distribution:
//   identity | flip | haar | q8 | oct8 | "mix N:2/3,F:1/3" | "quat a,b,c,d"
quantum_mixed parse_preset(const std::string& text, int players) {
    std::string t = lower(text);
    if (t == "identity") return pure_move(quaternion::one());
    if (t == "flip") return pure_move(flip_quaternion(players));
    if (t == "haar") return haar_move();
    if (t == "q8") return q8_strategy();
    if (t == "oct8") return oct8_strategy();
    if (t.rfind("mix", 0) == 0) {
        double wn = 0.0, wf = 0.0;
        std::stringstream body(t.substr(3));
        std::string tok;
        while (std::getline(body, tok, ',')) {
            tok.erase(std::remove_if(tok.begin(), tok.end(),
                                     [](unsigned char c) { return std::isspace(c); }),
                      tok.end());
            if (tok.empty()) continue;
            auto colon = tok.find(':');
            if (colon == std::string::npos || colon + 1 == tok.size())
                throw std::runtime_error("mix preset: expected LABEL:WEIGHT, got '" + tok + "'");
            std::string label = tok.substr(0, colon);
            double w = rational::parse(tok.substr(colon + 1)).to_double();
            if (label == "n")
                wn += w;
            else if (label == "f")
                wf += w;
            else
                throw std::runtime_error("mix preset: label must be N or F, got '" + label + "'");
        }
        return atom_mixture({quaternion::one(), flip_quaternion(players)}, {wn, wf});
    }
    if (t.rfind("quat", 0) == 0) {
        std::stringstream body(t.substr(4));
        std::vector<double> comp;
        std::string tok;
        while (std::getline(body, tok, ',')) comp.push_back(std::stod(tok));
        if (comp.size() != 4) throw std::runtime_error("quat preset: need four components");
        return pure_move(quaternion(comp[0], comp[1], comp[2], comp[3]).normalized());
    }
    throw std::runtime_error("unknown preset '" + text +
                             "' (identity, flip, haar, q8, oct8, \"mix N:..,F:..\", \"quat a,b,c,d\")");
}

std::vector<std::size_t> pure_equilibria(const strategic_game& g) {
    std::vector<std::size_t> hits;
    for (std::size_t f = 0; f < g.total_profiles(); ++f) {
        auto prof = g.profile_at(f);
        bool stable = true;
        for (int p = 0; stable && p < g.players(); ++p) {
            for (std::size_t alt = 0; alt < g.count(p); ++alt) {
                if (alt == prof[std::size_t(p)]) continue;
                auto dev = prof;
                dev[std::size_t(p)] = alt;
                if (g.payoff(f, p) < g.payoff(g.flat_index(dev), p)) {
                    stable = false;
                    break;
                }
            }
        }
        if (stable) hits.push_back(f);
    }
    return hits;
}

struct seed_opt {
    std::uint64_t value = 0;
    CLI::Option* opt = nullptr;
    bool given() const { return opt != nullptr && opt->count() > 0; }
};

int run_build(const std::string& variant_name, const std::string& ante_text,
              const std::string& bet_text, bool full, const std::string& format,
              const std::string& out_path) {
    poker_variant variant;
    if (variant_name == "sp")
        variant = poker_variant::simplified;
    else if (variant_name == "ns")
        variant = poker_variant::three_player;
    else
        return fail_usage("variant must be sp or ns");
    rational ante = ante_text.empty()
                        ? (variant == poker_variant::simplified ? rational(15) : rational(16))
                        : rational::parse(ante_text);
    rational bet = bet_text.empty()
                       ? (variant == poker_variant::simplified ? rational(10) : rational(64))
                       : rational::parse(bet_text);
    poker_spec spec(variant, ante, bet);
    auto b = build_poker(spec);
    if (format == "csv") {
        emit(trace_to_csv(b.trace), out_path);
        return 0;
    }
    if (format == "table") {
        std::ostringstream out;
        out << "variant " << variant_name << ", ante " << spec.ante << ", bet " << spec.bet << '\n';
        out << "action sequences (" << b.action_sequences.size() << "):";
        for (const auto& s : b.action_sequences) out << ' ' << s;
        out << '\n' << "equivalence classes per player:";
        for (auto c : b.class_counts) out << ' ' << c;
        out << '\n' << "eliminations: " << b.trace.size() << '\n';
        out << "reduced game:\n" << format_game_table(b.reduced);
        emit(out.str(), out_path);
        return 0;
    }
    ordered_json j = build_to_json(b, full);
    if (full && spec.players() == 2) j["full_game"] = game_to_json(strategic_form(spec));
    emit(dump_stable(j), out_path);
    return 0;
}

int run_solve(const std::string& game_ref, const std::string& format, const std::string& out_path) {
    std::string canon;
    strategic_game g = resolve_game(game_ref, canon);
    ordered_json j;
    bool certified = false;
    std::string summary;

    if (canon == "simplified-poker") {
        auto s = solve_simplified_poker();
        auto rep = analyze_profile<rational>(s.reduced, {s.sol.row, s.sol.col});
        certified = is_nash(rep);
        j = simplified_solution_to_json(s);
        j["certified_equilibrium"] = certified;
        std::ostringstream o;
        o << "value " << s.value << ", row mix (" << s.sol.row[0] << "," << s.sol.row[1]
          << "), col mix (" << s.sol.col[0] << "," << s.sol.col[1] << "), certified "
          << (certified ? "yes" : "no") << '\n';
        summary = o.str();
    } else if (canon == "three-player-poker") {
        auto s = solve_three_player_poker();
        certified = s.is_nash;
        j = three_player_solution_to_json(s);
        std::ostringstream o;
        o << "p = " << s.p << ", z = " << s.z << ", payoffs (" << s.payoffs[0] << ", "
          << s.payoffs[1] << ", " << s.payoffs[2] << "), max regret " << s.max_regret << '\n';
        summary = o.str();
    } else if (g.players() == 2 && g.zero_sum() && g.count(0) == 2 && g.count(1) == 2) {
        auto s = solve_zero_sum_2x2(g);
        auto rep = analyze_profile<rational>(g, {s.row, s.col});
        certified = is_nash(rep);
        j["game"] = canon;
        j["method"] = s.saddle ? "saddle-point" : "zero-sum-2x2";
        j["solution"] = zero_sum_solution_to_json(
            s, {g.label(0, 0), g.label(0, 1)}, {g.label(1, 0), g.label(1, 1)});
        j["certified_equilibrium"] = certified;
        std::ostringstream o;
        o << "value " << s.value << ", certified " << (certified ? "yes" : "no") << '\n';
        summary = o.str();
    } else {
        auto hits = pure_equilibria(g);
        certified = !hits.empty();
        j["game"] = canon;
        j["method"] = "pure-equilibria";
        ordered_json arr = ordered_json::array();
        std::ostringstream o;
        for (auto f : hits) {
            auto prof = g.profile_at(f);
            ordered_json e;
            ordered_json labels = ordered_json::array(), pays = ordered_json::array();
            o << '(';
            for (int p = 0; p < g.players(); ++p) {
                labels.push_back(g.label(p, prof[std::size_t(p)]));
                pays.push_back(exact_number(g.payoff(f, p)));
                o << (p ? "," : "") << g.label(p, prof[std::size_t(p)]);
            }
            o << ") ";
            e["profile"] = std::move(labels);
            e["payoffs"] = std::move(pays);
            arr.push_back(std::move(e));
        }
        j["equilibria"] = std::move(arr);
        j["certified_equilibrium"] = certified;
        if (hits.empty()) {
            summary = "no pure equilibrium; shape unsupported for mixed solving\n";
        } else {
            summary = "pure equilibria: " + o.str() + "\n";
        }
    }
    emit(format == "table" ? summary : dump_stable(j), out_path);
    return certified ? 0 : 1;
}

int run_quantize(const std::string& game_ref, bool entangled,
                 const std::vector<std::string>& per_player, const std::string& all_preset,
                 const seed_opt& seed, std::size_t samples, const std::string& format,
                 const std::string& out_path) {
    std::string canon;
    strategic_game g = resolve_game(game_ref, canon);
    int players = g.players();
    if (players != 2 && players != 3)
        return fail_usage("quantize needs a two- or three-player game");
    for (int p = 0; p < players; ++p)
        if (g.count(p) != 2) return fail_usage("quantize needs two strategies per player");
    for (std::size_t p = std::size_t(players); p < per_player.size(); ++p)
        if (!per_player[p].empty())
            return fail_usage("--p" + std::to_string(p + 1) + " given for a " +
                              std::to_string(players) + "-player game");
    std::vector<std::string> presets(std::size_t(players), "identity");
    if (!all_preset.empty()) {
        std::string t = lower(all_preset);
        presets.assign(std::size_t(players), t == "uniform-all" ? "haar" : all_preset);
    }
    for (int p = 0; p < players; ++p)
        if (!per_player[std::size_t(p)].empty()) presets[std::size_t(p)] = per_player[std::size_t(p)];
    std::vector<quantum_mixed> strategies;
    bool sampling = false;
    for (const auto& text : presets) {
        strategies.push_back(parse_preset(text, players));
        sampling = sampling || strategies.back().haar;
    }
    if (sampling && !seed.given())
        return fail_usage("sampling strategies need --seed (or QPOKER_SEED)");

    auto e = eval_quantum(g, entangled, strategies, seed.value, sampling ? samples : 0);

    if (format == "table") {
        std::ostringstream out;
        out << "game " << canon << (entangled ? ", entangled" : ", unentangled") << '\n';
        auto labels = nf_labels(players);
        out << "distribution:";
        for (std::size_t k = 0; k < labels.size(); ++k)
            out << ' ' << labels[k] << '=' << e.mean_distribution[k];
        out << '\n';
        for (int p = 0; p < players; ++p) {
            out << "player " << (p + 1) << " payoff " << e.payoffs[std::size_t(p)];
            if (!e.exact) out << " +/- " << e.stderrs[std::size_t(p)];
            out << '\n';
        }
        emit(out.str(), out_path);
        return 0;
    }
    ordered_json j;
    j["game"] = canon;
    j["entangled"] = entangled;
    j["strategies"] = presets;
    if (sampling) {
        j["seed"] = seed.value;
        j["samples"] = samples;
    }
    j["evaluation"] = quantum_eval_to_json(e, nf_labels(players));
    emit(dump_stable(j), out_path);
    return 0;
}

int run_verify(const std::string& suite, const seed_opt& seed, const std::string& format,
               const std::string& out_path) {
    auto results = run_acceptance(seed.value, suite);
    if (results.empty()) return fail_usage("unknown suite '" + suite +
                                           "' (all, tables, classical, quantum, correlated)");
    bool ok = all_passed(results);
    // Wall-clock seconds stay out of the machine formats so the same seed
    // and flags reproduce the bytes.
    if (format == "json") {
        ordered_json j;
        j["suite"] = suite;
        j["seed"] = seed.value;
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            ordered_json c;
            c["id"] = r.id;
            c["name"] = r.name;
            c["pass"] = r.pass;
            c["detail"] = r.detail;
            if (!r.flags.empty()) c["flags"] = r.flags;
            arr.push_back(std::move(c));
        }
        j["criteria"] = std::move(arr);
        j["all_passed"] = ok;
        emit(dump_stable(j), out_path);
    } else if (format == "csv") {
        std::ostringstream out;
        out << "id,name,pass,detail\n";
        for (const auto& r : results) {
            std::string detail = r.detail;
            std::replace(detail.begin(), detail.end(), ',', ';');
            out << r.id << ',' << r.name << ',' << (r.pass ? "pass" : "FAIL") << ',' << detail
                << '\n';
        }
        emit(out.str(), out_path);
    } else {
        std::ostringstream out;
        for (const auto& r : results) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name
                << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s)";
            out << std::defaultfloat << std::setprecision(6);
            if (!r.detail.empty()) out << "  " << r.detail;
            out << '\n';
            for (const auto& f : r.flags) out << "      flag: " << f << '\n';
        }
        out << (ok ? "all criteria passed" : "FAILURES present") << '\n';
        emit(out.str(), out_path);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Endgame poker models, their reductions and equilibria, and the quantized versions"};
    app.require_subcommand(1);
    auto format_check = CLI::IsMember({"json", "csv", "table"});

    auto* build = app.add_subcommand("build", "Build a poker model, quotient it, and reduce it");
    std::string variant, ante_text, bet_text, build_format = "json", build_out;
    bool full = false;
    build->add_option("--variant", variant, "sp (two players) or ns (three players)")->required();
    build->add_option("--ante", ante_text, "ante size, rational (defaults: sp 15, ns 16)");
    build->add_option("--bet", bet_text, "bet size, rational (defaults: sp 10, ns 64)");
    build->add_flag("--full", full, "include class members (and the full game when small)");
    build->add_option("--format", build_format)->check(format_check);
    build->add_option("--out", build_out, "write the report to a file instead of stdout");

    auto* solve = app.add_subcommand("solve", "Solve a named game or a game JSON file");
    std::string solve_game, solve_format = "json", solve_out;
    solve->add_option("--game", solve_game, "builtin name (sp, ns, pd, chicken) or JSON path")
        ->required();
    solve->add_option("--format", solve_format)->check(format_check);
    solve->add_option("--out", solve_out, "write the report to a file instead of stdout");

    auto* quant = app.add_subcommand("quantize", "Evaluate quantum strategies on a binary game");
    std::string quant_game, quant_preset, quant_format = "json", quant_out;
    std::vector<std::string> per_player(3);
    bool entangled = true;
    std::size_t samples = 100000;
    seed_opt quant_seed;
    quant->add_option("--game", quant_game, "builtin name (sp, ns, pd, chicken) or JSON path")
        ->required();
    quant->add_flag("--entangled,!--no-entangled", entangled,
                    "start from the shared entangled state (default) or the product state");
    quant->add_option("--p1", per_player[0], "player 1 strategy preset (default identity)");
    quant->add_option("--p2", per_player[1], "player 2 strategy preset");
    quant->add_option("--p3", per_player[2], "player 3 strategy preset");
    quant->add_option("--preset", quant_preset, "apply one preset to every player (uniform-all = haar)");
    quant_seed.opt = quant->add_option("--seed", quant_seed.value, "sampling seed")
                         ->envname("QPOKER_SEED");
    quant->add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    quant->add_option("--format", quant_format)->check(format_check);
    quant->add_option("--out", quant_out, "write the report to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run an acceptance suite");
    std::string suite = "all", verify_format = "json", verify_out;
    seed_opt verify_seed;
    verify_seed.value = 7;
    verify->add_option("suite", suite, "all, tables, classical, quantum, correlated");
    verify_seed.opt = verify->add_option("--seed", verify_seed.value, "suite seed (default 7)")
                          ->envname("QPOKER_SEED");
    verify->add_option("--format", verify_format)->check(format_check);
    verify->add_option("--out", verify_out, "write the report to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return run_build(variant, ante_text, bet_text, full, build_format, build_out);
        if (solve->parsed()) return run_solve(solve_game, solve_format, solve_out);
        if (quant->parsed())
            return run_quantize(quant_game, entangled, per_player, quant_preset, quant_seed,
                                samples, quant_format, quant_out);
        if (verify->parsed()) return run_verify(suite, verify_seed, verify_format, verify_out);
    } catch (const std::exception& e) {
        return fail_usage(e.what());
    }
    return fail_usage("no subcommand");
}
