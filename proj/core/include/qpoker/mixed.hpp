#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qpoker/game.hpp"
#include "qpoker/rational.hpp"

namespace qp {

inline bool probability_like(double x) { return x >= -1e-12; }
inline bool probability_like(const rational& x) { return !(x < rational(0)); }
inline bool sums_to_one(double s) { return std::abs(s - 1.0) <= 1e-9; }
inline bool sums_to_one(const rational& s) { return s == rational(1); }

template <typename T>
void validate_mixed(const basic_game<T>& g, const std::vector<std::vector<T>>& mix) {
    if (int(mix.size()) != g.players())
        throw std::invalid_argument("mixed: one distribution per player");
    for (int p = 0; p < g.players(); ++p) {
        if (mix[std::size_t(p)].size() != g.count(p))
            throw std::invalid_argument("mixed: distribution length");
        T sum{};
        for (const T& w : mix[std::size_t(p)]) {
            if (!probability_like(w)) throw std::invalid_argument("mixed: negative weight");
            sum += w;
        }
        if (!sums_to_one(sum)) throw std::invalid_argument("mixed: weights must sum to 1");
    }
}

// Expected payoffs and pure best responses at a product profile.
template <typename T>
struct nash_report {
    std::vector<T> values;              // expected payoff per player
    std::vector<std::vector<T>> pure;   // per player, expected payoff of each pure reply
    std::vector<T> best_reply;          // max of pure per player
    T max_regret{};
    int worst_player = -1;
};

template <typename T>
nash_report<T> analyze_profile(const basic_game<T>& g, const std::vector<std::vector<T>>& mix) {
    validate_mixed(g, mix);
    int n = g.players();
    nash_report<T> rep;
    rep.values.assign(std::size_t(n), T{});
    rep.pure.resize(static_cast<std::size_t>(n));
    rep.best_reply.assign(std::size_t(n), T{});
    for (int p = 0; p < n; ++p) {
        std::vector<T> e(g.count(p), T{});
        for (std::size_t f = 0; f < g.total_profiles(); ++f) {
            auto profile = g.profile_at(f);
            T w{1};
            for (int q = 0; q < n; ++q)
                if (q != p) w = w * mix[std::size_t(q)][profile[std::size_t(q)]];
            e[profile[std::size_t(p)]] += w * g.payoff(f, p);
        }
        T value{};
        for (std::size_t s = 0; s < e.size(); ++s) value += mix[std::size_t(p)][s] * e[s];
        T best = e[0];
        for (const T& v : e)
            if (best < v) best = v;
        T regret = best - value;
        if (rep.worst_player < 0 || rep.max_regret < regret) {
            rep.max_regret = regret;
            rep.worst_player = p;
        }
        rep.values[std::size_t(p)] = value;
        rep.best_reply[std::size_t(p)] = best;
        rep.pure[std::size_t(p)] = std::move(e);
    }
    return rep;
}

template <typename T>
std::vector<T> expected_payoffs(const basic_game<T>& g, const std::vector<std::vector<T>>& mix) {
    return analyze_profile(g, mix).values;
}

inline bool is_nash(const nash_report<double>& rep, double tol) { return rep.max_regret <= tol; }
inline bool is_nash(const nash_report<rational>& rep) {
    return !(rational(0) < rep.max_regret);
}

}  // namespace qp
