#include "qpoker/correlated.hpp"

#include <stdexcept>

namespace qp {

void validate_distribution(const strategic_game& g, const correlated_distribution& rho) {
    if (rho.size() != g.total_profiles())
        throw std::invalid_argument("correlated: distribution length");
    rational sum;
    for (const auto& w : rho) {
        if (w < rational(0)) throw std::invalid_argument("correlated: negative mass");
        sum += w;
    }
    if (!(sum == rational(1))) throw std::invalid_argument("correlated: mass must sum to 1");
}

std::vector<rational> correlated_payoffs(const strategic_game& g,
                                         const correlated_distribution& rho) {
    validate_distribution(g, rho);
    std::vector<rational> pay(std::size_t(g.players()));
    for (std::size_t f = 0; f < rho.size(); ++f)
        for (int p = 0; p < g.players(); ++p) pay[std::size_t(p)] += rho[f] * g.payoff(f, p);
    return pay;
}

obedience_check check_correlated_equilibrium(const strategic_game& g,
                                             const correlated_distribution& rho) {
    validate_distribution(g, rho);
    obedience_check res;
    int n = g.players();
    for (int p = 0; p < n; ++p) {
        for (std::size_t told = 0; told < g.count(p); ++told) {
            for (std::size_t dev = 0; dev < g.count(p); ++dev) {
                if (dev == told) continue;
                rational gain;
                for (std::size_t f = 0; f < rho.size(); ++f) {
                    auto profile = g.profile_at(f);
                    if (profile[std::size_t(p)] != told) continue;
                    if (rho[f] == rational(0)) continue;
                    auto deviated = profile;
                    deviated[std::size_t(p)] = dev;
                    gain += rho[f] * (g.payoff(deviated, p) - g.payoff(f, p));
                }
                if (res.player < 0 || res.worst_gain < gain) {
                    res.worst_gain = gain;
                    res.player = p;
                    res.signal = told;
                    res.deviation = dev;
                }
            }
        }
    }
    res.ok = !(rational(0) < res.worst_gain);
    return res;
}

correlated_distribution product_distribution(const strategic_game& g,
                                             const std::vector<std::vector<rational>>& mix) {
    validate_mixed(g, mix);
    correlated_distribution rho(g.total_profiles());
    for (std::size_t f = 0; f < rho.size(); ++f) {
        auto profile = g.profile_at(f);
        rational w(1);
        for (int p = 0; p < g.players(); ++p)
            w *= mix[std::size_t(p)][profile[std::size_t(p)]];
        rho[f] = w;
    }
    return rho;
}

bool is_product_realizable(const strategic_game& g, const correlated_distribution& rho) {
    validate_distribution(g, rho);
    if (g.players() != 2)
        throw std::invalid_argument("is_product_realizable: two players");
    // Rank-one joint matrix: all 2x2 minors vanish.
    std::size_t rows = g.count(0), cols = g.count(1);
    auto at = [&](std::size_t r, std::size_t c) { return rho[r * cols + c]; };
    for (std::size_t r1 = 0; r1 < rows; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < rows; ++r2)
            for (std::size_t c1 = 0; c1 < cols; ++c1)
                for (std::size_t c2 = c1 + 1; c2 < cols; ++c2)
                    if (!(at(r1, c1) * at(r2, c2) == at(r1, c2) * at(r2, c1))) return false;
    return true;
}

namespace {

// Response functions to a binary recommendation.
std::size_t respond(std::size_t meta, std::size_t told) {
    switch (meta) {
        case 0: return 0;         // always the first strategy
        case 1: return 1;         // always the second
        case 2: return told;      // obey
        default: return 1 - told; // invert
    }
}

}  // namespace

std::size_t mediated_obey_index() { return 2; }

strategic_game build_mediated_game(const strategic_game& g, const correlated_distribution& rho) {
    validate_distribution(g, rho);
    int n = g.players();
    for (int p = 0; p < n; ++p)
        if (g.count(p) != 2)
            throw std::invalid_argument("build_mediated_game: two strategies per player");
    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
        labels[std::size_t(p)] = {"always-" + g.label(p, 0), "always-" + g.label(p, 1), "obey",
                                  "invert"};
    strategic_game meta(labels, g.zero_sum());
    std::vector<std::size_t> choice(static_cast<std::size_t>(n));
    for (std::size_t f = 0; f < meta.total_profiles(); ++f) {
        auto metas = meta.profile_at(f);
        std::vector<rational> pay(static_cast<std::size_t>(n));
        for (std::size_t s = 0; s < rho.size(); ++s) {
            if (rho[s] == rational(0)) continue;
            auto told = g.profile_at(s);
            for (int p = 0; p < n; ++p)
                choice[std::size_t(p)] = respond(metas[std::size_t(p)], told[std::size_t(p)]);
            std::size_t played = g.flat_index(choice);
            for (int p = 0; p < n; ++p) pay[std::size_t(p)] += rho[s] * g.payoff(played, p);
        }
        for (int p = 0; p < n; ++p) meta.payoff(f, p) = pay[std::size_t(p)];
    }
    return meta;
}

bool mediated_obedience_holds(const strategic_game& g, const correlated_distribution& rho) {
    strategic_game meta = build_mediated_game(g, rho);
    std::vector<std::vector<rational>> mix(std::size_t(g.players()),
                                           std::vector<rational>(4, rational(0)));
    for (auto& m : mix) m[mediated_obey_index()] = rational(1);
    auto rep = analyze_profile(meta, mix);
    return is_nash(rep);
}

}  // namespace qp
