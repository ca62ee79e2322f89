#include "qpoker/poker.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qp {

namespace {

using actor_fn = std::function<bool(int player, int info_set)>;

struct hand_record {
    std::string sequence;
    std::array<bool, 3> placed_bet{};
    bool any_bet = false;
};

// Walks the betting tree once, asking the actor at each decision point.
// Information set indices follow info_set_labels.
hand_record run_hand(const poker_spec& spec, const actor_fn& act) {
    hand_record rec;
    auto letter = [](bool b) { return b ? 'B' : 'P'; };
    if (spec.variant == poker_variant::simplified) {
        bool b1 = act(0, 0);
        rec.sequence += letter(b1);
        if (!b1) return rec;  // showdown of the antes
        rec.placed_bet[0] = true;
        rec.any_bet = true;
        bool b2 = act(1, 0);
        rec.sequence += letter(b2);
        rec.placed_bet[1] = b2;
        return rec;
    }
    bool b1 = act(0, 0);
    rec.sequence += letter(b1);
    if (b1) {
        rec.placed_bet[0] = true;
        rec.any_bet = true;
        bool b2 = act(1, 0);
        rec.sequence += letter(b2);
        rec.placed_bet[1] = b2;
        bool b3 = act(2, b2 ? 0 : 1);
        rec.sequence += letter(b3);
        rec.placed_bet[2] = b3;
        return rec;
    }
    bool b2 = act(1, 1);
    rec.sequence += letter(b2);
    if (b2) {
        rec.placed_bet[1] = true;
        rec.any_bet = true;
        bool b3 = act(2, 2);
        rec.sequence += letter(b3);
        rec.placed_bet[2] = b3;
        bool b1r = act(0, b3 ? 1 : 2);
        rec.sequence += letter(b1r);
        rec.placed_bet[0] = b1r;
        return rec;
    }
    bool b3 = act(2, 3);
    rec.sequence += letter(b3);
    if (b3) {
        rec.placed_bet[2] = true;
        rec.any_bet = true;
        bool b1r = act(0, 3);
        rec.sequence += letter(b1r);
        rec.placed_bet[0] = b1r;
        bool b2r = act(1, b1r ? 2 : 3);
        rec.sequence += letter(b2r);
        rec.placed_bet[1] = b2r;
    }
    return rec;
}

std::vector<rational> settle(const poker_spec& spec, const std::array<card, 3>& cards,
                             const hand_record& rec) {
    int n = spec.players();
    std::vector<rational> net(n, rational(0));
    if (!rec.any_bet) {
        // Three-player all-pass returns the antes; two-player pass goes to
        // showdown for them.
        if (spec.variant == poker_variant::three_player) return net;
        std::vector<int> winners;
        card best = card::low;
        for (int i = 0; i < n; ++i)
            if (cards[i] == card::high) best = card::high;
        for (int i = 0; i < n; ++i)
            if (cards[i] == best) winners.push_back(i);
        rational pot = rational(n) * spec.ante;
        rational share = pot / rational(int(winners.size()));
        for (int i = 0; i < n; ++i) net[i] = -spec.ante;
        for (int w : winners) net[w] += share;
        return net;
    }
    std::vector<rational> contrib(n);
    std::vector<int> participants;
    rational pot(0);
    for (int i = 0; i < n; ++i) {
        contrib[i] = spec.ante + (rec.placed_bet[i] ? spec.bet : rational(0));
        pot += contrib[i];
        if (rec.placed_bet[i]) participants.push_back(i);
    }
    for (int i = 0; i < n; ++i) net[i] = -contrib[i];
    if (participants.size() == 1) {
        net[participants.front()] += pot;
        return net;
    }
    card best = card::low;
    for (int i : participants)
        if (cards[i] == card::high) best = card::high;
    std::vector<int> winners;
    for (int i : participants)
        if (cards[i] == best) winners.push_back(i);
    rational share = pot / rational(int(winners.size()));
    for (int w : winners) net[w] += share;
    return net;
}

}  // namespace

poker_spec::poker_spec(poker_variant v, rational a, rational b) : variant(v), ante(a), bet(b) {
    if (a < rational(0) || b < rational(0))
        throw std::domain_error("poker: ante and bet must be nonnegative");
}

std::vector<std::string> info_set_labels(const poker_spec& spec, int player) {
    if (player < 0 || player >= spec.players()) throw std::out_of_range("poker: player index");
    if (spec.variant == poker_variant::simplified)
        return {player == 0 ? std::string("--") : std::string("B")};
    switch (player) {
        case 0: return {"--", "PBB", "PBP", "PPB"};
        case 1: return {"B", "P", "PPBB", "PPBP"};
        default: return {"BB", "BP", "PB", "PP"};
    }
}

std::string plan_label(const poker_spec& spec, unsigned plan_id) {
    int sets = spec.info_sets();
    pure_strategy_plan plan = pure_strategy_plan::from_id(plan_id, sets);
    std::string h, l;
    for (int t = 0; t < sets; ++t) {
        h += plan.bets(card::high, t) ? 'B' : 'P';
        l += plan.bets(card::low, t) ? 'B' : 'P';
    }
    return "H=" + h + ",L=" + l;
}

std::vector<pure_strategy_plan> enumerate_pure_strategies(const poker_spec& spec, int player) {
    if (player < 0 || player >= spec.players()) throw std::out_of_range("poker: player index");
    int sets = spec.info_sets();
    std::vector<pure_strategy_plan> plans;
    plans.reserve(spec.plans_per_player());
    for (unsigned id = 0; id < unsigned(spec.plans_per_player()); ++id)
        plans.push_back(pure_strategy_plan::from_id(id, sets));
    return plans;
}

std::vector<std::string> enumerate_action_sequences(const poker_spec& spec) {
    std::set<std::string> seqs;
    int decisions = spec.players() == 2 ? 2 : 5;
    for (unsigned bits = 0; bits < (1u << decisions); ++bits) {
        int counter = 0;
        auto act = [&](int, int) { return bool((bits >> counter++) & 1u); };
        seqs.insert(run_hand(spec, act).sequence);
    }
    return {seqs.begin(), seqs.end()};  // set order: 'B' < 'P'
}

std::vector<std::array<card, 3>> enumerate_deals(const poker_spec& spec) {
    int n = spec.players();
    std::vector<std::array<card, 3>> deals;
    for (unsigned d = 0; d < (1u << n); ++d) {
        std::array<card, 3> cards{card::low, card::low, card::low};
        // Bit n-1-i so that the first player is the leftmost letter.
        for (int i = 0; i < n; ++i)
            cards[i] = ((d >> (n - 1 - i)) & 1u) ? card::high : card::low;
        deals.push_back(cards);
    }
    return deals;
}

play_result play_out(const poker_spec& spec, const std::array<card, 3>& cards,
                     const std::vector<pure_strategy_plan>& plans) {
    if (int(plans.size()) != spec.players()) throw std::domain_error("poker: one plan per player");
    int sets = spec.info_sets();
    for (const auto& p : plans)
        if (p.h_bits >> sets || p.l_bits >> sets)
            throw std::domain_error("poker: plan has actions beyond the information sets");
    auto act = [&](int player, int iset) { return plans[player].bets(cards[player], iset); };
    hand_record rec = run_hand(spec, act);
    return {rec.sequence, settle(spec, cards, rec)};
}

namespace {

// Scaled exact payoff table: per deal and per-card action tuple of each
// player, payoff * denom is an integer.
struct deal_table {
    int players = 0;
    int tuples = 0;  // action tuples per card
    std::vector<std::array<card, 3>> deals;
    std::int64_t denom = 1;                // clears per-deal denominators
    std::vector<std::int64_t> scaled;      // [deal][t1][t2](…)[player]
    std::vector<std::vector<rational>> exact;  // [deal][tuple-profile-flat] payoff vectors

    std::size_t tuple_flat(int deal, const std::array<int, 3>& tup) const {
        std::size_t idx = deal;
        for (int p = 0; p < players; ++p) idx = idx * tuples + tup[p];
        return idx;
    }
    std::int64_t at(int deal, const std::array<int, 3>& tup, int player) const {
        return scaled[tuple_flat(deal, tup) * players + player];
    }
};

deal_table build_deal_table(const poker_spec& spec) {
    deal_table dt;
    dt.players = spec.players();
    dt.tuples = 1 << spec.info_sets();
    dt.deals = enumerate_deals(spec);
    std::size_t per_deal = 1;
    for (int p = 0; p < dt.players; ++p) per_deal *= dt.tuples;
    dt.exact.assign(dt.deals.size() * per_deal, {});
    std::int64_t denom = 1;
    for (std::size_t d = 0; d < dt.deals.size(); ++d) {
        std::array<int, 3> tup{0, 0, 0};
        for (std::size_t f = 0; f < per_deal; ++f) {
            std::size_t rem = f;
            for (int p = dt.players - 1; p >= 0; --p) {
                tup[p] = int(rem % dt.tuples);
                rem /= dt.tuples;
            }
            std::vector<pure_strategy_plan> plans;
            for (int p = 0; p < dt.players; ++p)
                plans.push_back({unsigned(tup[p]), unsigned(tup[p])});
            auto res = play_out(spec, dt.deals[d], plans);
            for (const auto& v : res.payoffs) denom = std::lcm(denom, v.den());
            dt.exact[d * per_deal + f] = res.payoffs;
        }
    }
    dt.denom = denom;
    dt.scaled.assign(dt.exact.size() * dt.players, 0);
    for (std::size_t i = 0; i < dt.exact.size(); ++i)
        for (int p = 0; p < dt.players; ++p) {
            const rational& v = dt.exact[i][p];
            dt.scaled[i * dt.players + p] = v.num() * (denom / v.den());
        }
    return dt;
}

int tuple_of(const pure_strategy_plan& plan, card c) {
    return int(c == card::high ? plan.h_bits : plan.l_bits);
}

// Expected scaled payoff (sum over deals; divide by denom * deals later).
std::int64_t profile_sum(const deal_table& dt, const std::array<pure_strategy_plan, 3>& plans,
                         int player) {
    std::int64_t s = 0;
    for (std::size_t d = 0; d < dt.deals.size(); ++d) {
        std::array<int, 3> tup{0, 0, 0};
        for (int p = 0; p < dt.players; ++p) tup[p] = tuple_of(plans[p], dt.deals[d][p]);
        s += dt.at(int(d), tup, player);
    }
    return s;
}

rational unscale(const deal_table& dt, std::int64_t sum) {
    return rational(sum, dt.denom * std::int64_t(dt.deals.size()));
}

}  // namespace

strategic_game strategic_form(const poker_spec& spec) {
    deal_table dt = build_deal_table(spec);
    int n = spec.players();
    std::vector<std::vector<std::string>> labels(n);
    for (int p = 0; p < n; ++p)
        for (int id = 0; id < spec.plans_per_player(); ++id)
            labels[p].push_back(plan_label(spec, unsigned(id)));
    strategic_game g(labels, true);
    int sets = spec.info_sets();
    std::vector<std::size_t> profile(n);
    for (std::size_t f = 0; f < g.total_profiles(); ++f) {
        std::size_t rem = f;
        for (int p = n - 1; p >= 0; --p) {
            profile[p] = rem % g.count(p);
            rem /= g.count(p);
        }
        std::array<pure_strategy_plan, 3> plans{};
        for (int p = 0; p < n; ++p)
            plans[p] = pure_strategy_plan::from_id(unsigned(profile[p]), sets);
        for (int p = 0; p < n; ++p) g.payoff(f, p) = unscale(dt, profile_sum(dt, plans, p));
    }
    return g;
}

strategic_game restricted_strategic_form(const poker_spec& spec,
                                         const std::vector<std::vector<unsigned>>& plan_ids,
                                         const std::vector<std::vector<std::string>>& labels) {
    if (int(plan_ids.size()) != spec.players() || labels.size() != plan_ids.size())
        throw std::invalid_argument("poker: restriction arity");
    deal_table dt = build_deal_table(spec);
    strategic_game g(labels, true);
    int n = spec.players();
    int sets = spec.info_sets();
    std::vector<std::size_t> profile(n);
    for (std::size_t f = 0; f < g.total_profiles(); ++f) {
        std::size_t rem = f;
        for (int p = n - 1; p >= 0; --p) {
            profile[p] = rem % g.count(p);
            rem /= g.count(p);
        }
        std::array<pure_strategy_plan, 3> plans{};
        for (int p = 0; p < n; ++p)
            plans[p] = pure_strategy_plan::from_id(plan_ids[p][profile[p]], sets);
        for (int p = 0; p < n; ++p) g.payoff(f, p) = unscale(dt, profile_sum(dt, plans, p));
    }
    return g;
}

namespace {

// Hash of the exact payoff stream of one plan against every opponent plan
// assignment; collisions resolved by exact comparison.
struct plan_signature {
    std::uint64_t hash;
    unsigned plan;
};

std::uint64_t hash_step(std::uint64_t h, std::int64_t v) {
    h ^= std::uint64_t(v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
}

// Payoff sums of one plan against fixed opponent tuples, grouped by the
// opponents' card combination; deal-summed so the full payoff stream over
// opponent plan assignments is a cheap group sum.
struct plan_profile {
    int players = 0;
    int opp_count = 0;
    int tuples = 0;
    std::size_t combos = 1;  // opponent tuple combinations per group
    std::vector<std::int64_t> v;  // [group][combo][player]

    std::int64_t at(int g, std::size_t combo, int player) const {
        return v[(std::size_t(g) * combos + combo) * players + player];
    }
};

plan_profile build_plan_profile(const deal_table& dt, int pl, unsigned own) {
    plan_profile pp;
    int n = dt.players;
    pp.players = n;
    pp.opp_count = n - 1;
    pp.tuples = dt.tuples;
    for (int k = 0; k < pp.opp_count; ++k) pp.combos *= std::size_t(dt.tuples);
    int groups = 1 << pp.opp_count;
    pp.v.assign(std::size_t(groups) * pp.combos * n, 0);
    pure_strategy_plan mine = pure_strategy_plan::from_id(own, n == 2 ? 1 : 4);
    std::vector<int> opp;
    for (int p = 0; p < n; ++p)
        if (p != pl) opp.push_back(p);
    for (std::size_t d = 0; d < dt.deals.size(); ++d) {
        int g = 0;
        for (std::size_t oi = 0; oi < opp.size(); ++oi)
            if (dt.deals[d][opp[oi]] == card::high) g |= 1 << oi;
        for (std::size_t combo = 0; combo < pp.combos; ++combo) {
            std::array<int, 3> tup{0, 0, 0};
            tup[pl] = tuple_of(mine, dt.deals[d][pl]);
            std::size_t rem = combo;
            for (int oi = pp.opp_count - 1; oi >= 0; --oi) {
                tup[opp[std::size_t(oi)]] = int(rem % std::size_t(dt.tuples));
                rem /= std::size_t(dt.tuples);
            }
            std::size_t src = dt.tuple_flat(int(d), tup) * n;
            std::size_t dst = (std::size_t(g) * pp.combos + combo) * n;
            for (int p = 0; p < n; ++p) pp.v[dst + p] += dt.scaled[src + p];
        }
    }
    return pp;
}

// Streams the payoff vector of the profiled plan against every opponent plan
// assignment (per opponent an (H-tuple, L-tuple) pair), lexicographically.
template <typename Fn>
void stream_from_profile(const plan_profile& pp, Fn&& emit) {
    int dims = pp.opp_count * 2;
    std::vector<int> a(std::size_t(dims), 0);
    int groups = 1 << pp.opp_count;
    std::vector<std::size_t> combo(static_cast<std::size_t>(groups));
    while (true) {
        for (int g = 0; g < groups; ++g) {
            std::size_t c = 0;
            for (int oi = 0; oi < pp.opp_count; ++oi) {
                bool high = (g >> oi) & 1;
                c = c * std::size_t(pp.tuples) +
                    std::size_t(a[std::size_t(oi * 2 + (high ? 0 : 1))]);
            }
            combo[std::size_t(g)] = c;
        }
        for (int player = 0; player < pp.players; ++player) {
            std::int64_t s = 0;
            for (int g = 0; g < groups; ++g) s += pp.at(g, combo[std::size_t(g)], player);
            emit(s);
        }
        int k = dims - 1;
        while (k >= 0 && a[std::size_t(k)] == pp.tuples - 1) a[std::size_t(k--)] = 0;
        if (k < 0) break;
        ++a[std::size_t(k)];
    }
}

std::vector<std::vector<unsigned>> group_equivalent(const deal_table& dt, int pl, int plan_count) {
    std::vector<plan_signature> sigs(static_cast<std::size_t>(plan_count));
    for (unsigned x = 0; x < unsigned(plan_count); ++x) {
        plan_profile pp = build_plan_profile(dt, pl, x);
        std::uint64_t h = 0x243F6A8885A308D3ULL;
        stream_from_profile(pp, [&](std::int64_t v) { h = hash_step(h, v); });
        sigs[x] = {h, x};
    }
    std::map<std::uint64_t, std::vector<unsigned>> buckets;
    for (const auto& s : sigs) buckets[s.hash].push_back(s.plan);
    std::vector<std::vector<unsigned>> classes;
    for (auto& [h, members] : buckets) {
        (void)h;
        if (members.size() == 1) {
            classes.push_back(members);
            continue;
        }
        // Multi-member buckets are candidates only; equality is re-checked exactly.
        std::vector<std::vector<unsigned>> verified;
        std::vector<std::vector<std::int64_t>> streams;
        for (unsigned m : members) {
            std::vector<std::int64_t> mine;
            plan_profile pp = build_plan_profile(dt, pl, m);
            stream_from_profile(pp, [&](std::int64_t v) { mine.push_back(v); });
            bool placed = false;
            for (std::size_t c = 0; c < verified.size(); ++c) {
                if (streams[c] == mine) {
                    verified[c].push_back(m);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                verified.push_back({m});
                streams.push_back(std::move(mine));
            }
        }
        for (auto& cls : verified) classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

struct class_tensors {
    std::vector<std::size_t> counts;
    // own payoff of player p at class profile, flattened player-1 slowest
    std::array<std::vector<std::int64_t>, 3> pay;
};

class_tensors build_class_tensors(const deal_table& dt, const std::vector<plan_classes>& classes) {
    class_tensors ct;
    int n = dt.players;
    std::size_t total = 1;
    for (int p = 0; p < n; ++p) {
        ct.counts.push_back(classes[p].representative.size());
        total *= ct.counts.back();
    }
    int sets = n == 2 ? 1 : 4;
    for (int p = 0; p < n; ++p) ct.pay[p].assign(total, 0);
    std::vector<std::size_t> profile(n);
    for (std::size_t f = 0; f < total; ++f) {
        std::size_t rem = f;
        for (int p = n - 1; p >= 0; --p) {
            profile[p] = rem % ct.counts[p];
            rem /= ct.counts[p];
        }
        std::array<pure_strategy_plan, 3> plans{};
        for (int p = 0; p < n; ++p)
            plans[p] =
                pure_strategy_plan::from_id(classes[p].representative[profile[p]], sets);
        for (std::size_t d = 0; d < dt.deals.size(); ++d) {
            std::array<int, 3> tup{0, 0, 0};
            for (int p = 0; p < n; ++p) tup[p] = tuple_of(plans[p], dt.deals[d][p]);
            std::size_t base = dt.tuple_flat(int(d), tup) * n;
            for (int p = 0; p < n; ++p) ct.pay[p][f] += dt.scaled[base + p];
        }
    }
    return ct;
}

}  // namespace

std::vector<std::array<unsigned, 2>> table_plan_ids(const poker_spec& spec) {
    if (spec.variant == poker_variant::simplified) return {{2u, 3u}, {2u, 3u}};
    return {{240u, 224u}, {240u, 208u}, {240u, 248u}};
}

std::string reduced_alias(int player, int which) {
    static const char* names[3][2] = {{"s1", "s2"}, {"t1", "t2"}, {"u1", "u2"}};
    if (player < 0 || player > 2 || which < 0 || which > 1)
        throw std::out_of_range("poker: alias index");
    return names[player][which];
}

poker_build build_poker(const poker_spec& spec) {
    poker_build out;
    out.spec = spec;
    out.action_sequences = enumerate_action_sequences(spec);
    deal_table dt = build_deal_table(spec);
    int n = spec.players();

    for (int p = 0; p < n; ++p) {
        auto members = group_equivalent(dt, p, spec.plans_per_player());
        plan_classes pc;
        pc.members = members;
        for (const auto& cls : members) pc.representative.push_back(cls.front());
        out.class_counts.push_back(pc.representative.size());
        out.classes.push_back(std::move(pc));
    }

    class_tensors ct = build_class_tensors(dt, out.classes);

    std::vector<std::vector<std::size_t>> alive(n);
    for (int p = 0; p < n; ++p) {
        alive[p].resize(ct.counts[p]);
        std::iota(alive[p].begin(), alive[p].end(), 0);
    }

    std::vector<std::size_t> strides(n, 1);
    for (int p = n - 2; p >= 0; --p) strides[p] = strides[p + 1] * ct.counts[p + 1];

    // True iff y dominates x for player pl over all surviving opponent
    // combinations: weakly (>= everywhere, > somewhere) or strongly (> everywhere).
    auto dominates = [&](int pl, std::size_t x, std::size_t y, bool strong) {
        const auto& pay = ct.pay[pl];
        bool strict_seen = false;
        std::vector<int> opp;
        for (int p = 0; p < n; ++p)
            if (p != pl) opp.push_back(p);
        std::vector<std::size_t> oi(opp.size(), 0);
        while (true) {
            std::size_t base = 0;
            for (std::size_t k = 0; k < opp.size(); ++k)
                base += alive[opp[k]][oi[k]] * strides[opp[k]];
            std::int64_t px = pay[base + x * strides[pl]];
            std::int64_t py = pay[base + y * strides[pl]];
            if (py < px) return false;
            if (py > px) strict_seen = true;
            else if (strong) return false;
            int k = int(opp.size()) - 1;
            while (k >= 0 && oi[k] + 1 == alive[opp[k]].size()) oi[k--] = 0;
            if (k < 0) break;
            ++oi[std::size_t(k)];
        }
        return strict_seen;
    };

    auto class_label = [&](int pl, std::size_t cls) {
        return plan_label(spec, out.classes[pl].representative[cls]);
    };

    auto run_phase = [&](bool strong, int& round) {
        bool removed_any_cycle = true;
        while (removed_any_cycle) {
            removed_any_cycle = false;
            for (int pl = 0; pl < n; ++pl) {
                bool removed = false;
                for (std::size_t xi = 0; xi < alive[pl].size() && !removed; ++xi) {
                    for (std::size_t yi = 0; yi < alive[pl].size() && !removed; ++yi) {
                        if (xi == yi) continue;
                        std::size_t x = alive[pl][xi], y = alive[pl][yi];
                        if (dominates(pl, x, y, strong)) {
                            out.trace.push_back({round, pl + 1, class_label(pl, x),
                                                 class_label(pl, y),
                                                 strong ? "strong" : "weak"});
                            alive[pl].erase(alive[pl].begin() + long(xi));
                            removed = true;
                            removed_any_cycle = true;
                        }
                    }
                }
            }
            ++round;
        }
    };

    int round = 1;
    run_phase(true, round);
    run_phase(false, round);

    // Reduced game over survivors, with table aliases where they apply.
    auto table = table_plan_ids(spec);
    std::vector<std::vector<std::string>> labels(n);
    for (int p = 0; p < n; ++p) {
        out.surviving_representatives.emplace_back();
        for (std::size_t cls : alive[p]) {
            unsigned rep = out.classes[p].representative[cls];
            out.surviving_representatives.back().push_back(rep);
            std::string label = plan_label(spec, rep);
            for (int which = 0; which < 2; ++which) {
                const auto& mem = out.classes[p].members[cls];
                if (std::find(mem.begin(), mem.end(), table[p][which]) != mem.end())
                    label = reduced_alias(p, which);
            }
            labels[p].push_back(label);
        }
    }
    strategic_game reduced(labels, true);
    std::vector<std::size_t> profile(n);
    for (std::size_t f = 0; f < reduced.total_profiles(); ++f) {
        std::size_t rem = f;
        for (int p = n - 1; p >= 0; --p) {
            profile[p] = rem % reduced.count(p);
            rem /= reduced.count(p);
        }
        std::size_t base = 0;
        for (int p = 0; p < n; ++p) base += alive[p][profile[p]] * strides[p];
        for (int p = 0; p < n; ++p) reduced.payoff(f, p) = unscale(dt, ct.pay[p][base]);
    }
    out.reduced = std::move(reduced);
    return out;
}

}  // namespace qp
