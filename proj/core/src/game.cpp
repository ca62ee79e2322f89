#include "qpoker/game.hpp"

namespace qp {

real_game to_real(const strategic_game& g) {
    real_game r(g.labels(), g.zero_sum());
    for (std::size_t f = 0; f < g.total_profiles(); ++f)
        for (int p = 0; p < g.players(); ++p) r.payoff(f, p) = g.payoff(f, p).to_double();
    return r;
}

bool check_zero_sum(const strategic_game& g) {
    for (std::size_t f = 0; f < g.total_profiles(); ++f) {
        rational sum;
        for (int p = 0; p < g.players(); ++p) sum += g.payoff(f, p);
        if (!(sum == rational(0))) return false;
    }
    return true;
}

}  // namespace qp
