#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpoker/rational.hpp"

namespace qp {

// Finite n-player game in strategic form: per-player strategy labels and a
// payoff vector at every pure profile. Profiles flatten with player 1 as the
// slowest-varying index.
template <typename T>
class basic_game {
  public:
    basic_game() = default;
    basic_game(std::vector<std::vector<std::string>> labels, bool zero_sum = false)
        : labels_(std::move(labels)), zero_sum_(zero_sum) {
        std::size_t total = 1;
        for (const auto& l : labels_) {
            if (l.empty()) throw std::invalid_argument("game: empty strategy set");
            total *= l.size();
        }
        payoff_.assign(total * labels_.size(), T{});
    }

    int players() const { return int(labels_.size()); }
    std::size_t count(int player) const { return labels_[player].size(); }
    const std::vector<std::vector<std::string>>& labels() const { return labels_; }
    const std::string& label(int player, std::size_t s) const { return labels_[player][s]; }
    bool zero_sum() const { return zero_sum_; }
    void set_zero_sum(bool z) { zero_sum_ = z; }

    std::size_t total_profiles() const { return payoff_.size() / labels_.size(); }

    std::size_t flat_index(const std::vector<std::size_t>& profile) const {
        if (profile.size() != labels_.size()) throw std::invalid_argument("game: profile arity");
        std::size_t idx = 0;
        for (std::size_t p = 0; p < profile.size(); ++p) {
            if (profile[p] >= labels_[p].size()) throw std::out_of_range("game: strategy index");
            idx = idx * labels_[p].size() + profile[p];
        }
        return idx;
    }

    std::vector<std::size_t> profile_at(std::size_t flat) const {
        std::vector<std::size_t> profile(labels_.size());
        for (std::size_t p = labels_.size(); p-- > 0;) {
            profile[p] = flat % labels_[p].size();
            flat /= labels_[p].size();
        }
        return profile;
    }

    T& payoff(std::size_t flat, int player) { return payoff_[flat * labels_.size() + player]; }
    const T& payoff(std::size_t flat, int player) const {
        return payoff_[flat * labels_.size() + player];
    }
    T& payoff(const std::vector<std::size_t>& profile, int player) {
        return payoff(flat_index(profile), player);
    }
    const T& payoff(const std::vector<std::size_t>& profile, int player) const {
        return payoff(flat_index(profile), player);
    }

    std::vector<T> payoff_vector(std::size_t flat) const {
        std::vector<T> v(labels_.size());
        for (int p = 0; p < players(); ++p) v[p] = payoff(flat, p);
        return v;
    }

  private:
    std::vector<std::vector<std::string>> labels_;
    std::vector<T> payoff_;
    bool zero_sum_ = false;
};

using strategic_game = basic_game<rational>;
using real_game = basic_game<double>;

real_game to_real(const strategic_game& g);

// Checks the zero-sum invariant: payoff vectors sum to 0 at every profile.
bool check_zero_sum(const strategic_game& g);

}  // namespace qp
