#include "qpoker/sampling.hpp"

#include <cmath>

namespace qp {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t rng_stream::next_u64() {
    state_ += kGamma;
    return mix64(state_);
}

double rng_stream::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

double rng_stream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // 1-u keeps the log argument strictly positive.
    double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    double t = 2.0 * M_PI * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x6A09E667F3BCC909ULL));
}

quaternion sample_unit_quaternion(rng_stream& rng) {
    while (true) {
        quaternion q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        double n = q.norm();
        if (n > 1e-8) return {q.w / n, q.x / n, q.y / n, q.z / n};
    }
}

octonion sample_unit_octonion(rng_stream& rng) {
    while (true) {
        octonion o;
        for (auto& v : o.c) v = rng.normal();
        double n = o.norm();
        if (n > 1e-8) return (1.0 / n) * o;
    }
}

std::size_t sample_index(const std::vector<double>& weights, double u) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
}

}  // namespace qp
