#pragma once

#include <cstdint>
#include <vector>

#include "qpoker/octonion.hpp"
#include "qpoker/quaternion.hpp"

namespace qp {

// Deterministic 64-bit stream; identical output on every platform, unlike the
// distributions in <random>.
class rng_stream {
  public:
    explicit rng_stream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    // Uniform in [0, 1), 53-bit resolution.
    double uniform();
    // Standard normal via Box-Muller; caches the spare value.
    double normal();

  private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Derives a decorrelated seed for substream `index`; used so sample i does not
// depend on how earlier samples consumed the stream.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

// Rotation-invariant samples on the unit spheres of the two algebras.
quaternion sample_unit_quaternion(rng_stream& rng);
octonion sample_unit_octonion(rng_stream& rng);

// Index into cumulative weights; u in [0,1). Weights need not be exactly
// normalized; the final bucket absorbs rounding.
std::size_t sample_index(const std::vector<double>& weights, double u);

}  // namespace qp
