#pragma once

#include <cstdint>

namespace betaspec {

// Seeded deterministic random stream (xoshiro256++ core, splitmix64 seeding).
// The full variate sequence is a pure function of (seed, stream_index).
// Independent substreams are derived by index, never by splitting state.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_index = 0);

    // Derived stream, independent of this one and of other indices.
    RngStream substream(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64();

    // Uniform on [0,1) with 53 random bits.
    double uniform01();
    double uniform(double lo, double hi);

    // Unbiased uniform draw from {0, ..., n-1}; n must be positive.
    std::uint64_t uniform_index(std::uint64_t n);

    // One draw from Normal(mean, std_dev^2); std_dev must be positive.
    double normal(double mean, double std_dev);

    // Gamma(shape, scale) for any real shape > 0 (Marsaglia-Tsang).
    double gamma(double shape, double scale);

    // Chi distribution with k > 0 degrees of freedom (k need not be integer).
    double chi(double k);

    // Chi-square with k > 0 degrees of freedom.
    double chi_square(double k);

private:
    std::uint64_t s_[4];
    std::uint64_t seed_;
    std::uint64_t stream_index_;
    double spare_normal_ = 0.0;
    bool has_spare_normal_ = false;
};

} // namespace betaspec
