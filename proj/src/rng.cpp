#include "betaspec/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace betaspec {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
    std::uint64_t x = seed;
    x ^= 0xA0761D6478BD642FULL * (stream_index + 1);
    s_[0] = splitmix64(x);
    s_[1] = splitmix64(x);
    s_[2] = splitmix64(x);
    s_[3] = splitmix64(x);
}

RngStream RngStream::substream(std::uint64_t index) const {
    std::uint64_t x = stream_index_;
    std::uint64_t mixed = splitmix64(x) ^ (index + 0x9E3779B97F4A7C15ULL);
    std::uint64_t y = mixed;
    return RngStream(seed_, splitmix64(y));
}

std::uint64_t RngStream::next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
    if (!(lo < hi))
        throw std::invalid_argument("uniform: empty interval");
    return lo + (hi - lo) * uniform01();
}

std::uint64_t RngStream::uniform_index(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("uniform_index: n must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

double RngStream::normal(double mean, double std_dev) {
    if (!(std_dev > 0.0) || !std::isfinite(std_dev) || !std::isfinite(mean))
        throw std::invalid_argument("normal: std_dev must be positive and finite");
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return mean + std_dev * spare_normal_;
    }
    double u1, u2;
    do {
        u1 = uniform01();
    } while (u1 == 0.0);
    u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_normal_ = r * std::sin(a);
    has_spare_normal_ = true;
    return mean + std_dev * r * std::cos(a);
}

double RngStream::gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("gamma: shape and scale must be positive");
    if (shape < 1.0) {
        const double boost = std::pow(uniform01(), 1.0 / shape);
        return gamma(shape + 1.0, scale) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal(0.0, 1.0);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
            return d * v * scale;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v * scale;
    }
}

double RngStream::chi(double k) {
    if (!(k > 0.0))
        throw std::invalid_argument("chi: k must be positive");
    return std::sqrt(gamma(0.5 * k, 2.0));
}

double RngStream::chi_square(double k) {
    if (!(k > 0.0))
        throw std::invalid_argument("chi_square: k must be positive");
    return gamma(0.5 * k, 2.0);
}

} // namespace betaspec
