#include "sta/rng.hpp"

#include <cmath>

namespace sta {

namespace {

// splitmix64 step; also the mixer used to derive substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
    // splitmix64 expansion guarantees a nonzero xoshiro state.
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

double Rng::next_gaussian() {
    if (has_spare_gaussian_) {
        has_spare_gaussian_ = false;
        return spare_gaussian_;
    }
    double u, v, s;
    do {
        u = next_symmetric();
        v = next_symmetric();
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_gaussian_ = v * m;
    has_spare_gaussian_ = true;
    return u * m;
}

std::uint64_t Rng::next_index(std::uint64_t n) {
    // multiply-shift; bias is < n / 2^64, immaterial for the n used here
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

Rng RandomSource::slot_rng(std::uint64_t batch, std::uint64_t slot) const {
    std::uint64_t s = seed_;
    std::uint64_t h = splitmix64(s);
    s = h ^ (batch + 0x9E3779B97F4A7C15ull);
    h = splitmix64(s);
    s = h ^ (slot + 0xD1B54A32D192ED03ull);
    return Rng(splitmix64(s));
}

}  // namespace sta
