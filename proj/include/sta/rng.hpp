#ifndef STA_RNG_HPP
#define STA_RNG_HPP

#include <array>
#include <cstdint>

namespace sta {

/// xoshiro256++ generator with splitmix64 seeding. Satisfies
/// UniformRandomBitGenerator; the draw helpers below are the only
/// conversions the sampler uses, so a run replays bit-exactly from its seed.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next_u64(); }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [-1, 1).
    double next_symmetric() {
        return static_cast<double>(next_u64() >> 10) * 0x1.0p-53 - 1.0;
    }

    /// Standard normal (Marsaglia polar, one value cached).
    double next_gaussian();

    /// Uniform integer in [0, n); n >= 1.
    std::uint64_t next_index(std::uint64_t n);

private:
    static std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
    double spare_gaussian_ = 0.0;
    bool has_spare_gaussian_ = false;
};

/// Deterministic, splittable randomness for one optimization run.
///
/// Every sampling batch takes the next batch id; (seed, batch, slot) then
/// derives an independent generator, so the draws feeding candidate i of a
/// batch do not depend on how many values other candidates consumed.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Claims the next batch id.
    std::uint64_t open_batch() { return next_batch_++; }

    /// Generator dedicated to one candidate slot of one batch.
    Rng slot_rng(std::uint64_t batch, std::uint64_t slot) const;

private:
    std::uint64_t seed_;
    std::uint64_t next_batch_ = 0;
};

}  // namespace sta

#endif  // STA_RNG_HPP
