#ifndef BERGESAT_RNG_HPP
#define BERGESAT_RNG_HPP

#include <cstdint>
#include <vector>

namespace bergesat {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256** engine. Pure 64-bit arithmetic, so identical seeds give
/// identical streams on every platform, and construction is cheap enough to
/// make one engine per trial.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) {
        std::uint64_t state = seed;
        for (auto& word : state_) word = splitmix64(state);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t operator()() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ull; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

/// Independent engine for stream `index` of a master seed. All randomness in
/// the library flows through this, so trial t of any experiment depends only
/// on (seed, t) and results are reproducible under any execution order.
inline Rng stream_rng(std::uint64_t seed, std::uint64_t index = 0) {
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * (index + 1));
    splitmix64(state);
    return Rng(splitmix64(state));
}

/// Unbiased draw from {0, ..., bound-1} by Lemire's multiply-shift rejection;
/// the expensive modulo only runs on the rare retry path.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
    std::uint64_t low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        while (low < threshold) {
            m = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

/// Fisher-Yates shuffle with the portable draw above.
template <typename T>
void shuffle_vec(std::vector<T>& values, Rng& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace bergesat

#endif // BERGESAT_RNG_HPP
