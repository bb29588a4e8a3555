// Copyright (C) 2026 The uigraph Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace uigraph {

// The generator is pinned: xoshiro256** seeded through splitmix64. Everything
// below is integer arithmetic, so draws are identical on every platform and
// standard library (std::uniform_int_distribution is not).

inline constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Child seed for an independent stream, e.g. one per component id.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    std::uint64_t t = stream ^ a;
    return splitmix64(t);
}

class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit constexpr Xoshiro256(std::uint64_t seed) noexcept : m_state{} {
        std::uint64_t sm = seed;
        for (auto& word : m_state) {
            word = splitmix64(sm);
        }
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    constexpr result_type operator()() noexcept {
        const std::uint64_t result = rotl(m_state[1] * 5, 7) * 9;
        const std::uint64_t t = m_state[1] << 17;
        m_state[2] ^= m_state[0];
        m_state[3] ^= m_state[1];
        m_state[1] ^= m_state[2];
        m_state[0] ^= m_state[3];
        m_state[2] ^= t;
        m_state[3] = rotl(m_state[3], 45);
        return result;
    }

    /// Uniform integer in [0, bound). Rejection sampling, so no modulo bias.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        if (bound <= 1) {
            return 0;
        }
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = (*this)();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double unit() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> m_state;
};

/// Moves a uniformly random `count`-subset of `items` into its first `count`
/// slots (partial Fisher-Yates). The order of those slots is the draw order.
template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t count, Xoshiro256& rng) {
    const std::size_t n = items.size();
    for (std::size_t i = 0; i < count && i + 1 < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(items[i], items[j]);
    }
}

}  // namespace uigraph
