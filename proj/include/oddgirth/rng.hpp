#pragma once

#include <cstdint>
#include <vector>

namespace oddgirth {

// xorshift64* (Marsaglia shifts, Vigna's multiplier). Campaign reports
// record the seed, so the same seed must reproduce the same draws on
// every platform; nothing here depends on std::rand or libstdc++
// distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next_u64() {
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545F4914F6CDD1Dull;
    }

    // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
    // desk-scale bounds used here and keeps the sequence easy to replay.
    int next_below(int bound) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(bound)); }

    int next_in(int lo, int hi) { return lo + next_below(hi - lo + 1); }

    bool chance(double p) {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0) < p;
    }

    template <class T>
    void shuffle(std::vector<T>& items) {
        for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) {
            int j = next_below(i + 1);
            std::swap(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(j)]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace oddgirth
