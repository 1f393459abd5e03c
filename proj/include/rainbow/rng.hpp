#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rainbow {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Per-trial seed derived from a master seed by index, so trial outcomes do
/// not depend on execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

/// mt19937_64 with rejection sampling on top. Both pieces are fully
/// specified, so the same seed yields the same draws on every platform
/// (std::uniform_int_distribution and std::shuffle do not guarantee that).
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform draw from [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        std::uint64_t x;
        do {
            x = gen_();
        } while (x < threshold);
        return x % bound;
    }

    template <class T> void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace rainbow
