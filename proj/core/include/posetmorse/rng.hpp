#pragma once

#include <cstdint>
#include <vector>

namespace posetmorse {

/// Seeded generator with pinned output on every platform (splitmix64).
/// Search results and random test instances land in snapshots, so the stream
/// must never depend on the standard library's distributions.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t state_;
};

/// Independent stream for a derived purpose (restart index, instance index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    DeterministicRng rng(seed ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
    return rng.next();
}

}  // namespace posetmorse
