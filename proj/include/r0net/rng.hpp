#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "r0net/errors.hpp"

namespace r0net {

/// splitmix64 finalizer. Used to whiten seeds and derive independent
/// substream seeds from a master seed plus a salt.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return mix64(base ^ mix64(salt + 0x6a09e667f3bcc909ULL));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt1, std::uint64_t salt2) {
    return derive_seed(derive_seed(base, salt1), salt2);
}

/// Deterministic random source. The engine is mt19937_64, whose output
/// sequence is fixed by the standard, and every distribution below is
/// implemented here rather than taken from <random>, so streams are
/// bit-identical across platforms and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    bool bernoulli(double p) {
        return uniform() < p;
    }

    /// Uniform integer in [0, bound). Rejection sampling keeps the
    /// distribution exact for any bound.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw ParameterError("Rng::below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = engine_();
        while (v >= limit)
            v = engine_();
        return v % bound;
    }

    /// Uniform integer in [lo, hi], both ends included.
    long uniform_int(long lo, long hi) {
        if (lo > hi)
            throw ParameterError("Rng::uniform_int: empty range");
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Box-Muller transform; consumes exactly two uniforms per call.
    double gaussian(double mean = 0.0, double stddev = 1.0) {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) // avoid log(0)
            u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Fisher-Yates shuffle.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct values from [0, n), in draw order (partial Fisher-Yates).
    std::vector<int> sample_without_replacement(int n, int k) {
        if (k < 0 || k > n)
            throw ParameterError("Rng::sample_without_replacement: need 0 <= k <= n");
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            pool[static_cast<std::size_t>(i)] = i;
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            const std::size_t j = static_cast<std::size_t>(i) +
                static_cast<std::size_t>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            out.push_back(pool[static_cast<std::size_t>(i)]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace r0net
