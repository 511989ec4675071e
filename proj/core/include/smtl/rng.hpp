#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace smtl {

/// Seeded random source for everything that must be reproducible:
/// weight init, dataset generation, shuffles, splits.
///
/// std::mt19937_64 output is fully specified by the standard; the
/// distribution transforms below are implemented here (rather than with
/// std::*_distribution, whose streams are implementation-defined) so that
/// generated datasets and runs are byte-stable across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Rejection-sampled, bias-free.
    int64_t uniform_int(int64_t n);

    /// Standard normal via Box-Muller.
    double normal();

    float normalf() { return static_cast<float>(normal()); }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int64_t i = static_cast<int64_t>(v.size()) - 1; i > 0; --i) {
            std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(uniform_int(i + 1))]);
        }
    }

    /// Derive a sub-seed from a parent seed and a salt (splitmix64 finalizer).
    static uint64_t mix(uint64_t seed, uint64_t salt);

    /// FNV-1a 64-bit hash of a string, for salting sub-seeds by name.
    static uint64_t hash_str(std::string_view s);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// FNV-1a 64-bit digest over a byte range. Used for parameter fingerprints
/// and probe-prediction digests: any single-byte change alters the digest.
uint64_t fnv1a64(const void* data, size_t len, uint64_t basis = 0xcbf29ce484222325ull);

}  // namespace smtl
