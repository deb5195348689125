#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace linkdcm {

// Counter-based pseudorandom generator (Philox 4x64, 10 rounds).
//
// All randomness in the library flows through this generator so that results
// are reproducible bit-for-bit across runs, platforms, and parallel
// generation order. Streams are addressed by (seed, stream, index): `seed` is
// the user-facing root seed, `stream` separates pipeline stages (derived from
// a string label), and `index` separates parallel units within a stage
// (restarts, links, bootstrap replicates).
class Philox4x64 {
public:
    explicit Philox4x64(std::uint64_t seed, std::uint64_t stream = 0,
                        std::uint64_t index = 0);

    // Stream handle for a named stage, e.g. for_label(seed, "split").
    static Philox4x64 for_label(std::uint64_t seed, std::string_view label,
                                std::uint64_t index = 0);

    std::uint64_t next_u64();

    // Uniform on [0, 1) with 53 random bits.
    double next_double();

    // Unbiased uniform integer on [0, n). Requires n >= 1.
    std::uint64_t next_below(std::uint64_t n);

    // One keyed block; exposed for known-answer tests.
    static std::array<std::uint64_t, 4> block(
        const std::array<std::uint64_t, 4>& counter,
        const std::array<std::uint64_t, 2>& key);

private:
    std::array<std::uint64_t, 4> counter_;
    std::array<std::uint64_t, 2> key_;
    std::array<std::uint64_t, 4> buffer_;
    int buffer_pos_;  // 4 means exhausted
    void refill();
};

// FNV-1a 64-bit hash; used to derive stream ids from stage labels.
std::uint64_t fnv1a64(std::string_view text);

}  // namespace linkdcm
