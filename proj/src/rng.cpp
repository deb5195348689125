#include "linkdcm/rng.hpp"

#include "linkdcm/errors.hpp"

namespace linkdcm {

namespace {

constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                    std::uint64_t& lo) {
    const unsigned __int128 product =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    lo = static_cast<std::uint64_t>(product);
    hi = static_cast<std::uint64_t>(product >> 64);
}

}  // namespace

std::array<std::uint64_t, 4> Philox4x64::block(
    const std::array<std::uint64_t, 4>& counter,
    const std::array<std::uint64_t, 2>& key) {
    std::array<std::uint64_t, 4> c = counter;
    std::array<std::uint64_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t hi0, lo0, hi1, lo1;
        mulhilo(kMult0, c[0], hi0, lo0);
        mulhilo(kMult1, c[2], hi1, lo1);
        c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        k[0] += kWeyl0;
        k[1] += kWeyl1;
    }
    return c;
}

Philox4x64::Philox4x64(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t index)
    : counter_{0, 0, index, 0},
      key_{seed, stream},
      buffer_{},
      buffer_pos_(4) {}

Philox4x64 Philox4x64::for_label(std::uint64_t seed, std::string_view label,
                                 std::uint64_t index) {
    return Philox4x64(seed, fnv1a64(label), index);
}

void Philox4x64::refill() {
    buffer_ = block(counter_, key_);
    if (++counter_[0] == 0) ++counter_[1];
    buffer_pos_ = 0;
}

std::uint64_t Philox4x64::next_u64() {
    if (buffer_pos_ == 4) refill();
    return buffer_[buffer_pos_++];
}

double Philox4x64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Philox4x64::next_below(std::uint64_t n) {
    if (n == 0) throw DomainError("next_below: n must be >= 1");
    // Rejection below the largest multiple of n keeps the draw unbiased.
    const std::uint64_t threshold = (-n) % n;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold) return r % n;
    }
}

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (const char ch : text) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

}  // namespace linkdcm
