// Counter-based random number generator (Philox4x32-10) with explicit
// (seed, stream) addressing. Distinct streams use disjoint counter ranges,
// so they never overlap by construction.
#pragma once

#include <cstdint>

namespace cpcop {

// Pure value identifying a random stream. Same (seed, stream) always
// reproduces the same draw sequence.
struct RngState {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

class Rng {
public:
    explicit Rng(RngState state) noexcept : Rng(state.seed, state.stream) {}

    Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key0_(static_cast<std::uint32_t>(seed)),
          key1_(static_cast<std::uint32_t>(seed >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)),
          block_(0), avail_(0), seed_(seed), stream_(stream) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream() const noexcept { return stream_; }
    RngState state_id() const noexcept { return {seed_, stream_}; }

    std::uint64_t next_u64() noexcept {
        if (avail_ == 0) refill();
        return buf_[--avail_];
    }

    // Uniform draw strictly inside (0,1); both endpoints unreachable.
    double uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Unbiased integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    void refill() noexcept {
        std::uint32_t c0 = static_cast<std::uint32_t>(block_);
        std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
        std::uint32_t c2 = stream_lo_;
        std::uint32_t c3 = stream_hi_;
        std::uint32_t k0 = key0_;
        std::uint32_t k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            c0 = n0;
            c1 = lo1;
            c2 = n2;
            c3 = lo0;
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        buf_[1] = (static_cast<std::uint64_t>(c1) << 32) | c0;
        buf_[0] = (static_cast<std::uint64_t>(c3) << 32) | c2;
        avail_ = 2;
        ++block_;
    }

    std::uint32_t key0_, key1_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t block_;
    std::uint64_t buf_[2] = {0, 0};
    int avail_;
    std::uint64_t seed_, stream_;
};

}  // namespace cpcop
