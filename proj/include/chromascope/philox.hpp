#pragma once

#include <array>
#include <cstdint>

namespace chromascope {

/// Philox4x64-10 counter-based generator (Salmon et al. 2011). Output is a
/// pure function of (counter, key), which makes sampled streams identical
/// across platforms and independent of evaluation order.
class Philox4x64 {
public:
    using Counter = std::array<std::uint64_t, 4>;
    using Key = std::array<std::uint64_t, 2>;

    static Counter block(Counter counter, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += 0x9E3779B97F4A7C15ULL;
                key[1] += 0xBB67AE8584CAA73BULL;
            }
            const unsigned __int128 p0 = static_cast<unsigned __int128>(0xD2E7470EE14C6C93ULL) * counter[0];
            const unsigned __int128 p1 = static_cast<unsigned __int128>(0xCA5A826395121157ULL) * counter[2];
            const auto hi0 = static_cast<std::uint64_t>(p0 >> 64);
            const auto lo0 = static_cast<std::uint64_t>(p0);
            const auto hi1 = static_cast<std::uint64_t>(p1 >> 64);
            const auto lo1 = static_cast<std::uint64_t>(p1);
            counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
        }
        return counter;
    }
};

/// Word `index` of the stream keyed by `seed` and numbered `stream`.
inline std::uint64_t philox_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const auto out = Philox4x64::block({index / 4, stream, 0, 0}, {seed, 0});
    return out[index % 4];
}

/// Uniform double in [0, 1) with 53 random bits.
inline double to_unit_interval(std::uint64_t word) { return static_cast<double>(word >> 11) * 0x1.0p-53; }

}  // namespace chromascope
