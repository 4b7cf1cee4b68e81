#pragma once

#include <cstdint>

namespace blossomspin {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so runs are reproducible byte for byte on any
// platform and independent draws can be pulled from named streams without
// coordinating state.  Core mixer is SplitMix64.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream), counter_(0) {}

    std::uint64_t next_u64() {
        std::uint64_t x = seed_ ^ (0x9e3779b97f4a7c15ULL * (stream_ + 1));
        x += 0x9e3779b97f4a7c15ULL * ++counter_;
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    // Uniform on [0,1): top 53 bits scaled by 2^-53, exact in double.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_;
};

} // namespace blossomspin
