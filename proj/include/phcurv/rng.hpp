#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "phcurv/graph.hpp"

namespace phcurv {

/// Counter-based generator: output k of stream (seed, stream) is a fixed
/// mixing function of (key, k). Streams for different trial indices are
/// independent of one another and of the order in which they are consumed,
/// which is what makes parallel Monte Carlo runs schedule-independent.
///
/// Satisfies UniformRandomBitGenerator, so Boost.Random distributions
/// (whose algorithms are fixed across platforms) can sit on top.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(seed ^ mix(stream + 0x6a09e667f3bcc909ULL)))
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return mix(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

private:
    // SplitMix64 finalizer.
    static constexpr std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Uniformly random permutation of 0..n-1 (Fisher-Yates).
std::vector<Vertex> random_permutation(std::size_t n, CounterRng& rng);

} // namespace phcurv
