#pragma once

#include "wiretap/channel.hpp"

#include <cstdint>

namespace wiretap {

/// Counter-based deterministic random stream (SplitMix64 finalizer over an
/// incrementing counter). Output for a given key is independent of call
/// order across threads, so Monte-Carlo trials can be keyed and run in any
/// order with identical results.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t key) : key_(key) {}

    /// Derive a stream key by mixing words together (seed, trial, matrix id).
    static std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a,
                                    std::uint64_t b = 0);

    std::uint64_t next_u64();
    /// Uniform double in [0, 1).
    double next_unit();
    /// Standard real normal N(0, 1) via Box-Muller.
    double next_normal();
    /// Circularly-symmetric complex normal CN(0, 1): E|x|^2 = 1.
    cxd next_complex_normal();

    /// rows x cols matrix of i.i.d. CN(0,1) entries, filled row-major.
    Matrix complex_gaussian(int rows, int cols);

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wiretap
