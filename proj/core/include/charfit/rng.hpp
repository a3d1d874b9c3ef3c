#pragma once

#include <cstdint>
#include <random>

namespace charfit {

/// One replicate's deterministic random stream. The stream for replicate j is
/// a pure function of (master_seed, j), so Monte Carlo results do not depend
/// on how replicates are scheduled across workers.
class RngStream {
public:
    static RngStream for_replicate(std::uint64_t master_seed, std::uint64_t replicate);
    explicit RngStream(std::uint64_t seed);

    /// Uniform on the open interval (0, 1).
    double uniform();
    /// Standard normal by quantile inversion (one uniform per draw).
    double normal();
    double exponential();
    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace charfit
