#include "charfit/rng.hpp"

#include <cmath>

#include "charfit/distributions.hpp"

namespace charfit {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

RngStream RngStream::for_replicate(std::uint64_t master_seed, std::uint64_t replicate) {
    const std::uint64_t mixed = splitmix64(splitmix64(master_seed) ^
                                           splitmix64(replicate + 0x521A3B7D1F00ULL));
    return RngStream(mixed);
}

RngStream::RngStream(std::uint64_t seed) : engine_(seed) {}

double RngStream::uniform() {
    // 53-bit mantissa, offset by half an ulp so 0 and 1 are never produced.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
}

double RngStream::normal() { return norm_quantile(uniform()); }

double RngStream::exponential() { return -std::log(uniform()); }

}  // namespace charfit
