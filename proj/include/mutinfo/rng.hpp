#pragma once

#include <cstdint>
#include <string_view>

namespace mutinfo {

/// SplitMix64 output function (Steele/Lea/Flood). Used for seed expansion
/// and for deriving independent per-cell / per-variable streams from one
/// master seed.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic sub-stream seed: mixes a master seed with a stream index
/// (cell index, variable-name hash, ...). derive_seed(m, a) != derive_seed(m, b)
/// for a != b with overwhelming probability.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// FNV-1a 64-bit hash, used to turn column names into stream indices.
std::uint64_t fnv1a64(std::string_view s);

/// xoshiro256++ (Blackman/Vigna), seeded through SplitMix64. All sampling in
/// the library goes through this generator so that results are reproducible
/// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform on the open interval (0, 1); never returns 0 or 1.
    double uniform_open();

    /// Standard normal via the Marsaglia polar method (second variate cached).
    double normal();

    /// Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape < 1 handled by
    /// boosting (draw Gamma(shape+1) and scale by U^(1/shape)).
    double gamma(double shape);

private:
    std::uint64_t state_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

} // namespace mutinfo
