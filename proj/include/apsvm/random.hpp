#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace apsvm {

/// Seeded generator whose output sequence is fixed by the seed alone.
///
/// std::mt19937_64 is specified bit-for-bit by the standard, but the
/// std::*_distribution adaptors are not, so uniform, bounded-integer and
/// Gaussian variates are derived here explicitly:
///   uniform: top 53 bits of one engine word scaled by 2^-53;
///   below(n): rejection on the largest multiple of n;
///   normal: Marsaglia polar method, second variate cached.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform();
    double normal();
    std::size_t below(std::size_t n);

    /// k distinct indices from [0, population), in draw order (partial Fisher-Yates).
    std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t k);

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of an independent stream; injective in stream_id for a fixed base.
std::uint64_t derive_stream(std::uint64_t base_seed, std::uint64_t stream_id) noexcept;

/// Seed for one benchmark cell. Injective over p < 2^43, repeat < 2^20.
std::uint64_t derive_cell_seed(std::uint64_t base_seed, std::uint64_t p, std::uint64_t repeat);

} // namespace apsvm
