#include "apsvm/random.hpp"

#include "apsvm/error.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace apsvm {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    return u * scale;
}

std::size_t Rng::below(std::size_t n) {
    if (n == 0) throw InputError("Rng::below: empty range");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::size_t>(x % bound);
}

std::vector<std::size_t> Rng::sample_without_replacement(std::size_t population, std::size_t k) {
    if (k > population) throw InputError("cannot draw " + std::to_string(k) + " of " + std::to_string(population) + " without replacement");
    std::vector<std::size_t> pool(population);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + below(population - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_stream(std::uint64_t base_seed, std::uint64_t stream_id) noexcept {
    return mix64(base_seed ^ mix64(stream_id));
}

std::uint64_t derive_cell_seed(std::uint64_t base_seed, std::uint64_t p, std::uint64_t repeat) {
    if (p >= (std::uint64_t{1} << 43) || repeat >= (std::uint64_t{1} << 20))
        throw InputError("benchmark cell (p, repeat) outside the seed-derivation range");
    return derive_stream(base_seed, (p << 20) | repeat);
}

} // namespace apsvm
