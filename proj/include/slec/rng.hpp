#pragma once

#include <cstdint>
#include <random>
#include <vector>
#include <algorithm>

#include "errors.hpp"

namespace slec {

/// Derives an independent seed for stream `stream` of a master seed (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform draw from [0, n). Avoids std::uniform_int_distribution, whose output
/// sequence is implementation defined; this one is reproducible everywhere.
inline int rand_below(std::mt19937_64& rng, int n) {
    if (n <= 0) throw input_error("rand_below: bound must be positive");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = (UINT64_MAX / un) * un;
    std::uint64_t r;
    do { r = rng(); } while (r >= limit);
    return static_cast<int>(r % un);
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rand_below(rng, static_cast<int>(i)))]);
}

/// `count` distinct integers from [lo, hi], sorted ascending.
inline std::vector<int> sample_distinct(std::mt19937_64& rng, int count, int lo, int hi) {
    const int span = hi - lo + 1;
    if (count < 0 || count > span) throw input_error("sample_distinct: count out of range");
    std::vector<int> pool(static_cast<std::size_t>(span));
    for (int i = 0; i < span; ++i) pool[static_cast<std::size_t>(i)] = lo + i;
    for (int i = 0; i < count; ++i) {
        int j = i + rand_below(rng, span - i);
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(count));
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace slec
