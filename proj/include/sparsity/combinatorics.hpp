#pragma once

#include <cstdint>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sparsity {

/// Exact binomial coefficient; throws std::overflow_error if it exceeds uint64.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (acc > UINT64_MAX) throw std::overflow_error("binomial: result exceeds uint64");
    }
    return static_cast<std::uint64_t>(acc);
}

/// Binomial coefficient in long double, usable far beyond uint64 range.
inline long double binomial_ld(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0.0L;
    if (k > n - k) k = n - k;
    long double acc = 1.0L;
    for (int i = 1; i <= k; ++i) acc = acc * static_cast<long double>(n - k + i) / i;
    return acc;
}

inline double log2_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw std::invalid_argument("log2_binomial: out of range");
    return static_cast<double>((std::lgammal(n + 1.0L) - std::lgammal(k + 1.0L) -
                                std::lgammal(n - k + 1.0L)) / std::log(2.0L));
}

/// Number of supports of size <= maxw over n items (includes the empty set).
inline std::uint64_t support_count(int n, int maxw) {
    unsigned __int128 total = 0;
    for (int w = 0; w <= maxw && w <= n; ++w) {
        total += binomial(n, w);
        if (total > UINT64_MAX) throw std::overflow_error("support_count: exceeds uint64");
    }
    return static_cast<std::uint64_t>(total);
}

/// Advances idx (a strictly increasing k-combination of [0,n)) to its lexicographic
/// successor. Returns false once the last combination has been visited.
inline bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_combination(int k) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    return idx;
}

/// Unranks the r-th (lexicographic) k-combination of [0,n).
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t r) {
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(k));
    int a = 0;
    for (int i = 0; i < k; ++i) {
        for (int v = a; v < n; ++v) {
            std::uint64_t block = binomial(n - 1 - v, k - 1 - i);
            if (r < block) { idx.push_back(v); a = v + 1; break; }
            r -= block;
        }
    }
    return idx;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Order-independent per-task seed derivation: hash(master, index).
inline std::uint64_t stable_hash(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b + 0x517cc1b727220a95ULL));
}

/// Uniform double in [0,1) with exactly 53 random bits; engine-specified, so the
/// result stream is identical across platforms (unlike std distributions).
template <typename Rng>
inline double u01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) by rejection; deterministic given the engine.
template <typename Rng>
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do { v = rng(); } while (v >= limit);
    return v % bound;
}

/// Deterministic random w-subset of [0,n) in increasing order (partial Fisher-Yates).
template <typename Rng>
inline std::vector<int> random_support(Rng& rng, int n, int w) {
    if (w > n) throw std::invalid_argument("random_support: weight exceeds n");
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    for (int i = 0; i < w; ++i) {
        const int j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    pool.resize(static_cast<size_t>(w));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace sparsity
