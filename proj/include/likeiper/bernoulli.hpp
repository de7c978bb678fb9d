#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "likeiper/precision.hpp"

namespace likeiper {

inline constexpr int kBernoulliCap = 60;

/// Exact Bernoulli number B_k (B_1 = -1/2 convention), memoized.
/// Recurrence: sum_{j=0}^{k} C(k+1,j) B_j = 0.
inline Rational bernoulli(int k, int cap = kBernoulliCap) {
    if (k < 0)
        throw std::invalid_argument("bernoulli: index must be >= 0");
    if (k > cap)
        throw std::invalid_argument("bernoulli: index " + std::to_string(k) + " exceeds cap " +
                                    std::to_string(cap));

    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};

    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= k) {
        const int m = static_cast<int>(cache.size());
        // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1,j) B_j
        Rational sum = 0;
        BigInt binom = 1;  // C(m+1, j), starts at j=0
        for (int j = 0; j < m; ++j) {
            sum += Rational(binom) * cache[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.push_back(-sum / (m + 1));
    }
    return cache[static_cast<std::size_t>(k)];
}

}  // namespace likeiper
