// Independent brute-force oracles for the test suites. Everything here avoids
// the library's series machinery: dense vectors, literal divisor enumeration,
// trial-division gcd.
#pragma once

#include <vector>

#include "qmf/rational.hpp"

namespace qmf::test {

// sigma_p(n) by literal divisor enumeration.
inline Int divisor_sigma_bruteforce(long p, long n) {
    Int total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Int dp = 1;
        for (long k = 0; k < p; ++k) dp *= d;
        total += dp;
    }
    return total;
}

// Dense polynomial product truncated to `count` coefficients.
inline std::vector<Int> dense_mul(const std::vector<Int>& a, const std::vector<Int>& b,
                                  std::size_t count) {
    std::vector<Int> c(count, Int(0));
    for (std::size_t i = 0; i < a.size() && i < count; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < count; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// Coefficients of q * prod_{n>=1} (1 - q^n)^24; entry k is the coefficient of
// q^{k+1}, for k in [0, count).
inline std::vector<Int> delta_eta_product(std::size_t count) {
    std::vector<Int> acc(count, Int(0));
    acc[0] = 1;
    for (std::size_t n = 1; n <= count; ++n) {
        std::vector<Int> factor(count, Int(0));
        factor[0] = 1;
        if (n < count) factor[n] = -1;
        for (int rep = 0; rep < 24; ++rep) acc = dense_mul(acc, factor, count);
    }
    return acc;
}

// gcd(24, |d|) by trial division, with gcd(24, 0) = 24.
inline long gcd24_bruteforce(long d) {
    if (d < 0) d = -d;
    if (d == 0) return 24;
    for (long g = 24; g >= 1; --g)
        if (24 % g == 0 && d % g == 0) return g;
    return 1;
}

}  // namespace qmf::test
