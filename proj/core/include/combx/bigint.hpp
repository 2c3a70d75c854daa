#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace combx {

// Exact nonnegative counts. Everything in this library that counts objects
// returns one of these; no floating point is involved anywhere.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount factorial(int n) {
    BigCount r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigCount binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    // multiply before dividing so every intermediate quotient is exact
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

}  // namespace combx
