#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace linext {

// Exact nonnegative counts; linear-extension counts reach n! scale.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount factorial(int k) {
    BigCount r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

inline BigCount binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace linext
