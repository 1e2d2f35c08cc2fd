#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gint {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient with counting semantics: the number of
/// b-element subsets of an a-element set. C(a,b) = 0 when b < 0 or a < b;
/// C(a,0) = 1 for every a. Exact at arbitrary magnitude.
inline BigInt binomial(long long a, long long b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a < b) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= (a - b + i);
        r /= i;  // divides exactly: r is C(a-b+i, i) after this step
    }
    return r;
}

}  // namespace gint
