#ifndef BERGESAT_COMBINATORICS_HPP
#define BERGESAT_COMBINATORICS_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bergesat/errors.hpp"

namespace bergesat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, r). Zero outside the usual range.
inline BigInt binomial(long long n, long long r) {
    if (n < 0 || r < 0 || r > n) return BigInt(0);
    r = std::min(r, n - r);
    BigInt result = 1;
    for (long long i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i; // exact: the running product of j consecutive integers is divisible by j!
    }
    return result;
}

inline BigInt factorial(long long n) {
    BigInt result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

/// Ceiling of a/b for a >= 0, b > 0.
inline BigInt ceil_div(const BigInt& a, long long b) {
    return (a + b - 1) / b;
}

inline long long to_long_long(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        raise(errc::invalid_params, std::string(what) + " does not fit in 64 bits");
    return v.convert_to<long long>();
}

/// Number of ways to partition x labeled points into unordered blocks of size
/// k: x! / ((k!)^{x/k} (x/k)!).
inline BigInt num_configurations(long long x, int k) {
    if (k < 2) raise(errc::invalid_params, "uniformity k must be >= 2");
    if (x < 0) raise(errc::invalid_params, "point count must be >= 0");
    if (x % k != 0) raise(errc::not_divisible, "point count " + std::to_string(x) +
                                                   " not divisible by k=" + std::to_string(k));
    const long long blocks = x / k;
    BigInt denom = boost::multiprecision::pow(factorial(k), static_cast<unsigned>(blocks));
    denom *= factorial(blocks);
    return factorial(x) / denom;
}

} // namespace bergesat

#endif // BERGESAT_COMBINATORICS_HPP
