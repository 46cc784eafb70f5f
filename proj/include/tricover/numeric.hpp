#pragma once

#include <cstdint>

namespace tricover {

using int128 = __int128;

// Binomial coefficients; negative n yields 0.
constexpr long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr long long choose3(long long n) { return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3; }

// Colexicographic ranks. Pairs and triples are stored with strictly
// increasing components; colex order sorts by largest component first.
constexpr long long pair_rank_colex(int a, int b) { return choose2(b) + a; }
constexpr long long triple_rank_colex(int a, int b, int c) {
    return choose3(c) + choose2(b) + a;
}

// Least k >= 0 with 2*k^2 >= n^2, i.e. ceil(n / sqrt(2)), decided by integer
// squaring only. Valid for 0 <= n <= 3*10^9.
long long ceil_n_over_sqrt2(long long n);

// Floor of sqrt(x) for x >= 0, exact.
long long isqrt_floor(long long x);

// Least k with k^2 >= x (ceil of sqrt), exact.
long long isqrt_ceil(long long x);

} // namespace tricover
