#include "tricover/numeric.hpp"

#include <cmath>

#include "tricover/errors.hpp"

namespace tricover {

long long isqrt_floor(long long x) {
    if (x < 0) fail(errc::bad_arguments, "isqrt of negative value");
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

long long isqrt_ceil(long long x) {
    long long r = isqrt_floor(x);
    return r * r == x ? r : r + 1;
}

long long ceil_n_over_sqrt2(long long n) {
    if (n < 0) fail(errc::bad_arguments, "negative n");
    if (n > 3000000000LL) fail(errc::too_large, "n beyond exact 128-bit range");
    auto k = static_cast<long long>(
        std::ceil(static_cast<double>(n) * 0.7071067811865476));
    const int128 n2 = static_cast<int128>(n) * n;
    while (k > 0 && static_cast<int128>(2) * (k - 1) * (k - 1) >= n2) --k;
    while (static_cast<int128>(2) * k * k < n2) ++k;
    return k;
}

} // namespace tricover
