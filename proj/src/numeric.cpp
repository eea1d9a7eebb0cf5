#include "extlim/numeric.hpp"

#include <cstdlib>
#include <string>

#include "extlim/error.hpp"
#include "extlim/size_guard.hpp"

namespace extlim {

XgcdResult xgcd(const Int& a, const Int& b) {
    // Iterative extended Euclid; invariant p*a + q*b = r for each row.
    Int old_r = a, r = b;
    Int old_p = 1, p = 0;
    Int old_q = 0, q = 1;
    while (r != 0) {
        Int quot = old_r / r;  // truncated division is fine for gcd
        Int tmp;
        tmp = old_r - quot * r; old_r = r; r = tmp;
        tmp = old_p - quot * p; old_p = p; p = tmp;
        tmp = old_q - quot * q; old_q = q; q = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_p = -old_p;
        old_q = -old_q;
    }
    return {old_r, old_p, old_q};
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

Int factorial(std::size_t n) {
    Int r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<unsigned long>(n - i);
        r /= static_cast<unsigned long>(i + 1);
    }
    return r;
}

std::size_t size_guard_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("EXTLIM_SIZE_GUARD")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(20000);
    }();
    return limit;
}

void check_size_guard(std::size_t requested, const char* what) {
    if (requested > size_guard_limit())
        throw SizeGuardError(std::string(what) + ": basis size " + std::to_string(requested) +
                             " exceeds guard " + std::to_string(size_guard_limit()));
}

}  // namespace extlim
