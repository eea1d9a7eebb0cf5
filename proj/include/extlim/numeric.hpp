#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>

namespace extlim {

using Int = boost::multiprecision::cpp_int;

struct XgcdResult {
    Int g;  // gcd(a, b), always >= 0
    Int p;  // p*a + q*b = g
    Int q;
};

XgcdResult xgcd(const Int& a, const Int& b);

/// Floored quotient; requires b > 0. The remainder a - b*floor_div(a,b) lies in [0, b).
Int floor_div(const Int& a, const Int& b);

Int factorial(std::size_t n);
Int binomial(std::size_t n, std::size_t k);

}  // namespace extlim
