#pragma once

// Exact arbitrary-precision arithmetic used by every counting path.
// All enumeration values are kept as exact integers end to end; floating
// point appears only at presentation boundaries (see asymptotics.hpp).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace parkav {

using BigInt = boost::multiprecision::cpp_int;
// Nonnegative by contract; same representation.
using BigCount = BigInt;

inline BigCount factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigCount r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Binomial coefficient. Zero when k < 0 or k > n; negative n is rejected
/// (no determinant entry here ever has a negative upper index).
inline BigCount binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // divides exactly at each step
    }
    return r;
}

/// Falling factorial (x)_m = x(x-1)...(x-m+1); empty product for m = 0.
/// x may be negative.
inline BigInt falling_factorial(long long x, long long m) {
    if (m < 0) throw std::invalid_argument("falling_factorial: negative length");
    BigInt r = 1;
    for (long long i = 0; i < m; ++i) r *= BigInt(x - i);
    return r;
}

/// Square matrix of arbitrary-precision integers. Order 0 is permitted.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t order) : order_(order), cells_(order * order) {}

    std::size_t order() const { return order_; }

    BigInt& at(std::size_t i, std::size_t j) { return cells_[i * order_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return cells_[i * order_ + j]; }

private:
    std::size_t order_ = 0;
    std::vector<BigInt> cells_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// performed is exact, so the result never leaves the integers.
/// The order-0 matrix has determinant 1 (empty product).
inline BigInt determinant(IntegerMatrix m) {
    const std::size_t n = m.order();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

/// Exact quotient; the callers invoke this only where a theorem guarantees
/// divisibility, so a remainder is an implementation bug, not an input error.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::logic_error("exact_div: zero divisor");
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("exact_div: inexact division");
    return q;
}

}  // namespace parkav
