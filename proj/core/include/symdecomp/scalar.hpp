#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>

namespace symdecomp {

/// Exact coefficient field for S_n symmetrizer construction. cpp_rational
/// keeps lowest terms and a positive denominator automatically.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Complex = std::complex<double>;

/// Complex coefficients below this magnitude are pruned from group-algebra
/// elements to keep sparsity after repeated products.
inline constexpr double kZeroPruneTol = 1e-12;

namespace scalar {

inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const Complex& c) { return std::abs(c) < kZeroPruneTol; }

inline Rational conj(const Rational& c) { return c; }
inline Complex conj(const Complex& c) { return std::conj(c); }

inline Complex to_complex(const Rational& c) {
    return Complex(static_cast<double>(c), 0.0);
}
inline Complex to_complex(const Complex& c) { return c; }

}  // namespace scalar

}  // namespace symdecomp
