#pragma once

// Exact integer arithmetic for the invariant computations: Euler totient,
// Hirzebruch-Jung continued fractions, and Poincare series of products of
// truncated geometric factors together with exponent recovery.  Everything
// is arbitrary-precision; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace pbsurf {

using Int = boost::multiprecision::cpp_int;

// A state the underlying theory rules out was reached; callers map this to a
// distinct exit code instead of treating it as bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Strictly positive rational in lowest terms.
struct Fraction {
    Int num;  // >= 1
    Int den;  // >= 1, gcd(num, den) == 1
    Fraction(Int n, Int d);
    bool operator==(const Fraction&) const = default;
};

// Continued fraction [a1,...,ar] with every entry >= 2, expanding
//   n/m = a1 - 1/(a2 - 1/(... - 1/ar)).
using HJChain = std::vector<Int>;

// Euler totient; n >= 1.
Int totient(const Int& n);

// The unique all-entries->=2 expansion of n/m; requires 0 < m < n and
// gcd(n, m) = 1.
HJChain hj_expand(const Int& n, const Int& m);

// Exact value of a chain, inverse of hj_expand.  The chain must be nonempty
// with every entry >= 2; that keeps every partial denominator positive, and a
// nonpositive one is reported as internal_error.
Fraction hj_evaluate(const HJChain& chain);

// Dense polynomial over Z; coefficients[k] multiplies t^k.  Zero is the empty
// vector, otherwise the leading coefficient is nonzero.
struct IntPolynomial {
    std::vector<Int> coefficients;

    static IntPolynomial zero();
    static IntPolynomial one();
    // 1 + t + ... + t^(a-2), the factor contributed by one exponent a >= 2.
    static IntPolynomial truncated_geometric(long long a);
    // Trims trailing zero coefficients.
    static IntPolynomial from_coefficients(std::vector<Int> c);

    bool is_zero() const { return coefficients.empty(); }
    long long degree() const;  // -1 for the zero polynomial

    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

// Quotient when b divides a exactly over Z, nullopt otherwise.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

// prod_i (1 + t + ... + t^(a_i - 2)); every exponent must be >= 2.
IntPolynomial milnor_poincare(const std::vector<long long>& exponents);

// Sorted multiset of n exponents whose milnor_poincare equals p, recovered by
// peeling the largest factor via exact trial division from deg(p)+2 downward
// and padding with 2s.  nullopt when p is zero or not such a product.
std::optional<std::vector<long long>> recover_exponents(const IntPolynomial& p, std::size_t n);

}  // namespace pbsurf
