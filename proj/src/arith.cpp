#include "pbsurf/arith.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace pbsurf {

using boost::multiprecision::gcd;

Fraction::Fraction(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (num <= 0 || den <= 0) throw std::invalid_argument("Fraction: value must be positive");
    Int g = gcd(num, den);
    num /= g;
    den /= g;
}

Int totient(const Int& n) {
    if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
    Int result = n;
    Int m = n;
    for (Int d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

HJChain hj_expand(const Int& n, const Int& m) {
    if (!(m > 0 && m < n)) throw std::invalid_argument("hj_expand: need 0 < m < n");
    if (gcd(n, m) != 1) throw std::invalid_argument("hj_expand: need gcd(n, m) = 1");
    HJChain chain;
    Int num = n, rem = m;
    while (rem > 0) {
        Int a = (num + rem - 1) / rem;  // ceil(num/rem), >= 2 since num > rem
        chain.push_back(a);
        Int next = a * rem - num;  // in [0, rem)
        num = rem;
        rem = next;
    }
    if (num != 1) throw internal_error("hj_expand: chain did not terminate at 1");
    return chain;
}

Fraction hj_evaluate(const HJChain& chain) {
    if (chain.empty()) throw std::invalid_argument("hj_evaluate: empty chain");
    for (const Int& a : chain)
        if (a < 2) throw std::invalid_argument("hj_evaluate: entries must be >= 2");
    Int num = chain.back(), den = 1;
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
        // a - den/num = (a*num - den)/num
        Int next = *it * num - den;
        den = num;
        num = next;
        if (num <= 0) throw internal_error("hj_evaluate: nonpositive partial denominator");
    }
    return Fraction(num, den);
}

IntPolynomial IntPolynomial::zero() { return IntPolynomial{}; }

IntPolynomial IntPolynomial::one() { return IntPolynomial{{Int(1)}}; }

IntPolynomial IntPolynomial::truncated_geometric(long long a) {
    if (a < 2) throw std::invalid_argument("truncated_geometric: exponent must be >= 2");
    return IntPolynomial{std::vector<Int>(static_cast<std::size_t>(a - 1), Int(1))};
}

IntPolynomial IntPolynomial::from_coefficients(std::vector<Int> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return IntPolynomial{std::move(c)};
}

long long IntPolynomial::degree() const {
    return static_cast<long long>(coefficients.size()) - 1;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
    std::vector<Int> c(a.coefficients.size() + b.coefficients.size() - 1);
    for (std::size_t i = 0; i < a.coefficients.size(); ++i)
        for (std::size_t j = 0; j < b.coefficients.size(); ++j)
            c[i + j] += a.coefficients[i] * b.coefficients[j];
    return IntPolynomial::from_coefficients(std::move(c));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (a.is_zero()) return IntPolynomial::zero();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem = a.coefficients;
    const std::vector<Int>& d = b.coefficients;
    const Int& lead = d.back();
    std::vector<Int> quot(rem.size() - d.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Int q = top / lead;
        quot[k] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return IntPolynomial::from_coefficients(std::move(quot));
}

IntPolynomial milnor_poincare(const std::vector<long long>& exponents) {
    IntPolynomial p = IntPolynomial::one();
    for (long long a : exponents) p = p * IntPolynomial::truncated_geometric(a);
    return p;
}

std::optional<std::vector<long long>> recover_exponents(const IntPolynomial& p, std::size_t n) {
    if (p.is_zero()) return std::nullopt;
    IntPolynomial cur = p;
    std::vector<long long> exps;
    while (cur.degree() > 0) {
        bool peeled = false;
        // The first divisor found from the top is the largest exponent: a
        // factor for exponent a contains the (a-1)-st cyclotomic polynomial,
        // which divides the product only if a-1 divides some a_i - 1.
        for (long long a = cur.degree() + 2; a >= 3; --a) {
            auto q = divide_exact(cur, IntPolynomial::truncated_geometric(a));
            if (q) {
                cur = *q;
                exps.push_back(a);
                peeled = true;
                break;
            }
        }
        if (!peeled) return std::nullopt;
    }
    if (!(cur == IntPolynomial::one())) return std::nullopt;
    if (exps.size() > n) return std::nullopt;
    exps.resize(n, 2);
    std::sort(exps.begin(), exps.end());
    return exps;
}

}  // namespace pbsurf
