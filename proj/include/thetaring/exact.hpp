#pragma once

// Exact unbounded integer/rational arithmetic and the small number-theoretic
// helpers used throughout: binomials, divided binomials C(p,i)/p, and the
// Fermat quotient (c - c^p)/p.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace thetaring {

using Int = mpz_class;
using Rat = mpq_class;

// gmp does not canonicalize mpq on construction from num/den.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Numerator of an integral rational, checked.
inline Int as_integer(const Rat& q) {
    if (!is_integral(q)) throw std::domain_error("as_integer: non-integral rational");
    return q.get_num();
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, long i) {
    if (i < 0 || static_cast<unsigned long>(i) > n)
        throw std::domain_error("binomial: index out of range");
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(i));
    return r;
}

// C(p,i)/p for 1 <= i <= p-1; an integer since p is prime.
inline Int divided_binomial(unsigned long p, long i) {
    if (!is_prime(p)) throw std::domain_error("divided_binomial: p not prime");
    if (i < 1 || static_cast<unsigned long>(i) > p - 1)
        throw std::domain_error("divided_binomial: quotient not integral at i=0 or i=p");
    return binomial(p, i) / Int(p);
}

// theta on an integer constant: (c - c^p)/p, integral by Fermat's little theorem.
inline Int fermat_theta(const Int& c, unsigned long p) {
    if (!is_prime(p)) throw std::domain_error("fermat_theta: p not prime");
    return (c - int_pow(c, p)) / Int(p);
}

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

inline Int parse_int(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("parse_int: malformed decimal string '" + s + "'");
    }
}

}  // namespace thetaring
