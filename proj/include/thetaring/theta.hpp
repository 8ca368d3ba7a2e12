#pragma once

// The free theta-ring on finitely many generators at a fixed prime p.
// Atoms are x_{g,i}: generator g after i applications of theta. The Adams
// operation psi sends x_{g,i} to x_{g,i}^p + p*x_{g,i+1} and extends as a ring
// homomorphism; theta is derived as (psi(f) - f^p)/p.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thetaring/exact.hpp"
#include <nlohmann/json.hpp>

namespace thetaring {

class resource_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ThetaVar {
    unsigned gen = 0;
    unsigned level = 0;
    auto operator<=>(const ThetaVar&) const = default;
};

// Sorted by variable, all exponents positive; the empty monomial is 1.
using Monomial = std::vector<std::pair<ThetaVar, unsigned>>;

class ThetaPoly {
  public:
    explicit ThetaPoly(unsigned long p) : p_(p) {}

    static ThetaPoly constant(unsigned long p, Rat c);
    static ThetaPoly constant(unsigned long p, const Int& c) {
        return constant(p, Rat(c));
    }
    static ThetaPoly var(unsigned long p, unsigned gen, unsigned level = 0);

    unsigned long prime() const { return p_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;
    std::size_t term_count() const { return terms_.size(); }

    friend ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
    friend bool operator==(const ThetaPoly& a, const ThetaPoly& b);
    ThetaPoly operator-() const;
    ThetaPoly scale(const Rat& s) const;
    ThetaPoly pow(unsigned long e) const;

    // The unique ring-homomorphism extension of x_{g,i} -> x_{g,i}^p + p*x_{g,i+1}.
    ThetaPoly psi() const;
    // (psi(f) - f^p)/p. For integral f the division is exact; a non-integral
    // result there is an internal-consistency failure.
    ThetaPoly theta() const;

    nlohmann::json to_json() const;
    static ThetaPoly from_json(unsigned long p, const nlohmann::json& j);

    // Global guard against combinatorial blowup in symbolic expansions.
    static void set_monomial_cap(std::size_t cap);
    static std::size_t monomial_cap();

  private:
    void insert_term(const Monomial& m, const Rat& c);
    void check_cap() const;

    unsigned long p_;
    std::map<Monomial, Rat> terms_;
};

// Outcome of resolving the additivity correction sign empirically:
// theta(x+y) - theta(x) - theta(y) == sign * sum_i C(p,i)/p x^i y^{p-i}.
struct SignReport {
    bool resolved = false;
    int sign = 0;
};

SignReport verify_additivity(unsigned long p);

// theta(x_1+...+x_m) against the closed form with the given correction sign.
// On failure *difference (when non-null) receives the symbolic mismatch.
bool verify_multsum(unsigned long p, unsigned m, int sign, ThetaPoly* difference = nullptr);

// theta(x^n) == ((x^p + p*theta(x))^n - x^{np})/p.
bool verify_theta_power(unsigned long p, unsigned long n);

// theta(fg) == theta(f)g^p + f^p theta(g) + p theta(f)theta(g).
bool check_product_rule(const ThetaPoly& f, const ThetaPoly& g);

// psi(f) == f^p mod p, coefficientwise.
bool frobenius_lift_holds(const ThetaPoly& f);

}  // namespace thetaring
