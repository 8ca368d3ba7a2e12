#pragma once

// Univariate polynomials over an exact coefficient ring, constant term first.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree() == -1.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thetaring/exact.hpp"
#include <nlohmann/json.hpp>

namespace thetaring {

// Per-ring hooks consulted by Poly::divmod to invert a leading coefficient.
template <class C>
struct RingTraits {
    static C zero() { return C(0); }
    static C one() { return C(1); }
    static std::optional<C> try_inverse(const C&) { return std::nullopt; }
};

template <>
struct RingTraits<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static std::optional<Int> try_inverse(const Int& c) {
        if (c == 1 || c == -1) return c;  // the only units of Z
        return std::nullopt;
    }
};

template <>
struct RingTraits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static std::optional<Rat> try_inverse(const Rat& c) {
        if (c == 0) return std::nullopt;
        return std::optional<Rat>(Rat(1) / c);
    }
};

template <class C>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(C c) { return Poly(std::vector<C>{std::move(c)}); }
    static Poly monomial(C c, std::size_t deg) {
        std::vector<C> v(deg + 1, RingTraits<C>::zero());
        v[deg] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly identity() { return monomial(RingTraits<C>::one(), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const { return coeffs_; }

    // Coefficient of x^i, zero beyond the degree.
    C coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : RingTraits<C>::zero();
    }
    const C& leading() const {
        if (is_zero()) throw std::domain_error("Poly::leading on zero polynomial");
        return coeffs_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> v(std::max(a.coeffs_.size(), b.coeffs_.size()), RingTraits<C>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<C> v = coeffs_;
        for (auto& c : v) c = RingTraits<C>::zero() - c;
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<C> v(a.coeffs_.size() + b.coeffs_.size() - 1, RingTraits<C>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const C& s, const Poly& a) {
        std::vector<C> v = a.coeffs_;
        for (auto& c : v) c = s * c;
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly pow(unsigned long e) const {
        Poly r = constant(RingTraits<C>::one());
        Poly base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    C eval(const C& x) const {
        C acc = RingTraits<C>::zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * inner + constant(*it);
        return acc;
    }

    // Euclidean division; the divisor's leading coefficient must be a unit.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
        auto inv = RingTraits<C>::try_inverse(b.leading());
        if (!inv) throw std::domain_error("Poly::divmod: leading coefficient is not a unit");
        std::vector<C> rem = a.coeffs_;
        long db = b.degree();
        if (a.degree() < db) return {Poly(), a};
        std::vector<C> quot(a.degree() - db + 1, RingTraits<C>::zero());
        for (long d = a.degree(); d >= db; --d) {
            C q = rem[d] * *inv;
            if (q == RingTraits<C>::zero()) continue;
            quot[d - db] = q;
            for (long i = 0; i <= db; ++i)
                rem[d - db + i] = rem[d - db + i] - q * b.coeffs_[i];
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == RingTraits<C>::zero()) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

// JSON array of decimal-string coefficients, constant term first.
inline nlohmann::json to_json(const IntPoly& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : f.coeffs()) arr.push_back(to_decimal(c));
    return arr;
}

inline IntPoly int_poly_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::domain_error("int_poly_from_json: expected array");
    std::vector<Int> v;
    for (const auto& s : arr) v.push_back(parse_int(s.get<std::string>()));
    return IntPoly(std::move(v));
}

}  // namespace thetaring
