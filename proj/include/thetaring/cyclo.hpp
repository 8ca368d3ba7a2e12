#pragma once

// Exact arithmetic in Z[x]/Phi_{p^k}(x) on the power basis {1, z, ..., z^{d-1}},
// d = p^{k-1}(p-1). Divisibility by p is coefficientwise on this basis.

#include <memory>
#include <vector>

#include "thetaring/poly.hpp"

namespace thetaring {

// Phi_{p^k}(x) = Phi_p(x^{p^{k-1}}) = sum_{i=0}^{p-1} x^{i p^{k-1}}.
IntPoly cyclotomic_polynomial(unsigned long p, unsigned k);

class CycloRing {
  public:
    static std::shared_ptr<const CycloRing> create(unsigned long p, unsigned k);

    unsigned long prime() const { return p_; }
    unsigned level() const { return k_; }
    unsigned long degree() const { return degree_; }
    unsigned long root_order() const { return root_order_; }  // p^k
    const IntPoly& modulus() const { return modulus_; }

  private:
    CycloRing(unsigned long p, unsigned k);

    unsigned long p_;
    unsigned k_;
    unsigned long degree_;
    unsigned long root_order_;
    IntPoly modulus_;
};

using CycloRingPtr = std::shared_ptr<const CycloRing>;

class CycloElem {
  public:
    CycloElem(CycloRingPtr ring, std::vector<Int> coeffs);

    static CycloElem zero(CycloRingPtr ring);
    static CycloElem from_int(CycloRingPtr ring, const Int& c);
    // Canonical representative of z^j; j is taken mod p^k and may be negative.
    static CycloElem zeta_power(CycloRingPtr ring, long long j);
    // sum_{l=0}^{j-1} z^l, the algebraic-integer value of (1 - z^j)/(1 - z).
    static CycloElem geometric_unit(CycloRingPtr ring, unsigned long j);

    const CycloRingPtr& ring() const { return ring_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    CycloElem operator-() const;
    friend CycloElem operator+(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b);
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
    friend bool operator==(const CycloElem& a, const CycloElem& b);
    CycloElem pow(unsigned long e) const;

    bool divisible_by_p() const;
    CycloElem exact_divide_by_p() const;

    nlohmann::json to_json() const;
    static CycloElem from_json(const nlohmann::json& j);

  private:
    CycloRingPtr ring_;
    std::vector<Int> coeffs_;  // length exactly ring_->degree()
};

namespace detail {
// Plain schoolbook convolution, the reference kernel.
std::vector<Int> convolve_serial(const std::vector<Int>& a, const std::vector<Int>& b);
// OpenMP kernel, parallel over output coefficients. Must agree with the
// serial reference exactly; the test suite compares them.
std::vector<Int> convolve_omp(const std::vector<Int>& a, const std::vector<Int>& b);
// Reduce a coefficient vector (any length) mod Phi_{p^k}, returning length d.
std::vector<Int> reduce_mod_cyclotomic(const CycloRing& ring, std::vector<Int> v);
}  // namespace detail

}  // namespace thetaring
