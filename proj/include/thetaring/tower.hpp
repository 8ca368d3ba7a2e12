#pragma once

// Height-1 Lubin-Tate tower for the multiplicative formal group
// F(x,y) = x + y + xy, [p](x) = (1+x)^p - 1. Stage 1 adjoins a root of the
// divided p-series ((1+y)^p - 1)/y; stage m >= 2 adjoins y with
// (1+y)^p - 1 = y_{m-1}. Elements are nested polynomial residues: a stage-m
// element is a coefficient vector over stage m-1, reduced by the stage modulus.

#include <vector>

#include "thetaring/poly.hpp"

namespace thetaring {

// [p^m](x) = (1+x)^{p^m} - 1, computed by m-fold composition of [p].
IntPoly p_series(unsigned long p, unsigned iterations);

struct TowerElem {
    unsigned level = 0;
    Int leaf;                       // level 0 value
    std::vector<TowerElem> coeffs;  // level >= 1: constant first, trimmed

    bool is_zero() const;
    friend bool operator==(const TowerElem& a, const TowerElem& b) = default;
};

class TowerPresentation {
  public:
    TowerPresentation(unsigned long p, unsigned k);

    unsigned long prime() const { return p_; }
    unsigned level() const { return k_; }
    // Stage m modulus as its coefficient vector over stage m-1, monic.
    const std::vector<TowerElem>& stage(unsigned m) const { return stages_.at(m - 1); }
    unsigned long stage_degree(unsigned m) const { return stages_.at(m - 1).size() - 1; }
    unsigned long flattened_degree() const;

    TowerElem zero(unsigned level) const;
    TowerElem one(unsigned level) const;
    TowerElem from_int(unsigned level, const Int& c) const;
    // Canonical representative of the stage-m generator y_m.
    TowerElem generator(unsigned m) const;
    TowerElem embed(const TowerElem& a) const;  // level l -> level l+1

    TowerElem add(const TowerElem& a, const TowerElem& b) const;
    TowerElem sub(const TowerElem& a, const TowerElem& b) const;
    TowerElem neg(const TowerElem& a) const;
    TowerElem mul(const TowerElem& a, const TowerElem& b) const;
    TowerElem pow(const TowerElem& a, unsigned long e) const;

    // phi(a) = (1+y)^a - 1 at the top level, the universal level structure.
    TowerElem phi(unsigned long a) const;

    nlohmann::json to_json() const;

  private:
    TowerElem reduce(unsigned level, std::vector<TowerElem> coeffs) const;

    unsigned long p_;
    unsigned k_;
    std::vector<std::vector<TowerElem>> stages_;
};

TowerPresentation build_tower(unsigned long p, unsigned k);

// Phi_{p^k}(1+y) == 0 through the stage reductions, plus the degree count
// prod(stage degrees) == p^{k-1}(p-1).
bool verify_cyclotomic_iso(const TowerPresentation& tower);

struct DrinfeldDivisibility {
    std::vector<TowerElem> quotient;   // poly over A_k, constant first
    std::vector<TowerElem> remainder;  // empty means zero
    bool remainder_zero;
    bool quotient_is_one;
};

// Divides [p](x) by prod_{a in p^{k-1}Z/p^k} (x - phi(a)) inside A_k[x].
DrinfeldDivisibility drinfeld_divisibility(const TowerPresentation& tower);

// phi(a+b) == phi(a) + phi(b) + phi(a)phi(b) over Z/p^k; exhaustive for
// p^k <= 128, a fixed-seed random sample of pairs above that.
bool verify_level_homomorphism(const TowerPresentation& tower);

}  // namespace thetaring
