#pragma once

// Truncated p-adic residues: integers mod p^N with (p, N) carried alongside.
// Arithmetic between mismatched contexts is an error, never a coercion.

#include <stdexcept>

#include "thetaring/exact.hpp"

namespace thetaring {

class PadicResidue {
  public:
    PadicResidue(unsigned long p, unsigned precision, const Int& value)
        : p_(p), precision_(precision), modulus_(int_pow(Int(p), precision)) {
        if (p < 2) throw std::domain_error("PadicResidue: p must be >= 2");
        if (precision < 1) throw std::domain_error("PadicResidue: precision must be >= 1");
        residue_ = value % modulus_;
        if (residue_ < 0) residue_ += modulus_;
    }

    unsigned long prime() const { return p_; }
    unsigned precision() const { return precision_; }
    const Int& modulus() const { return modulus_; }
    const Int& residue() const { return residue_; }

    friend PadicResidue operator+(const PadicResidue& a, const PadicResidue& b) {
        a.check_context(b);
        return PadicResidue(a.p_, a.precision_, a.residue_ + b.residue_);
    }
    friend PadicResidue operator-(const PadicResidue& a, const PadicResidue& b) {
        a.check_context(b);
        return PadicResidue(a.p_, a.precision_, a.residue_ - b.residue_);
    }
    friend PadicResidue operator*(const PadicResidue& a, const PadicResidue& b) {
        a.check_context(b);
        return PadicResidue(a.p_, a.precision_, a.residue_ * b.residue_);
    }
    friend bool operator==(const PadicResidue& a, const PadicResidue& b) {
        a.check_context(b);
        return a.residue_ == b.residue_;
    }

  private:
    void check_context(const PadicResidue& other) const {
        if (p_ != other.p_ || precision_ != other.precision_)
            throw std::domain_error("PadicResidue: mismatched (p, N) contexts");
    }

    unsigned long p_;
    unsigned precision_;
    Int modulus_;
    Int residue_;
};

}  // namespace thetaring
