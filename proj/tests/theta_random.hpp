#pragma once

// Shared generator for randomized theta-ring property checks.

#include <random>

#include "thetaring/theta.hpp"

namespace thetaring::testing {

// Integral polynomial in up to max_gens generators (theta levels 0 and 1),
// monomial degree at most max_deg, small integer coefficients.
inline ThetaPoly random_theta_poly(std::mt19937& rng, unsigned long p, unsigned max_gens = 3,
                                   unsigned max_terms = 3, unsigned max_deg = 4) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> gens(0, max_gens - 1);
    std::uniform_int_distribution<unsigned> level(0, 1);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> nfactors(0, max_deg);

    ThetaPoly f(p);
    const unsigned terms = nterms(rng);
    for (unsigned t = 0; t < terms; ++t) {
        ThetaPoly term = ThetaPoly::constant(p, Int(coeff(rng)));
        const unsigned factors = nfactors(rng);
        for (unsigned d = 0; d < factors; ++d)
            term = term * ThetaPoly::var(p, gens(rng), level(rng));
        f = f + term;
    }
    return f;
}

}  // namespace thetaring::testing
