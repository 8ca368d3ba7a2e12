#include "thetaring/obstruction.hpp"

#include <omp.h>

#include <numeric>

#include "thetaring/padic.hpp"
#include "thetaring/theta.hpp"

namespace thetaring {

CandidateVerdict check_candidate(unsigned long p, unsigned k, unsigned long j) {
    auto ring = CycloRing::create(p, k);
    if (j == 0 || j >= ring->root_order() || j % p == 0)
        throw std::domain_error("check_candidate: exponent is not a unit mod p^k");
    CycloElem witness = CycloElem::zeta_power(ring, static_cast<long long>(j)) -
                        CycloElem::zeta_power(ring, static_cast<long long>(p));
    return CandidateVerdict{j, witness.divisible_by_p(), witness};
}

ObstructionReport obstruction_report(unsigned long p, unsigned k) {
    if (!is_prime(p)) throw std::domain_error("obstruction_report: p not prime");
    auto ring = CycloRing::create(p, k);
    std::vector<unsigned long> units;
    for (unsigned long j = 1; j < ring->root_order(); ++j)
        if (j % p != 0) units.push_back(j);

    std::vector<CandidateVerdict> verdicts;
    verdicts.reserve(units.size());
    for (const auto j : units)
        verdicts.push_back(CandidateVerdict{j, false, CycloElem::zero(ring)});
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(units.size()); ++idx)
        verdicts[idx] = check_candidate(p, k, units[idx]);

    bool any_divisible = false;
    for (const auto& v : verdicts) any_divisible |= v.divisible;
    return ObstructionReport{p, k, std::move(verdicts),
                             any_divisible ? ObstructionConclusion::ThetaPossible
                                           : ObstructionConclusion::NoThetaStructure};
}

CycloElem telescoping_sum(unsigned long p) {
    if (!is_prime(p)) throw std::domain_error("telescoping_sum: p not prime");
    auto ring = CycloRing::create(p, 1);
    CycloElem total = CycloElem::zero(ring);
    for (unsigned long i = 1; i < p; ++i) {
        CycloElem inner = CycloElem::zero(ring);
        for (unsigned long j = 1; j < p; ++j) {
            CycloElem term = CycloElem::zeta_power(ring, static_cast<long long>(j * (p - i))) *
                             CycloElem::geometric_unit(ring, j).pow(i);
            inner = inner + term;
        }
        total = total + CycloElem::from_int(ring, divided_binomial(p, static_cast<long>(i))) * inner;
    }
    return total;
}

bool rewriting_identity_holds(unsigned long p, unsigned long j) {
    if (j < 1 || j > p - 1)
        throw std::domain_error("rewriting_identity_holds: need 1 <= j <= p-1");
    auto ring = CycloRing::create(p, 1);
    CycloElem lhs = CycloElem::zero(ring);
    for (unsigned long i = 1; i < p; ++i) {
        CycloElem term = CycloElem::zeta_power(ring, static_cast<long long>(j * (p - i))) *
                         CycloElem::geometric_unit(ring, j).pow(i);
        lhs = lhs + CycloElem::from_int(ring, binomial(p, static_cast<long>(i))) * term;
    }
    CycloElem rhs = CycloElem::geometric_unit(ring, j + 1).pow(p) -
                    CycloElem::from_int(ring, 1) -
                    CycloElem::geometric_unit(ring, j).pow(p);
    return lhs == rhs;
}

ThetaSumSplit theta_sum_divisibility(unsigned long p) {
    if (!is_prime(p)) throw std::domain_error("theta_sum_divisibility: p not prime");
    // (1+pt)^i - 1 summed over i, then the exact division by p.
    RatPoly one_plus_pt(std::vector<Rat>{Rat(1), Rat(Int(p))});
    RatPoly total;
    for (unsigned long i = 1; i < p; ++i)
        total = total + (one_plus_pt.pow(i) - RatPoly::constant(Rat(1)));
    std::vector<Int> coeffs;
    for (const auto& c : total.coeffs()) {
        Rat divided = c / Rat(Int(p));
        if (!is_integral(divided))
            throw std::logic_error("theta_sum_divisibility: non-integral coefficient");
        coeffs.push_back(divided.get_num());
    }
    IntPoly s_poly(std::move(coeffs));
    bool divisible = true;
    for (const auto& c : s_poly.coeffs()) divisible &= (c % Int(p) == 0);
    return ThetaSumSplit{std::move(s_poly), divisible};
}

ContradictionReport contradiction_report(unsigned long p, unsigned k) {
    if (!is_prime(p) || p == 2)
        throw std::domain_error("contradiction_report: p must be an odd prime");
    if (k < 1) throw std::domain_error("contradiction_report: k must be >= 1");

    // For k > 1 the argument descends to the primitive p-th root
    // zeta_{p^k}^{p^{k-1}}; check that reduction before using it.
    bool reduction_ok = true;
    if (k > 1) {
        auto big = CycloRing::create(p, k);
        unsigned long shift = int_pow(Int(p), k - 1).get_ui();
        CycloElem zp = CycloElem::zeta_power(big, static_cast<long long>(shift));
        CycloElem phi_val = CycloElem::zero(big);
        for (unsigned long i = 0; i < p; ++i) phi_val = phi_val + zp.pow(i);
        reduction_ok = phi_val.is_zero() && !(zp == CycloElem::from_int(big, 1));
    }

    SignReport sign = verify_additivity(p);
    CycloElem tele = telescoping_sum(p);
    ThetaSumSplit split = theta_sum_divisibility(p);

    auto ring = tele.ring();
    bool tele_is_minus_one = (tele == CycloElem::from_int(ring, -1));
    bool established = reduction_ok && sign.resolved && tele_is_minus_one && split.divisible;
    return ContradictionReport{p,    k,          reduction_ok,   sign.sign,
                               tele, split.t_poly, split.divisible, established};
}

QuarticSearchResult p2_quartic_search(unsigned precision) {
    if (precision < 1 || precision > 8)
        throw std::domain_error("p2_quartic_search: precision must be in [1, 8]");
    const Int modulus = int_pow(Int(2), precision);
    const unsigned long bound = modulus.get_ui();
    const PadicResidue minus_one(2, precision, Int(-1));
    const PadicResidue zero(2, precision, Int(0));
    unsigned long checked = 0;
    bool found = false;
    for (unsigned long a = 0; a < bound && !found; ++a) {
        for (unsigned long b = 0; b < bound; ++b) {
            ++checked;
            // t = a + bi; -2(t - t^2) componentwise in (Z/2^N)[i]
            PadicResidue re(2, precision, Int(a) - (Int(a) * a - Int(b) * b));
            PadicResidue im(2, precision, Int(b) - 2 * Int(a) * b);
            PadicResidue scale(2, precision, Int(-2));
            if (scale * re == minus_one && scale * im == zero) {
                found = true;
                break;
            }
        }
    }
    std::string witness =
        found ? "" : "right side -2(t - t^2) is even; left side -1 is odd mod 2^N";
    return QuarticSearchResult{precision, checked, found, witness};
}

nlohmann::json ObstructionReport::to_json() const {
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& v : verdicts)
        cands.push_back({{"j", v.exponent},
                         {"divisible", v.divisible},
                         {"witness", v.witness.to_json()}});
    return {{"p", p},
            {"k", k},
            {"candidates", cands},
            {"conclusion", conclusion == ObstructionConclusion::NoThetaStructure
                               ? "NoThetaStructure"
                               : "ThetaPossible"}};
}

nlohmann::json ContradictionReport::to_json() const {
    return {{"p", p},
            {"k", k},
            {"reduction_ok", reduction_ok},
            {"additivity_sign", additivity_sign},
            {"telescoping_sum", telescoping.to_json()},
            {"theta_sum_poly", thetaring::to_json(theta_sum_poly)},
            {"theta_sum_divisible", theta_sum_divisible},
            {"established", established}};
}

nlohmann::json QuarticSearchResult::to_json() const {
    return {{"precision", precision},
            {"candidates_checked", candidates_checked},
            {"solution_found", solution_found},
            {"parity_witness", parity_witness}};
}

}  // namespace thetaring
