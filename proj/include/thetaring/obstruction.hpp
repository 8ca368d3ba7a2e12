#pragma once

// The root-of-unity obstruction as finite exact computations: a theta
// structure on Z_p[zeta_{p^k}] would need some unit exponent j with
// (zeta^j - zeta^p)/p integral, and no such j exists (except p=2, k=1).

#include <vector>

#include "thetaring/cyclo.hpp"

namespace thetaring {

struct CandidateVerdict {
    unsigned long exponent;  // unit j mod p^k
    bool divisible;
    CycloElem witness;  // zeta^j - zeta^p
};

enum class ObstructionConclusion { NoThetaStructure, ThetaPossible };

struct ObstructionReport {
    unsigned long p;
    unsigned k;
    std::vector<CandidateVerdict> verdicts;
    ObstructionConclusion conclusion;

    nlohmann::json to_json() const;
};

CandidateVerdict check_candidate(unsigned long p, unsigned k, unsigned long j);

// Scans every unit exponent mod p^k. Candidate checks run in parallel; the
// verdict list is ordered by exponent regardless.
ObstructionReport obstruction_report(unsigned long p, unsigned k);

// sum_{i=1}^{p-1} C(p,i)/p sum_{j=1}^{p-1} zeta^{j(p-i)} * gu(j)^i in Z[zeta_p],
// where gu(j) = 1 + zeta + ... + zeta^{j-1}. Evaluates to -1 for every prime.
CycloElem telescoping_sum(unsigned long p);

// The binomial rewriting behind the telescoping step, checked standalone:
// sum_{i=1}^{p-1} C(p,i) zeta^{j(p-i)} gu(j)^i == gu(j+1)^p - 1 - gu(j)^p.
bool rewriting_identity_holds(unsigned long p, unsigned long j);

struct ThetaSumSplit {
    IntPoly t_poly;  // S(t) = sum_{i=1}^{p-1} ((1+pt)^i - 1)/p
    bool divisible;  // every coefficient divisible by p
};

ThetaSumSplit theta_sum_divisibility(unsigned long p);

struct ContradictionReport {
    unsigned long p;
    unsigned k;
    bool reduction_ok;         // zeta_{p^k}^{p^{k-1}} is a primitive p-th root
    int additivity_sign;       // as resolved by verify_additivity
    CycloElem telescoping;     // output of telescoping_sum(p)
    IntPoly theta_sum_poly;    // output of theta_sum_divisibility(p)
    bool theta_sum_divisible;
    bool established;  // all ingredients line up: 0 = p*(unit side) -/+ 1

    nlohmann::json to_json() const;
};

ContradictionReport contradiction_report(unsigned long p, unsigned k);

struct QuarticSearchResult {
    unsigned precision;
    unsigned long candidates_checked;
    bool solution_found;
    std::string parity_witness;

    nlohmann::json to_json() const;
};

// Exhaustive search over t in (Z/2^N)[i] for -1 = -2(t - t^2); none exists.
QuarticSearchResult p2_quartic_search(unsigned precision);

}  // namespace thetaring
