#include "thetaring/tower.hpp"

#include <omp.h>

#include <random>
#include <stdexcept>

namespace thetaring {

IntPoly p_series(unsigned long p, unsigned iterations) {
    if (!is_prime(p)) throw std::domain_error("p_series: p not prime");
    if (iterations < 1) throw std::domain_error("p_series: need at least one iteration");
    std::vector<Int> base(p + 1);
    for (unsigned long l = 0; l <= p; ++l) base[l] = binomial(p, static_cast<long>(l));
    base[0] = 0;  // (1+x)^p - 1
    IntPoly pseries(std::move(base));
    IntPoly out = pseries;
    for (unsigned m = 1; m < iterations; ++m) out = pseries.compose(out);
    return out;
}

bool TowerElem::is_zero() const {
    return level == 0 ? leaf == 0 : coeffs.empty();
}

namespace {
void trim(unsigned level, std::vector<TowerElem>& v) {
    (void)level;
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}
}  // namespace

TowerPresentation::TowerPresentation(unsigned long p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::domain_error("TowerPresentation: p not prime");
    if (k < 1) throw std::domain_error("TowerPresentation: k must be >= 1");
    // Stage 1: ((1+y)^p - 1)/y = sum_{l=1}^{p} C(p,l) y^{l-1}.
    std::vector<TowerElem> g1;
    for (unsigned long l = 1; l <= p; ++l)
        g1.push_back(TowerElem{0, binomial(p, static_cast<long>(l)), {}});
    stages_.push_back(std::move(g1));
    // Stage m: (1+y)^p - 1 - y_{m-1}.
    for (unsigned m = 2; m <= k; ++m) {
        std::vector<TowerElem> gm;
        gm.push_back(neg(generator(m - 1)));
        for (unsigned long l = 1; l <= p; ++l)
            gm.push_back(from_int(m - 1, binomial(p, static_cast<long>(l))));
        stages_.push_back(std::move(gm));
    }
}

unsigned long TowerPresentation::flattened_degree() const {
    unsigned long d = 1;
    for (unsigned m = 1; m <= k_; ++m) d *= stage_degree(m);
    return d;
}

TowerElem TowerPresentation::zero(unsigned level) const {
    return level == 0 ? TowerElem{0, Int(0), {}} : TowerElem{level, Int(0), {}};
}

TowerElem TowerPresentation::from_int(unsigned level, const Int& c) const {
    if (level == 0) return TowerElem{0, c, {}};
    if (c == 0) return zero(level);
    return TowerElem{level, Int(0), {from_int(level - 1, c)}};
}

TowerElem TowerPresentation::one(unsigned level) const { return from_int(level, Int(1)); }

TowerElem TowerPresentation::generator(unsigned m) const {
    if (m < 1 || m > k_) throw std::domain_error("TowerPresentation: bad stage index");
    return reduce(m, {zero(m - 1), one(m - 1)});
}

TowerElem TowerPresentation::embed(const TowerElem& a) const {
    if (a.is_zero()) return zero(a.level + 1);
    return TowerElem{a.level + 1, Int(0), {a}};
}

TowerElem TowerPresentation::add(const TowerElem& a, const TowerElem& b) const {
    if (a.level != b.level) throw std::domain_error("TowerElem: level mismatch");
    if (a.level == 0) return TowerElem{0, a.leaf + b.leaf, {}};
    std::vector<TowerElem> v(std::max(a.coeffs.size(), b.coeffs.size()), zero(a.level - 1));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) v[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) v[i] = add(v[i], b.coeffs[i]);
    trim(a.level, v);
    return TowerElem{a.level, Int(0), std::move(v)};
}

TowerElem TowerPresentation::neg(const TowerElem& a) const {
    if (a.level == 0) return TowerElem{0, -a.leaf, {}};
    std::vector<TowerElem> v;
    v.reserve(a.coeffs.size());
    for (const auto& c : a.coeffs) v.push_back(neg(c));
    return TowerElem{a.level, Int(0), std::move(v)};
}

TowerElem TowerPresentation::sub(const TowerElem& a, const TowerElem& b) const {
    return add(a, neg(b));
}

TowerElem TowerPresentation::mul(const TowerElem& a, const TowerElem& b) const {
    if (a.level != b.level) throw std::domain_error("TowerElem: level mismatch");
    if (a.level == 0) return TowerElem{0, a.leaf * b.leaf, {}};
    if (a.is_zero() || b.is_zero()) return zero(a.level);
    std::vector<TowerElem> v(a.coeffs.size() + b.coeffs.size() - 1, zero(a.level - 1));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            v[i + j] = add(v[i + j], mul(a.coeffs[i], b.coeffs[j]));
    return reduce(a.level, std::move(v));
}

TowerElem TowerPresentation::pow(const TowerElem& a, unsigned long e) const {
    TowerElem r = one(a.level);
    TowerElem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

TowerElem TowerPresentation::reduce(unsigned level, std::vector<TowerElem> coeffs) const {
    const auto& modulus = stage(level);
    const std::size_t deg = modulus.size() - 1;  // monic
    while (coeffs.size() > deg) {
        const std::size_t t = coeffs.size() - 1;
        TowerElem c = coeffs[t];
        if (!c.is_zero()) {
            for (std::size_t i = 0; i <= deg; ++i)
                coeffs[t - deg + i] = sub(coeffs[t - deg + i], mul(c, modulus[i]));
        }
        coeffs.pop_back();
    }
    trim(level, coeffs);
    return TowerElem{level, Int(0), std::move(coeffs)};
}

TowerElem TowerPresentation::phi(unsigned long a) const {
    TowerElem base = add(one(k_), generator(k_));
    return sub(pow(base, a), one(k_));
}

TowerPresentation build_tower(unsigned long p, unsigned k) { return TowerPresentation(p, k); }

bool verify_cyclotomic_iso(const TowerPresentation& tower) {
    const unsigned long p = tower.prime();
    const unsigned k = tower.level();
    const unsigned long q = int_pow(Int(p), k - 1).get_ui();
    if (tower.flattened_degree() != q * (p - 1)) return false;
    // Phi_{p^k}(1+y) = sum_{i=0}^{p-1} ((1+y)^q)^i must vanish.
    TowerElem z = tower.pow(tower.add(tower.one(k), tower.generator(k)), q);
    TowerElem acc = tower.zero(k);
    for (unsigned long i = 0; i < p; ++i) acc = tower.add(acc, tower.pow(z, i));
    return acc.is_zero();
}

namespace {
std::vector<TowerElem> poly_mul(const TowerPresentation& tower,
                                const std::vector<TowerElem>& a,
                                const std::vector<TowerElem>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<TowerElem> v(a.size() + b.size() - 1, tower.zero(tower.level()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            v[i + j] = tower.add(v[i + j], tower.mul(a[i], b[j]));
    trim(tower.level(), v);
    return v;
}
}  // namespace

DrinfeldDivisibility drinfeld_divisibility(const TowerPresentation& tower) {
    const unsigned long p = tower.prime();
    const unsigned k = tower.level();
    const unsigned long q = int_pow(Int(p), k - 1).get_ui();

    // prod over the p-torsion subgroup p^{k-1)Z/p^k of (x - phi(a)).
    std::vector<TowerElem> divisor{tower.one(k)};
    for (unsigned long a = 0; a < p; ++a) {
        std::vector<TowerElem> linear{tower.neg(tower.phi(a * q)), tower.one(k)};
        divisor = poly_mul(tower, divisor, linear);
    }
    if (divisor.empty() || !(divisor.back() == tower.one(k)))
        throw std::domain_error("drinfeld_divisibility: divisor leading coefficient not a unit");

    // [p](x) with coefficients embedded in A_k.
    const IntPoly pseries = p_series(p, 1);
    std::vector<TowerElem> dividend;
    for (const auto& c : pseries.coeffs()) dividend.push_back(tower.from_int(k, c));

    // Monic long division inside A_k[x].
    std::vector<TowerElem> rem = dividend;
    const std::size_t dd = divisor.size() - 1;
    std::vector<TowerElem> quot(rem.size() > dd ? rem.size() - dd : 1, tower.zero(k));
    while (rem.size() > dd) {
        const std::size_t t = rem.size() - 1;
        TowerElem c = rem[t];
        quot[t - dd] = c;
        if (!c.is_zero())
            for (std::size_t i = 0; i <= dd; ++i)
                rem[t - dd + i] = tower.sub(rem[t - dd + i], tower.mul(c, divisor[i]));
        rem.pop_back();
    }
    trim(tower.level(), rem);
    trim(tower.level(), quot);

    bool rem_zero = rem.empty();
    bool quot_one = quot.size() == 1 && quot[0] == tower.one(k);
    return DrinfeldDivisibility{std::move(quot), std::move(rem), rem_zero, quot_one};
}

bool verify_level_homomorphism(const TowerPresentation& tower) {
    const unsigned long n = int_pow(Int(tower.prime()), tower.level()).get_ui();
    std::vector<TowerElem> phi_table;
    phi_table.reserve(n);
    for (unsigned long a = 0; a < n; ++a) phi_table.push_back(tower.phi(a));

    auto holds = [&](unsigned long a, unsigned long b) {
        TowerElem lhs = phi_table[(a + b) % n];
        TowerElem rhs = tower.add(tower.add(phi_table[a], phi_table[b]),
                                  tower.mul(phi_table[a], phi_table[b]));
        return lhs == rhs;
    };

    bool ok = true;
    if (n <= 128) {
#pragma omp parallel for collapse(2) schedule(dynamic) reduction(&& : ok)
        for (unsigned long a = 0; a < n; ++a)
            for (unsigned long b = 0; b < n; ++b) ok = ok && holds(a, b);
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<unsigned long> dist(0, n - 1);
        for (int trial = 0; trial < 512 && ok; ++trial) ok = holds(dist(rng), dist(rng));
    }
    return ok;
}

namespace {
nlohmann::json elem_to_json(const TowerElem& e) {
    if (e.level == 0) return to_decimal(e.leaf);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : e.coeffs) arr.push_back(elem_to_json(c));
    return arr;
}
}  // namespace

nlohmann::json TowerPresentation::to_json() const {
    nlohmann::json stages = nlohmann::json::array();
    for (unsigned m = 1; m <= k_; ++m) {
        nlohmann::json poly = nlohmann::json::array();
        for (const auto& c : stage(m)) poly.push_back(elem_to_json(c));
        stages.push_back(poly);
    }
    return {{"p", p_}, {"k", k_}, {"stages", stages}};
}

}  // namespace thetaring
