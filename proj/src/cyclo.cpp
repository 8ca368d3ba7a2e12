#include "thetaring/cyclo.hpp"

#include <omp.h>

#include <stdexcept>

namespace thetaring {

IntPoly cyclotomic_polynomial(unsigned long p, unsigned k) {
    if (!is_prime(p)) throw std::domain_error("cyclotomic_polynomial: p not prime");
    if (k < 1) throw std::domain_error("cyclotomic_polynomial: k must be >= 1");
    unsigned long q = int_pow(Int(p), k - 1).get_ui();
    std::vector<Int> v(q * (p - 1) + 1, Int(0));
    for (unsigned long i = 0; i < p; ++i) v[i * q] = 1;
    return IntPoly(std::move(v));
}

CycloRing::CycloRing(unsigned long p, unsigned k)
    : p_(p), k_(k), modulus_(cyclotomic_polynomial(p, k)) {
    degree_ = static_cast<unsigned long>(modulus_.degree());
    root_order_ = int_pow(Int(p), k).get_ui();
}

CycloRingPtr CycloRing::create(unsigned long p, unsigned k) {
    return CycloRingPtr(new CycloRing(p, k));
}

namespace detail {

std::vector<Int> convolve_serial(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Int> convolve_omp(const std::vector<Int>& a, const std::vector<Int>& b) {
    const long n = static_cast<long>(a.size() + b.size() - 1);
    std::vector<Int> out(n);
#pragma omp parallel for schedule(static)
    for (long t = 0; t < n; ++t) {
        Int acc = 0;
        const long lo = std::max<long>(0, t - static_cast<long>(b.size()) + 1);
        const long hi = std::min<long>(t, static_cast<long>(a.size()) - 1);
        for (long i = lo; i <= hi; ++i) acc += a[i] * b[t - i];
        out[t] = std::move(acc);
    }
    return out;
}

std::vector<Int> reduce_mod_cyclotomic(const CycloRing& ring, std::vector<Int> v) {
    const unsigned long d = ring.degree();
    const unsigned long q = d / (ring.prime() - 1);  // p^{k-1}
    // x^d = -(1 + x^q + ... + x^{(p-2)q}), applied top-down.
    for (std::size_t t = v.size(); t-- > d;) {
        if (v[t] == 0) continue;
        for (unsigned long i = 0; i + 1 < ring.prime(); ++i) v[t - d + i * q] -= v[t];
        v[t] = 0;
    }
    v.resize(d, Int(0));
    return v;
}

}  // namespace detail

CycloElem::CycloElem(CycloRingPtr ring, std::vector<Int> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_->degree())
        coeffs_ = detail::reduce_mod_cyclotomic(*ring_, std::move(coeffs_));
}

CycloElem CycloElem::zero(CycloRingPtr ring) {
    std::vector<Int> v(ring->degree(), Int(0));
    return CycloElem(std::move(ring), std::move(v));
}

CycloElem CycloElem::from_int(CycloRingPtr ring, const Int& c) {
    std::vector<Int> v(ring->degree(), Int(0));
    v[0] = c;
    return CycloElem(std::move(ring), std::move(v));
}

CycloElem CycloElem::zeta_power(CycloRingPtr ring, long long j) {
    const long long n = static_cast<long long>(ring->root_order());
    long long e = ((j % n) + n) % n;
    std::vector<Int> v(static_cast<std::size_t>(e) + 1, Int(0));
    v[static_cast<std::size_t>(e)] = 1;
    return CycloElem(std::move(ring), std::move(v));
}

CycloElem CycloElem::geometric_unit(CycloRingPtr ring, unsigned long j) {
    if (j < 1) throw std::domain_error("geometric_unit: j must be >= 1");
    std::vector<Int> v(j, Int(1));
    return CycloElem(std::move(ring), std::move(v));
}

bool CycloElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

static void check_same_ring(const CycloElem& a, const CycloElem& b) {
    const auto& ra = *a.ring();
    const auto& rb = *b.ring();
    if (ra.prime() != rb.prime() || ra.level() != rb.level())
        throw std::domain_error("CycloElem: ring mismatch");
}

CycloElem CycloElem::operator-() const {
    std::vector<Int> v = coeffs_;
    for (auto& c : v) c = -c;
    return CycloElem(ring_, std::move(v));
}

CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    check_same_ring(a, b);
    std::vector<Int> v = a.coeffs_;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.coeffs_[i];
    return CycloElem(a.ring_, std::move(v));
}

CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
    check_same_ring(a, b);
    // The OpenMP kernel pays off only once the ring degree is nontrivial.
    auto conv = (a.ring_->degree() >= 64)
                    ? detail::convolve_omp(a.coeffs_, b.coeffs_)
                    : detail::convolve_serial(a.coeffs_, b.coeffs_);
    return CycloElem(a.ring_, detail::reduce_mod_cyclotomic(*a.ring_, std::move(conv)));
}

bool operator==(const CycloElem& a, const CycloElem& b) {
    check_same_ring(a, b);
    return a.coeffs_ == b.coeffs_;
}

CycloElem CycloElem::pow(unsigned long e) const {
    CycloElem r = from_int(ring_, 1);
    CycloElem base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool CycloElem::divisible_by_p() const {
    const Int p(ring_->prime());
    for (const auto& c : coeffs_)
        if (c % p != 0) return false;
    return true;
}

CycloElem CycloElem::exact_divide_by_p() const {
    if (!divisible_by_p())
        throw std::domain_error("exact_divide_by_p: element not divisible by p");
    const Int p(ring_->prime());
    std::vector<Int> v = coeffs_;
    for (auto& c : v) c /= p;
    return CycloElem(ring_, std::move(v));
}

nlohmann::json CycloElem::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : coeffs_) arr.push_back(to_decimal(c));
    return nlohmann::json{{"p", ring_->prime()}, {"k", ring_->level()}, {"coeffs", arr}};
}

CycloElem CycloElem::from_json(const nlohmann::json& j) {
    auto ring = CycloRing::create(j.at("p").get<unsigned long>(), j.at("k").get<unsigned>());
    std::vector<Int> v;
    for (const auto& s : j.at("coeffs")) v.push_back(parse_int(s.get<std::string>()));
    if (v.size() != ring->degree())
        throw std::domain_error("CycloElem::from_json: coefficient count != ring degree");
    return CycloElem(std::move(ring), std::move(v));
}

}  // namespace thetaring
