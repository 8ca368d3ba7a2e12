#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "thetaring/cyclo.hpp"

using namespace thetaring;

namespace {

CycloElem random_elem(const CycloRingPtr& ring, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::vector<Int> v(ring->degree());
    for (auto& c : v) c = coeff(rng);
    return CycloElem(ring, std::move(v));
}

// Numeric embedding at zeta = exp(2*pi*i/p^k), an implementation-independent
// oracle for the exact arithmetic.
std::complex<double> embed(const CycloElem& a) {
    const double n = static_cast<double>(a.ring()->root_order());
    std::complex<double> zeta = std::polar(1.0, 2.0 * M_PI / n);
    std::complex<double> acc = 0.0;
    std::complex<double> power = 1.0;
    for (const auto& c : a.coeffs()) {
        acc += c.get_d() * power;
        power *= zeta;
    }
    return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomial values") {
    CHECK(cyclotomic_polynomial(3, 1) == IntPoly(std::vector<Int>{1, 1, 1}));
    CHECK(cyclotomic_polynomial(2, 2) == IntPoly(std::vector<Int>{1, 0, 1}));
    CHECK(cyclotomic_polynomial(3, 2) == IntPoly(std::vector<Int>{1, 0, 0, 1, 0, 0, 1}));
    CHECK_THROWS_AS(cyclotomic_polynomial(6, 1), std::domain_error);

    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul})
        for (unsigned k = 1; k <= 3; ++k) {
            IntPoly phi = cyclotomic_polynomial(p, k);
            CHECK(phi.eval(Int(1)) == Int(p));
            CHECK(static_cast<unsigned long>(phi.degree()) ==
                  CycloRing::create(p, k)->degree());
        }
}

TEST_CASE("zeta powers") {
    auto r31 = CycloRing::create(3, 1);
    CHECK(CycloElem::zeta_power(r31, 0).coeffs() == std::vector<Int>{1, 0});
    CHECK(CycloElem::zeta_power(r31, 2).coeffs() == std::vector<Int>{-1, -1});
    auto r22 = CycloRing::create(2, 2);
    CHECK(CycloElem::zeta_power(r22, 1).coeffs() == std::vector<Int>{0, 1});
    // j taken mod p^k, negatives included
    CHECK(CycloElem::zeta_power(r31, 5) == CycloElem::zeta_power(r31, 2));
    CHECK(CycloElem::zeta_power(r31, -1) == CycloElem::zeta_power(r31, 2));
}

TEST_CASE("root of unity relations") {
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        for (unsigned k = 1; k <= 2; ++k) {
            auto ring = CycloRing::create(p, k);
            CycloElem zeta = CycloElem::zeta_power(ring, 1);
            CycloElem one = CycloElem::from_int(ring, 1);
            // Phi_{p^k}(zeta) = 0
            CycloElem phi_at_zeta = CycloElem::zero(ring);
            for (std::size_t i = 0; i < cyclotomic_polynomial(p, k).coeffs().size(); ++i)
                phi_at_zeta = phi_at_zeta +
                              CycloElem::from_int(ring, cyclotomic_polynomial(p, k).coeff(i)) *
                                  zeta.pow(i);
            CHECK(phi_at_zeta.is_zero());
            CHECK(zeta.pow(ring->root_order()) == one);
            if (k > 1) CHECK_FALSE(zeta.pow(ring->root_order() / p) == one);
            else CHECK_FALSE(zeta == one);
            // inverse pair
            CHECK(zeta * zeta.pow(ring->root_order() - 1) == one);
        }
    }
    auto r22 = CycloRing::create(2, 2);
    CycloElem i = CycloElem::zeta_power(r22, 1);
    CHECK(i * i == CycloElem::from_int(r22, -1));
}

TEST_CASE("geometric unit") {
    auto r31 = CycloRing::create(3, 1);
    CHECK(CycloElem::geometric_unit(r31, 1) == CycloElem::from_int(r31, 1));
    CHECK(CycloElem::geometric_unit(r31, 2).coeffs() == std::vector<Int>{1, 1});
    auto r21 = CycloRing::create(2, 1);
    CHECK(CycloElem::geometric_unit(r21, 1) == CycloElem::from_int(r21, 1));
    CHECK_THROWS_AS(CycloElem::geometric_unit(r31, 0), std::domain_error);

    // (1 - zeta) * (1 + zeta + ... + zeta^{j-1}) == 1 - zeta^j, exhaustively
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        for (unsigned k = 1; k <= 2; ++k) {
            auto ring = CycloRing::create(p, k);
            CycloElem one_minus_zeta =
                CycloElem::from_int(ring, 1) - CycloElem::zeta_power(ring, 1);
            for (unsigned long j = 1; j < ring->root_order(); ++j) {
                CycloElem lhs = one_minus_zeta * CycloElem::geometric_unit(ring, j);
                CycloElem rhs = CycloElem::from_int(ring, 1) -
                                CycloElem::zeta_power(ring, static_cast<long long>(j));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("p divisibility") {
    auto r31 = CycloRing::create(3, 1);
    CycloElem zeta_minus_one = CycloElem::zeta_power(r31, 1) - CycloElem::from_int(r31, 1);
    CHECK_FALSE(zeta_minus_one.divisible_by_p());
    CHECK(CycloElem::from_int(r31, 3).divisible_by_p());
    CHECK(CycloElem::from_int(CycloRing::create(5, 1), 5).divisible_by_p());
    CHECK(cyclotomic_polynomial(5, 1).eval(Int(1)) == 5);
    CHECK_THROWS_AS(zeta_minus_one.exact_divide_by_p(), std::domain_error);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto ring = CycloRing::create(5, 2);
        CycloElem a = random_elem(ring, rng);
        CycloElem pa = CycloElem::from_int(ring, 5) * a;
        CHECK(pa.divisible_by_p());
        CHECK(pa.exact_divide_by_p() == a);
    }
}

TEST_CASE("multiplication properties and kernels agree") {
    std::mt19937 rng(11);
    for (unsigned long p : {3ul, 7ul}) {
        for (unsigned k = 1; k <= (p == 7 ? 3u : 2u); ++k) {
            auto ring = CycloRing::create(p, k);
            for (int trial = 0; trial < 20; ++trial) {
                CycloElem a = random_elem(ring, rng);
                CycloElem b = random_elem(ring, rng);
                CycloElem c = random_elem(ring, rng);
                CHECK(a * b == b * a);
                CHECK((a * b) * c == a * (b * c));
                CHECK(detail::convolve_serial(a.coeffs(), b.coeffs()) ==
                      detail::convolve_omp(a.coeffs(), b.coeffs()));
                // numeric oracle
                auto exact = embed(a * b);
                auto approx = embed(a) * embed(b);
                CHECK(std::abs(exact - approx) < 1e-5 * (1.0 + std::abs(approx)));
            }
        }
    }
}

TEST_CASE("ring mismatch and serialization") {
    auto r31 = CycloRing::create(3, 1);
    auto r51 = CycloRing::create(5, 1);
    CHECK_THROWS_AS((void)(CycloElem::from_int(r31, 1) + CycloElem::from_int(r51, 1)),
                    std::domain_error);

    std::mt19937 rng(5);
    CycloElem a = random_elem(CycloRing::create(5, 2), rng);
    CHECK(CycloElem::from_json(a.to_json()) == a);
    CHECK(a.to_json()["p"] == 5);
    CHECK(a.to_json()["k"] == 2);
}
