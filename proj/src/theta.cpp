#include "thetaring/theta.hpp"

#include <atomic>

namespace thetaring {

namespace {
std::atomic<std::size_t> g_monomial_cap{1000000};

Monomial mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else if (b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

void check_same_prime(const ThetaPoly& a, const ThetaPoly& b) {
    if (a.prime() != b.prime())
        throw std::domain_error("ThetaPoly: mixed primes in one expression");
}
}  // namespace

void ThetaPoly::set_monomial_cap(std::size_t cap) { g_monomial_cap = cap; }
std::size_t ThetaPoly::monomial_cap() { return g_monomial_cap; }

void ThetaPoly::check_cap() const {
    if (terms_.size() > g_monomial_cap)
        throw resource_error("ThetaPoly: monomial count exceeds cap");
}

void ThetaPoly::insert_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ThetaPoly ThetaPoly::constant(unsigned long p, Rat c) {
    ThetaPoly f(p);
    f.insert_term({}, c);
    return f;
}

ThetaPoly ThetaPoly::var(unsigned long p, unsigned gen, unsigned level) {
    ThetaPoly f(p);
    f.insert_term({{ThetaVar{gen, level}, 1}}, Rat(1));
    return f;
}

bool ThetaPoly::is_integral() const {
    for (const auto& [m, c] : terms_)
        if (!thetaring::is_integral(c)) return false;
    return true;
}

ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b) {
    check_same_prime(a, b);
    ThetaPoly out = a;
    for (const auto& [m, c] : b.terms_) out.insert_term(m, c);
    out.check_cap();
    return out;
}

ThetaPoly ThetaPoly::operator-() const { return scale(Rat(-1)); }

ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b) { return a + (-b); }

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
    check_same_prime(a, b);
    ThetaPoly out(a.p_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.insert_term(mul_monomials(ma, mb), ca * cb);
    out.check_cap();
    return out;
}

bool operator==(const ThetaPoly& a, const ThetaPoly& b) {
    check_same_prime(a, b);
    return a.terms_ == b.terms_;
}

ThetaPoly ThetaPoly::scale(const Rat& s) const {
    ThetaPoly out(p_);
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, s * c);
    return out;
}

ThetaPoly ThetaPoly::pow(unsigned long e) const {
    ThetaPoly r = constant(p_, Rat(1));
    ThetaPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

ThetaPoly ThetaPoly::psi() const {
    ThetaPoly out(p_);
    for (const auto& [m, c] : terms_) {
        ThetaPoly term = constant(p_, c);
        for (const auto& [v, e] : m) {
            // psi(x_{g,i}) = x_{g,i}^p + p * x_{g,i+1}
            ThetaPoly image = var(p_, v.gen, v.level).pow(p_) +
                              var(p_, v.gen, v.level + 1).scale(Rat(Int(p_)));
            term = term * image.pow(e);
        }
        out = out + term;
    }
    return out;
}

ThetaPoly ThetaPoly::theta() const {
    ThetaPoly diff = psi() - pow(p_);
    ThetaPoly out = diff.scale(make_rat(Int(1), Int(p_)));
    if (is_integral() && !out.is_integral())
        throw std::logic_error("theta: non-exact division by p on integral input");
    return out;
}

nlohmann::json ThetaPoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [v, e] : m) mono.push_back({v.gen, v.level, e});
        arr.push_back({{"monomial", mono}, {"coeff", c.get_str()}});
    }
    return arr;
}

ThetaPoly ThetaPoly::from_json(unsigned long p, const nlohmann::json& j) {
    ThetaPoly out(p);
    for (const auto& term : j) {
        Monomial m;
        for (const auto& v : term.at("monomial"))
            m.emplace_back(ThetaVar{v.at(0).get<unsigned>(), v.at(1).get<unsigned>()},
                           v.at(2).get<unsigned>());
        Rat c(term.at("coeff").get<std::string>());
        c.canonicalize();
        out.insert_term(m, c);
    }
    return out;
}

SignReport verify_additivity(unsigned long p) {
    if (!is_prime(p)) throw std::domain_error("verify_additivity: p not prime");
    ThetaPoly x = ThetaPoly::var(p, 0);
    ThetaPoly y = ThetaPoly::var(p, 1);
    ThetaPoly delta = (x + y).theta() - x.theta() - y.theta();
    ThetaPoly correction(p);
    for (unsigned long i = 1; i < p; ++i) {
        ThetaPoly term = x.pow(i) * y.pow(p - i);
        correction = correction + term.scale(Rat(divided_binomial(p, static_cast<long>(i))));
    }
    SignReport report;
    for (int sign : {1, -1}) {
        if (delta == correction.scale(Rat(sign))) {
            report.resolved = true;
            report.sign = sign;
            return report;
        }
    }
    return report;
}

bool verify_multsum(unsigned long p, unsigned m, int sign, ThetaPoly* difference) {
    if (!is_prime(p)) throw std::domain_error("verify_multsum: p not prime");
    if (m < 2) throw std::domain_error("verify_multsum: need at least two summands");
    ThetaPoly total(p);
    for (unsigned g = 0; g < m; ++g) total = total + ThetaPoly::var(p, g);
    ThetaPoly lhs = total.theta();

    ThetaPoly rhs(p);
    for (unsigned g = 0; g < m; ++g) rhs = rhs + ThetaPoly::var(p, g, 1);
    ThetaPoly correction(p);
    for (unsigned long i = 1; i < p; ++i) {
        ThetaPoly inner(p);
        for (unsigned j = 1; j < m; ++j) {
            ThetaPoly partial(p);
            for (unsigned l = 0; l < j; ++l) partial = partial + ThetaPoly::var(p, l);
            inner = inner + ThetaPoly::var(p, j).pow(p - i) * partial.pow(i);
        }
        correction = correction + inner.scale(Rat(divided_binomial(p, static_cast<long>(i))));
    }
    rhs = rhs + correction.scale(Rat(sign));

    if (lhs == rhs) return true;
    if (difference) *difference = lhs - rhs;
    return false;
}

bool verify_theta_power(unsigned long p, unsigned long n) {
    if (!is_prime(p)) throw std::domain_error("verify_theta_power: p not prime");
    if (n < 1) throw std::domain_error("verify_theta_power: n must be >= 1");
    ThetaPoly x = ThetaPoly::var(p, 0);
    ThetaPoly lhs = x.pow(n).theta();
    ThetaPoly base = x.pow(p) + x.theta().scale(Rat(Int(p)));
    ThetaPoly rhs = (base.pow(n) - x.pow(n * p)).scale(make_rat(Int(1), Int(p)));
    return lhs == rhs;
}

bool check_product_rule(const ThetaPoly& f, const ThetaPoly& g) {
    const unsigned long p = f.prime();
    ThetaPoly lhs = (f * g).theta();
    ThetaPoly rhs = f.theta() * g.pow(p) + f.pow(p) * g.theta() +
                    (f.theta() * g.theta()).scale(Rat(Int(p)));
    return lhs == rhs;
}

bool frobenius_lift_holds(const ThetaPoly& f) {
    ThetaPoly diff = f.psi() - f.pow(f.prime());
    const Int p(f.prime());
    for (const auto& [m, c] : diff.terms()) {
        if (!is_integral(c)) return false;
        if (c.get_num() % p != 0) return false;
    }
    return true;
}

}  // namespace thetaring
