#include "vw/rational_poly.hpp"

#include <stdexcept>

namespace vw {

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    normalize();
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) {
    return RationalPolynomial(std::vector<mpq_class>{c});
}

void RationalPolynomial::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const mpq_class& RationalPolynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("RationalPolynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

mpq_class RationalPolynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return mpq_class(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

mpq_class RationalPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return RationalPolynomial{};
    std::vector<mpq_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * mpq_class(static_cast<long>(i));
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
    if (coeffs_.empty()) return *this;
    return *this * mpq_class(1 / leading());
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<mpq_class> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<mpq_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a + (-b);
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return RationalPolynomial{};
    std::vector<mpq_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial operator*(const RationalPolynomial& a, const mpq_class& s) {
    std::vector<mpq_class> c(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i] * s;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::remainder(const RationalPolynomial& d) const {
    if (d.is_zero()) throw std::domain_error("RationalPolynomial: division by zero polynomial");
    std::vector<mpq_class> r = coeffs_;
    const long dd = d.degree();
    while (static_cast<long>(r.size()) - 1 >= dd) {
        while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
        if (static_cast<long>(r.size()) - 1 < dd) break;
        mpq_class q = r.back() / d.leading();
        std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
            r[shift + j] -= q * d.coeffs_[j];
        r.pop_back();
    }
    return RationalPolynomial(std::move(r));
}

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        RationalPolynomial r = a.remainder(b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RationalPolynomial square_free_part(const RationalPolynomial& f) {
    if (f.is_zero()) throw std::domain_error("square_free_part: zero polynomial");
    if (f.degree() == 0) return f.monic();
    RationalPolynomial g = poly_gcd(f, f.derivative());
    if (g.degree() == 0) return f.monic();
    // Exact division f / g via repeated remainder-free elimination.
    std::vector<mpq_class> num = f.coeffs();
    const long gd = g.degree();
    std::vector<mpq_class> quot(static_cast<std::size_t>(f.degree() - gd) + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpq_class q = num[i + static_cast<std::size_t>(gd)] / g.leading();
        quot[i] = q;
        for (long j = 0; j <= gd; ++j)
            num[i + static_cast<std::size_t>(j)] -= q * g.coeff(j);
    }
    for (const auto& c : num)
        if (sgn(c) != 0) throw std::logic_error("square_free_part: inexact division");
    return RationalPolynomial(std::move(quot)).monic();
}

namespace {

// Sign of p at +inf (dir = +1) or -inf (dir = -1).
int sign_at_infinity(const RationalPolynomial& p, int dir) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

long sign_variations(const std::vector<int>& signs) {
    long v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Scale by 1/|leading|: controls coefficient growth without touching signs.
RationalPolynomial positive_scaled(const RationalPolynomial& p) {
    if (p.is_zero()) return p;
    mpq_class inv = mpq_class(1) / p.leading();
    if (sgn(inv) < 0) inv = -inv;
    return p * inv;
}

}  // namespace

long sturm_real_root_count(const RationalPolynomial& squarefree) {
    if (squarefree.is_zero()) throw std::domain_error("sturm_real_root_count: zero polynomial");
    if (squarefree.degree() == 0) return 0;
    std::vector<RationalPolynomial> chain;
    chain.push_back(positive_scaled(squarefree));
    chain.push_back(positive_scaled(squarefree.derivative()));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RationalPolynomial r = -(chain[chain.size() - 2].remainder(chain.back()));
        if (r.is_zero()) break;
        chain.push_back(positive_scaled(r));
    }
    std::vector<int> at_pos, at_neg;
    at_pos.reserve(chain.size());
    at_neg.reserve(chain.size());
    for (const auto& p : chain) {
        at_pos.push_back(sign_at_infinity(p, +1));
        at_neg.push_back(sign_at_infinity(p, -1));
    }
    return sign_variations(at_neg) - sign_variations(at_pos);
}

bool is_hyperbolic(const RationalPolynomial& poly) {
    if (poly.is_zero()) throw std::domain_error("is_hyperbolic: zero polynomial");
    if (poly.degree() == 0) return true;
    RationalPolynomial radical = square_free_part(poly);
    return sturm_real_root_count(radical) == radical.degree();
}

}  // namespace vw
