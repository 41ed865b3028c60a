#pragma once

#include <vector>

#include <gmpxx.h>

namespace vw {

// Dense polynomial over Q, constant term first. Canonical form has a nonzero
// leading coefficient; the zero polynomial is the empty coefficient list.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<mpq_class> coeffs);

    static RationalPolynomial constant(const mpq_class& c);

    // degree; -1 for the zero polynomial
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const mpq_class& leading() const;
    // coefficient of X^i (zero beyond the stored range)
    mpq_class coeff(long i) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    mpq_class eval(const mpq_class& x) const;
    RationalPolynomial derivative() const;
    RationalPolynomial monic() const;

    RationalPolynomial operator-() const;
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const mpq_class& s);
    bool operator==(const RationalPolynomial& other) const { return coeffs_ == other.coeffs_; }

    // Euclidean remainder of *this by d (d nonzero).
    RationalPolynomial remainder(const RationalPolynomial& d) const;

private:
    void normalize();
    std::vector<mpq_class> coeffs_;
};

// Monic gcd over Q.
RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b);

// f / gcd(f, f'): same roots, all simple.
RationalPolynomial square_free_part(const RationalPolynomial& f);

// Number of distinct real roots via a Sturm chain over (-inf, +inf).
long sturm_real_root_count(const RationalPolynomial& squarefree);

// True iff every complex root of poly is real, decided exactly. Rejects the
// zero polynomial; constants are vacuously hyperbolic.
bool is_hyperbolic(const RationalPolynomial& poly);

}  // namespace vw
