#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "vw/bigreal.hpp"

namespace vw {

// Exact element of Q(zeta_N), zeta_N = e^{2 pi i / N}, stored as a rational
// coefficient vector over the power basis 1, zeta, ..., zeta^{phi(N)-1}
// (reduction modulo the N-th cyclotomic polynomial). The representation is
// canonical, so equality is coefficient-vector equality.
class CyclotomicValue {
public:
    explicit CyclotomicValue(long order);  // zero of Q(zeta_order)

    static CyclotomicValue rational(long order, const mpq_class& value);
    // coeff * zeta_order^e (e may be any integer; reduced mod order)
    static CyclotomicValue root_power(long order, long e, const mpq_class& coeff);

    long order() const { return order_; }
    long degree() const { return static_cast<long>(coeffs_.size()); }  // phi(order)
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    void add_root_power(long e, const mpq_class& coeff);

    CyclotomicValue& operator+=(const CyclotomicValue& other);
    friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b);
    CyclotomicValue operator-() const;
    friend CyclotomicValue operator-(const CyclotomicValue& a, const CyclotomicValue& b);
    CyclotomicValue& operator*=(const mpq_class& scalar);
    friend CyclotomicValue operator*(CyclotomicValue a, const mpq_class& scalar);

    // Multiplication by zeta_order^e.
    CyclotomicValue times_root_power(long e) const;

    // Complex conjugate (the Galois action zeta -> zeta^{-1}).
    CyclotomicValue conjugate() const;

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational_part() const;  // requires is_rational()

    // Exact real part (v + conj(v))/2, still an element of Q(zeta_N).
    CyclotomicValue real_part() const;

    bool operator==(const CyclotomicValue& other) const;

    // Complex embedding zeta_N -> e^{2 pi i / N}, returned as (re, im).
    std::pair<BigReal, BigReal> embed(long precision) const;

private:
    long order_;
    std::vector<mpq_class> coeffs_;
};

// N-th cyclotomic polynomial coefficients, constant term first (monic, integer).
std::vector<mpz_class> cyclotomic_polynomial(long n);

long euler_phi_long(long n);

}  // namespace vw
