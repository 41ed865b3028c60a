#pragma once

#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace vw {

// Arbitrary-precision real backed by MPFR. Precision is explicit per value
// and propagates through arithmetic as the max of the operand precisions;
// all operations round to nearest.
class BigReal {
public:
    explicit BigReal(long precision_bits);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    long precision() const { return prec_; }

    static BigReal of(long v, long precision_bits);
    static BigReal of(const mpz_class& v, long precision_bits);
    static BigReal of(const mpq_class& v, long precision_bits);
    static BigReal of_double(double v, long precision_bits);
    static BigReal zero(long precision_bits) { return of(0L, precision_bits); }
    static BigReal pi(long precision_bits);
    static BigReal pow2(long exponent, long precision_bits);  // 2^exponent

    // sin(2 pi t) and cos(2 pi t) for an exact rational angle t.
    static std::pair<BigReal, BigReal> sin_cos_2pi(const mpq_class& turns, long precision_bits);

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    BigReal operator-() const;
    BigReal& operator+=(const BigReal& b);
    BigReal& operator-=(const BigReal& b);
    BigReal& operator*=(const BigReal& b);

    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);

    BigReal sqrt() const;
    BigReal exp() const;
    BigReal log() const;
    BigReal abs() const;
    BigReal pow_ui(unsigned long e) const;

    // Rounds to the given precision explicitly (never silent).
    BigReal round_to(long precision_bits) const;

    mpz_class round_to_integer() const;  // nearest integer, ties to even
    mpq_class to_exact_rational() const;

    int sign() const;
    int cmp(const BigReal& other) const;
    int cmp(long v) const;
    bool operator<(const BigReal& o) const { return cmp(o) < 0; }
    bool operator>(const BigReal& o) const { return cmp(o) > 0; }
    bool operator<=(const BigReal& o) const { return cmp(o) <= 0; }
    bool operator>=(const BigReal& o) const { return cmp(o) >= 0; }

    // |*this| < 2^e
    bool abs_less_pow2(long e) const;

    double to_double() const;
    std::string to_string(int significant_digits) const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
    long prec_;
};

}  // namespace vw
