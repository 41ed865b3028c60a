#include "vw/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace vw {

namespace {
long checked_prec(long p) {
    if (p < MPFR_PREC_MIN || p > 1L << 24)
        throw std::invalid_argument("BigReal: precision out of range");
    return p;
}
}  // namespace

BigReal::BigReal(long precision_bits) : prec_(checked_prec(precision_bits)) {
    mpfr_init2(v_, prec_);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(const BigReal& other) : prec_(other.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.prec_);
        prec_ = other.prec_;
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        std::swap(prec_, other.prec_);
    }
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::of(long v, long precision_bits) {
    BigReal r(precision_bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::of(const mpz_class& v, long precision_bits) {
    BigReal r(precision_bits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::of(const mpq_class& v, long precision_bits) {
    BigReal r(precision_bits);
    mpfr_set_q(r.v_, v.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::of_double(double v, long precision_bits) {
    BigReal r(precision_bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigReal BigReal::pi(long precision_bits) {
    BigReal r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow2(long exponent, long precision_bits) {
    BigReal r(precision_bits);
    mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
    return r;
}

std::pair<BigReal, BigReal> BigReal::sin_cos_2pi(const mpq_class& turns, long precision_bits) {
    long wp = precision_bits + 16;
    BigReal angle(wp);
    mpfr_set_q(angle.v_, turns.get_mpq_t(), MPFR_RNDN);
    BigReal two_pi = pi(wp) * 2L;
    BigReal x = angle * two_pi;
    BigReal s(precision_bits), c(precision_bits);
    mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
    return {std::move(s), std::move(c)};
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.prec_, b.prec_));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.prec_, b.prec_));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(std::max(a.prec_, b.prec_));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal& BigReal::operator+=(const BigReal& b) {
    if (b.prec_ > prec_) {
        *this = *this + b;
    } else {
        mpfr_add(v_, v_, b.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& b) {
    if (b.prec_ > prec_) {
        *this = *this - b;
    } else {
        mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& b) {
    if (b.prec_ > prec_) {
        *this = *this * b;
    } else {
        mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.prec_);
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.prec_);
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
}

BigReal BigReal::sqrt() const {
    BigReal r(prec_);
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::exp() const {
    BigReal r(prec_);
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::log() const {
    BigReal r(prec_);
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(prec_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::pow_ui(unsigned long e) const {
    BigReal r(prec_);
    mpfr_pow_ui(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigReal BigReal::round_to(long precision_bits) const {
    BigReal r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

mpz_class BigReal::round_to_integer() const {
    mpfr_t t;
    mpfr_init2(t, std::max<long>(prec_, 64));
    mpfr_rint(t, v_, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    return z;
}

mpq_class BigReal::to_exact_rational() const {
    if (!mpfr_number_p(v_)) throw std::domain_error("BigReal: not a finite number");
    if (mpfr_zero_p(v_)) return mpq_class(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
    mpq_class q(m);
    if (e >= 0) {
        mpz_class sc;
        mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= mpq_class(sc);
    } else {
        mpz_class sc;
        mpz_ui_pow_ui(sc.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= mpq_class(sc);
    }
    return q;
}

int BigReal::sign() const { return mpfr_sgn(v_); }

int BigReal::cmp(const BigReal& other) const { return mpfr_cmp(v_, other.v_); }

int BigReal::cmp(long v) const { return mpfr_cmp_si(v_, v); }

bool BigReal::abs_less_pow2(long e) const {
    if (mpfr_zero_p(v_)) return true;
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_abs(t, v_, MPFR_RNDN);
    int c = mpfr_cmp_ui_2exp(t, 1, e);
    mpfr_clear(t);
    return c < 0;
}

double BigReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigReal::to_string(int significant_digits) const {
    if (significant_digits < 2) significant_digits = 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", significant_digits - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

}  // namespace vw
