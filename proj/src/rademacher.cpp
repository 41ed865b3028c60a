#include "vw/rademacher.hpp"

#include <cmath>
#include <stdexcept>

#include "vw/dedekind.hpp"
#include "vw/util.hpp"

namespace vw::rademacher {

namespace {

constexpr long kGuardBits = 64;

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

long euler_phi(long k) {
    long result = k, m = k;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace

BigReal bessel_i13(const BigReal& x, long precision) {
    if (x.sign() < 0) throw std::invalid_argument("bessel_i13: x must be >= 0");
    if (x.sign() == 0) return BigReal::zero(precision);

    const long wp = precision + kGuardBits;
    BigReal half_x = x.round_to(wp) / 2L;
    BigReal half_x_sq = half_x * half_x;

    // First term (x/2)^13 / 13!.
    BigReal term = half_x.pow_ui(13) / BigReal::of(factorial(13), wp);
    BigReal sum = term;

    const long cutoff = -(precision + 8);
    for (unsigned long m = 0;; ++m) {
        // ratio (x/2)^2 / ((m+1)(m+14)); below 1/2 the tail is under 2 * term.
        BigReal next = term * half_x_sq / BigReal::of(mpz_class(m + 1) * (m + 14), wp);
        sum += next;
        bool ratio_small = (next * 2L).cmp(term) < 0;
        term = next;
        if (ratio_small && term.abs_less_pow2(cutoff)) break;
        if (m > 2000000) throw std::logic_error("bessel_i13: series failed to converge");
    }
    return sum.round_to(precision);
}

long default_precision_bits(long n) {
    if (n < 1) throw std::invalid_argument("default_precision_bits: n must be >= 1");
    double bits = 4.0 * 3.14159265358979324 * std::sqrt(static_cast<double>(n)) / 0.693147180559945;
    return static_cast<long>(std::ceil(bits)) + 96;
}

RademacherResult a_exact(long n, long K, long precision) {
    if (n < 1) throw std::invalid_argument("a_exact: n must be >= 1");
    if (K < 1) throw std::invalid_argument("a_exact: K must be >= 1");
    if (precision < 64) throw std::invalid_argument("a_exact: precision must be >= 64");

    const long wp = precision + kGuardBits;
    BigReal sqrt_n = BigReal::of(n, wp).sqrt();
    BigReal four_pi_sqrt_n = BigReal::pi(wp) * 4L * sqrt_n;

    BigReal re_sum = BigReal::zero(wp);
    BigReal im_sum = BigReal::zero(wp);
    const mpq_class n_plus_1(n + 1);

    for (long k = 1; k <= K; ++k) {
        BigReal bessel = bessel_i13(four_pi_sqrt_n / k, wp);
        BigReal block_re = BigReal::zero(wp);
        BigReal block_im = BigReal::zero(wp);
        for (long h = 0; h < k; ++h) {
            if (gcd_long(h, k) != 1) continue;
            mpq_class angle = dedekind::frac_mod1(12 * dedekind::dedekind_sum(h, k) -
                                                  n_plus_1 * mpq_class(h, k));
            auto [s, c] = BigReal::sin_cos_2pi(angle, wp);
            block_re += c;
            block_im += s;
        }
        re_sum += block_re * bessel / k;
        im_sum += block_im * bessel / k;
    }

    BigReal prefactor = BigReal::pi(wp) * 2L / sqrt_n.pow_ui(13);
    BigReal approx = prefactor * re_sum;
    BigReal imag = prefactor * im_sum;
    if (!imag.abs_less_pow2(-(precision / 2)))
        throw std::logic_error("a_exact: imaginary part exceeds bound (implementation bug)");

    mpz_class rounded = approx.round_to_integer();
    BigReal residual = (approx - BigReal::of(rounded, wp)).abs();
    bool resolved = residual.cmp(BigReal::of(mpq_class(1, 2), wp)) < 0;

    return RademacherResult{n, K, precision, approx.round_to(precision),
                            rounded, residual.round_to(precision), resolved};
}

RademacherResult a_exact_auto(long n) {
    const long precision = default_precision_bits(n);
    const BigReal tol = BigReal::of(mpq_class(1, 1000), precision);
    for (long K = 16; K <= 4096; K *= 2) {
        RademacherResult lo = a_exact(n, K, precision);
        RademacherResult hi = a_exact(n, 2 * K, precision);
        if (lo.resolved && hi.resolved && lo.rounded == hi.rounded &&
            hi.residual.cmp(tol) < 0)
            return hi;
    }
    throw std::runtime_error("a_exact_auto: did not stabilize by K = 4096");
}

BigReal block_magnitude_bound(long n, long k, long precision) {
    const long wp = precision + kGuardBits;
    BigReal sqrt_n = BigReal::of(n, wp).sqrt();
    BigReal bessel = bessel_i13(BigReal::pi(wp) * 4L * sqrt_n / k, wp);
    BigReal bound = BigReal::pi(wp) * 2L / sqrt_n.pow_ui(13) * bessel * euler_phi(k) / k;
    return bound.round_to(precision);
}

}  // namespace vw::rademacher
