#include "vw/dedekind.hpp"

#include <stdexcept>

#include "vw/util.hpp"

namespace vw::dedekind {

namespace {

void check_args(long h, long k) {
    if (k <= 0) throw std::invalid_argument("dedekind_sum: k must be positive");
    if (h < 0 || h >= k) throw std::invalid_argument("dedekind_sum: need 0 <= h < k");
    if (gcd_long(h, k) != 1) throw std::invalid_argument("dedekind_sum: gcd(h,k) must be 1");
}

// Sawtooth ((x)) = x - floor(x) - 1/2 for non-integral x, 0 otherwise.
mpq_class sawtooth(const mpq_class& x) {
    if (x.get_den() == 1) return mpq_class(0);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return x - mpq_class(fl) - mpq_class(1, 2);
}

}  // namespace

mpq_class frac_mod1(const mpq_class& q) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q - mpq_class(fl);
}

mpq_class dedekind_sum(long h, long k) {
    check_args(h, k);
    // Reciprocity (Apostol Thm 3.7): s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk))/12,
    // together with periodicity s(k mod h, h) = s(k, h).
    mpq_class total = 0;
    int sign = +1;
    while (h > 0) {
        mpz_class hh = h, kk = k;
        mpq_class rec = make_q(hh * hh + kk * kk + 1, 12 * hh * kk) - mpq_class(1, 4);
        if (sign > 0)
            total += rec;
        else
            total -= rec;
        long next_h = k % h;
        k = h;
        h = next_h;
        sign = -sign;
    }
    return total;
}

mpq_class dedekind_sum_direct(long h, long k) {
    check_args(h, k);
    mpq_class s = 0;
    for (long mu = 1; mu < k; ++mu)
        s += sawtooth(mpq_class(mu, k)) * sawtooth(make_q(mpz_class(h) * mu, k));
    return s;
}

UnitPhase omega24_phase(long h, long k) {
    return UnitPhase{frac_mod1(12 * dedekind_sum(h, k))};
}

long inverse_negated_mod(long h, long k) {
    if (k == 1) return 0;
    check_args(h, k);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), mpz_class(h).get_mpz_t(), mpz_class(k).get_mpz_t()) == 0)
        throw std::invalid_argument("inverse_negated_mod: h not invertible mod k");
    mpz_class r = (-inv) % k;
    if (r < 0) r += k;
    return static_cast<long>(r.get_si());
}

}  // namespace vw::dedekind
