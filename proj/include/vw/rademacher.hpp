#pragma once

#include <gmpxx.h>

#include "vw/bigreal.hpp"

namespace vw::rademacher {

struct RademacherResult {
    long n;
    long terms_used;     // K
    long precision;      // requested bits
    BigReal approximation;
    mpz_class rounded;
    BigReal residual;    // |approximation - rounded|
    bool resolved;       // residual < 1/2
};

// I_13(x) by the ascending power series sum_{m>=0} (x/2)^{2m+13} / (m! (m+13)!),
// truncated once the term ratio is below 1/2 and the term is below 2^{-precision-8}.
// Rejects negative x.
BigReal bessel_i13(const BigReal& x, long precision);

// Partial sum over 1 <= k <= K of the convergent exact formula
//   a(n) = (2 pi / n^{13/2}) sum_k (1/k) sum_{h} omega_{h,k}^24
//          e^{-2 pi i (n+1) h / k} I_13(4 pi sqrt(n) / k),
// phases taken as exact rational angles, blocks reduced in ascending k order
// (h ascending within each block). The imaginary part must come out below
// 2^{-precision/2} and is then discarded.
RademacherResult a_exact(long n, long K, long precision);

// Default working precision: ceil(4 pi sqrt(n) / ln 2) + 96 bits.
long default_precision_bits(long n);

// Doubling policy: evaluate at K and 2K, accept when both round to the same
// integer and the residual is below 1e-3; otherwise double and retry.
RademacherResult a_exact_auto(long n);

// Magnitude bound (2 pi / n^{13/2}) phi(k) I_13(4 pi sqrt(n)/k) / k of the
// k-th block, used by refinement checks.
BigReal block_magnitude_bound(long n, long k, long precision);

}  // namespace vw::rademacher
