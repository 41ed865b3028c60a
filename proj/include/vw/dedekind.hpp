#pragma once

#include <gmpxx.h>

namespace vw::dedekind {

// Angle t in [0,1) representing the unit complex number e^{2 pi i t}.
struct UnitPhase {
    mpq_class turns;
};

// Canonical representative of q modulo 1, in [0,1).
mpq_class frac_mod1(const mpq_class& q);

// Dedekind sum s(h,k) via the reciprocity recursion, O(log k) rational steps.
// Requires gcd(h,k) = 1 and 0 <= h < k.
mpq_class dedekind_sum(long h, long k);

// Direct-definition oracle: sum_{mu mod k} ((mu/k))((h mu/k)). Same contract.
mpq_class dedekind_sum_direct(long h, long k);

// Angle of omega_{h,k}^24 = e^{24 pi i s(h,k)}, i.e. 12 s(h,k) reduced mod 1.
UnitPhase omega24_phase(long h, long k);

// Least nonnegative h' with h h' = -1 (mod k).
long inverse_negated_mod(long h, long k);

}  // namespace vw::dedekind
