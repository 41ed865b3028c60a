#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vw/cyclotomic.hpp"
#include "vw/qseries.hpp"

namespace vw::invariants {

enum class FamilyKind { SU_r, SU_p_mod_center, Twisted };

// One of the three K3 partition-function families. Construct through the
// factories, which validate the parameters.
struct InvariantFamily {
    FamilyKind kind;
    long r = 1;                    // SU_r
    long p = 2;                    // SU_p_mod_center, Twisted
    bool w_is_zero_class = false;  // SU_p_mod_center
    long w_squared = 0;            // SU_p_mod_center
    long rho = 1;                  // Twisted: Picard number, 1..22

    static InvariantFamily su(long r);
    static InvariantFamily su_mod_center(long p, bool w_is_zero_class, long w_squared);
    static InvariantFamily twisted(long p, long rho);

    std::string label() const;
    // Exponent denominator of the family's q-series (1 for SU_r, else p).
    long series_denominator() const;
    // Cyclotomic order used for exact coefficients (r, 2p, or p).
    long cyclotomic_order() const;
};

// Exact coefficient table of a series sum_n c(n) q^{n/denominator}; values are
// elements of Q(zeta_order). Immutable after construction.
class FractionalSeries {
public:
    FractionalSeries(long denominator, long order, std::map<long, CyclotomicValue> coeffs);

    long denominator() const { return denominator_; }
    long order() const { return order_; }
    // c(n); exact zero below the lowest stored exponent or off the support.
    CyclotomicValue coefficient(long n) const;
    const std::map<long, CyclotomicValue>& entries() const { return coeffs_; }

private:
    long denominator_;
    long order_;
    std::map<long, CyclotomicValue> coeffs_;
};

// alpha_{1,r}(n) = sum_{s | gcd(n-r, r)} a((n-r) r / s^2) / s^2.
// Exact rational (integral for r = 1; non-integral values occur, e.g. r = 4, n = 8).
mpq_class alpha1(long r, long n, const qseries::CoefficientTable& table);

// alpha_{2,p}(w; n) = (1/p) sum_{j=0}^{p-1} zeta_{2p}^{j(2n - w^2)} a(n)
//                     + [p^2 | n] delta_{w,0} a(n/p^2) / p^2, exact in Q(zeta_{2p}).
CyclotomicValue alpha2(long p, bool w_is_zero, long w_squared, long n,
                       const qseries::CoefficientTable& table);

// Corollary reindexing alpha2'(w; n) = alpha2(w; p n), valid when w^2 = 2m with p | m:
// a(p n) + [p | n] delta_{w,0} a(n/p) / p^2.
mpq_class alpha2_prime(long p, bool w_is_zero, long w_squared, long n,
                       const qseries::CoefficientTable& table);

// alpha_{3,p}(n) = p^21 a(n-p^2) + [p^2 | n] a(n/p^2 - 1)/p^2
//                  + (p | n ? p^{rho-1}(p-1) : -p^{rho-1}) a(n-p^2).
mpq_class alpha3(long p, long rho, long n, const qseries::CoefficientTable& table);

// Supersingular corollary alpha3'(n) = alpha3(p n) at rho = 22:
// p^22 a(p(n-p)) + [p | n] a(n/p - 1)/p^2.
mpq_class alpha3_prime(long p, long n, const qseries::CoefficientTable& table);

// Direct expansion of the family's generating function: substitute
// q -> zeta q^e term by term into the a-table, sum over j and d with exact
// cyclotomic coefficients, apply the stated prefactors and q-powers.
// Independent verification path for the alpha closed forms.
FractionalSeries expand_partition_function(const InvariantFamily& family, long n_max,
                                           const qseries::CoefficientTable& table);

// Smallest a-table size sufficient for expand_partition_function / the alpha
// closed forms up to coefficient index n_max.
long required_table_size(const InvariantFamily& family, long n_max);

// Overload building its own table.
FractionalSeries expand_partition_function(const InvariantFamily& family, long n_max);

// One flux class w contributing to the Theorem-2 outer sum, described only by
// the data the formula consumes; enumerating H^2(S, mu_p) is out of scope.
struct FluxClass {
    long w_dot_c1;
    bool w_is_zero;
    long w_squared;
};

// Coefficient of q^{n/p} in sum_w e^{2 pi i (w.c1)/p} Z_w(q) over the supplied
// classes, exact in Q(zeta_{2p}).
CyclotomicValue combine_flux_classes(long p, const std::vector<FluxClass>& classes, long n,
                                     const qseries::CoefficientTable& table);

}  // namespace vw::invariants
