#pragma once

#include <vector>

#include <gmpxx.h>

namespace vw::qseries {

// Exact Fourier coefficients a(n) of eta(q)^-24, indexed -1 <= n <= n_max.
// a(n) = 0 for n < -1; lookups past n_max throw. Immutable once built.
class CoefficientTable {
public:
    CoefficientTable(long n_max, std::vector<mpz_class> values);

    long n_max() const { return n_max_; }

    // a(n); exact zero for n < -1, throws std::out_of_range for n > n_max.
    const mpz_class& at(long n) const;

private:
    long n_max_;
    std::vector<mpz_class> values_;  // values_[n + 1] = a(n)
};

// sigma_1(n): sum of the positive divisors of n. Rejects n <= 0.
mpz_class sigma1(long n);

// Main path: coefficients of prod (1-q^m)^-24 via the logarithmic-derivative
// recurrence m c(m) = 24 sum_{k=1}^{m} sigma_1(k) c(m-k), then a(n) = c(n+1).
CoefficientTable eta_inv24_table(long n_max);

// Independent oracle: expand prod (1-q^m)^24 by multiplying the pentagonal
// number series 24 times, then invert the power series over the integers.
// Shares no convolution kernel with eta_inv24_table.
CoefficientTable eta_inv24_oracle(long n_max);

}  // namespace vw::qseries
