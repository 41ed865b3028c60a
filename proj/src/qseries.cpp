#include "vw/qseries.hpp"

#include <stdexcept>
#include <string>

namespace vw::qseries {

namespace {
const mpz_class kZero = 0;
}

CoefficientTable::CoefficientTable(long n_max, std::vector<mpz_class> values)
    : n_max_(n_max), values_(std::move(values)) {
    if (n_max_ < 0) throw std::invalid_argument("CoefficientTable: n_max must be >= 0");
    if (values_.size() != static_cast<std::size_t>(n_max_) + 2)
        throw std::invalid_argument("CoefficientTable: size mismatch");
    if (values_[0] != 1 || values_[1] != 24)
        throw std::logic_error("CoefficientTable: a(-1) = 1 and a(0) = 24 must hold");
    for (const auto& v : values_)
        if (v <= 0) throw std::logic_error("CoefficientTable: coefficients must be positive");
}

const mpz_class& CoefficientTable::at(long n) const {
    if (n < -1) return kZero;
    if (n > n_max_)
        throw std::out_of_range("CoefficientTable: a(" + std::to_string(n) +
                                ") beyond table range " + std::to_string(n_max_));
    return values_[static_cast<std::size_t>(n + 1)];
}

mpz_class sigma1(long n) {
    if (n <= 0) throw std::invalid_argument("sigma1: n must be positive");
    mpz_class s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += d;
            if (d != n / d) s += n / d;
        }
    }
    return s;
}

CoefficientTable eta_inv24_table(long n_max) {
    if (n_max < 0) throw std::invalid_argument("eta_inv24_table: n_max must be >= 0");
    const long m_max = n_max + 1;

    // sigma_1 memoized by a sieve over multiples.
    std::vector<unsigned long> sig(static_cast<std::size_t>(m_max) + 1, 0);
    for (long d = 1; d <= m_max; ++d)
        for (long m = d; m <= m_max; m += d) sig[static_cast<std::size_t>(m)] += static_cast<unsigned long>(d);

    std::vector<mpz_class> c(static_cast<std::size_t>(m_max) + 1);
    c[0] = 1;
    mpz_class acc;
    for (long m = 1; m <= m_max; ++m) {
        acc = 0;
        for (long k = 1; k <= m; ++k)
            mpz_addmul_ui(acc.get_mpz_t(), c[static_cast<std::size_t>(m - k)].get_mpz_t(),
                          sig[static_cast<std::size_t>(k)]);
        acc *= 24;
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(m)))
            throw std::logic_error("eta_inv24_table: recurrence sum not divisible by m");
        mpz_divexact_ui(c[static_cast<std::size_t>(m)].get_mpz_t(), acc.get_mpz_t(),
                        static_cast<unsigned long>(m));
    }
    return CoefficientTable(n_max, std::move(c));
}

CoefficientTable eta_inv24_oracle(long n_max) {
    if (n_max < 0) throw std::invalid_argument("eta_inv24_oracle: n_max must be >= 0");
    const long m_max = n_max + 1;
    const std::size_t len = static_cast<std::size_t>(m_max) + 1;

    // Pentagonal number theorem: prod (1-q^m) = sum_k (-1)^k q^{k(3k-1)/2}.
    struct Term {
        long exponent;
        int sign;
    };
    std::vector<Term> pent;
    pent.push_back({0, +1});
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        int s = (k % 2 == 0) ? +1 : -1;
        if (g1 <= m_max) pent.push_back({g1, s});
        if (g2 <= m_max) pent.push_back({g2, s});
        if (g1 > m_max && g2 > m_max) break;
    }

    // E = (pentagonal series)^24, truncated at q^m_max.
    std::vector<mpz_class> e(len), tmp(len);
    e[0] = 1;
    for (int pass = 0; pass < 24; ++pass) {
        for (auto& v : tmp) v = 0;
        for (const Term& t : pent) {
            for (long m = t.exponent; m <= m_max; ++m) {
                if (t.sign > 0)
                    tmp[static_cast<std::size_t>(m)] += e[static_cast<std::size_t>(m - t.exponent)];
                else
                    tmp[static_cast<std::size_t>(m)] -= e[static_cast<std::size_t>(m - t.exponent)];
            }
        }
        e.swap(tmp);
    }

    // Invert: D * E = 1. E(0) = 1, so D(m) = -sum_{k=1}^{m} E(k) D(m-k).
    std::vector<mpz_class> d(len);
    d[0] = 1;
    mpz_class acc;
    for (long m = 1; m <= m_max; ++m) {
        acc = 0;
        for (long k = 1; k <= m; ++k) {
            const mpz_class& ek = e[static_cast<std::size_t>(k)];
            if (ek != 0) acc += ek * d[static_cast<std::size_t>(m - k)];
        }
        d[static_cast<std::size_t>(m)] = -acc;
    }
    return CoefficientTable(n_max, std::move(d));
}

}  // namespace vw::qseries
