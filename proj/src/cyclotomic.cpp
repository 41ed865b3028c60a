#include "vw/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "vw/util.hpp"

namespace vw {

namespace {

// Exact division of integer polynomials (constant term first); remainder must
// vanish. Divisor is monic up to sign of its leading coefficient (+-1 here).
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (den.empty() || den.back() == 0) throw std::logic_error("poly_div_exact: zero divisor");
    if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
    const mpz_class& lead = den.back();
    std::vector<mpz_class> quot(num.size() - den.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class q = num[i + den.size() - 1] / lead;
        if (q * lead != num[i + den.size() - 1])
            throw std::logic_error("poly_div_exact: inexact leading division");
        quot[i] = q;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quot;
}

// Power-basis reduction table for Q(zeta_N): row e holds zeta^e over the basis.
struct ReductionTable {
    long order;
    long degree;  // phi(order)
    std::vector<std::vector<mpz_class>> row;  // order rows, each of length degree
};

const ReductionTable& reduction_table(long order) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<ReductionTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;

    auto phi_n = cyclotomic_polynomial(order);
    const long deg = static_cast<long>(phi_n.size()) - 1;
    auto table = std::make_unique<ReductionTable>();
    table->order = order;
    table->degree = deg;
    table->row.assign(static_cast<std::size_t>(order), std::vector<mpz_class>());

    std::vector<mpz_class> cur(static_cast<std::size_t>(deg), mpz_class(0));
    cur[0] = 1;
    for (long e = 0; e < order; ++e) {
        table->row[static_cast<std::size_t>(e)] = cur;
        // cur *= x, reduced mod Phi_N (monic).
        mpz_class carry = cur.back();
        for (long i = deg - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        cur[0] = 0;
        if (carry != 0)
            for (long i = 0; i < deg; ++i)
                cur[static_cast<std::size_t>(i)] -= carry * phi_n[static_cast<std::size_t>(i)];
    }
    auto* ptr = table.get();
    cache[order] = std::move(table);
    return *ptr;
}

long mod_order(long e, long order) {
    long r = e % order;
    return r < 0 ? r + order : r;
}

}  // namespace

long euler_phi_long(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi_long: n must be positive");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(long n) {
    if (n <= 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<mpz_class> num(static_cast<std::size_t>(n) + 1, mpz_class(0));
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (long d : divisors_of(n)) {
        if (d == n) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CyclotomicValue::CyclotomicValue(long order) : order_(order) {
    if (order < 1) throw std::invalid_argument("CyclotomicValue: order must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(reduction_table(order).degree), mpq_class(0));
}

CyclotomicValue CyclotomicValue::rational(long order, const mpq_class& value) {
    CyclotomicValue v(order);
    v.coeffs_[0] = value;
    return v;
}

CyclotomicValue CyclotomicValue::root_power(long order, long e, const mpq_class& coeff) {
    CyclotomicValue v(order);
    v.add_root_power(e, coeff);
    return v;
}

void CyclotomicValue::add_root_power(long e, const mpq_class& coeff) {
    if (sgn(coeff) == 0) return;
    const auto& row = reduction_table(order_).row[static_cast<std::size_t>(mod_order(e, order_))];
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (row[i] != 0) coeffs_[i] += coeff * mpq_class(row[i]);
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& other) {
    if (order_ != other.order_) throw std::invalid_argument("CyclotomicValue: order mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) {
    a += b;
    return a;
}

CyclotomicValue CyclotomicValue::operator-() const {
    CyclotomicValue r(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

CyclotomicValue operator-(const CyclotomicValue& a, const CyclotomicValue& b) {
    return a + (-b);
}

CyclotomicValue& CyclotomicValue::operator*=(const mpq_class& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

CyclotomicValue operator*(CyclotomicValue a, const mpq_class& scalar) {
    a *= scalar;
    return a;
}

CyclotomicValue CyclotomicValue::times_root_power(long e) const {
    CyclotomicValue r(order_);
    // Basis element zeta^i maps to zeta^{i+e}; re-reduce each shifted monomial.
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) r.add_root_power(static_cast<long>(i) + e, coeffs_[i]);
    return r;
}

CyclotomicValue CyclotomicValue::conjugate() const {
    CyclotomicValue r(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) r.add_root_power(-static_cast<long>(i), coeffs_[i]);
    return r;
}

bool CyclotomicValue::is_zero() const {
    for (const auto& c : coeffs_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CyclotomicValue::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return false;
    return true;
}

mpq_class CyclotomicValue::rational_part() const {
    if (!is_rational()) throw std::domain_error("CyclotomicValue: value is not rational");
    return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

CyclotomicValue CyclotomicValue::real_part() const {
    CyclotomicValue r = *this + conjugate();
    r *= mpq_class(1, 2);
    return r;
}

bool CyclotomicValue::operator==(const CyclotomicValue& other) const {
    return order_ == other.order_ && coeffs_ == other.coeffs_;
}

std::pair<BigReal, BigReal> CyclotomicValue::embed(long precision) const {
    BigReal re = BigReal::zero(precision);
    BigReal im = BigReal::zero(precision);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        auto [s, c] = BigReal::sin_cos_2pi(make_q(static_cast<long>(i), order_), precision);
        BigReal w = BigReal::of(coeffs_[i], precision);
        re += w * c;
        im += w * s;
    }
    return {std::move(re), std::move(im)};
}

}  // namespace vw
