#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamefiber/bigint.hpp"
#include "tamefiber/group_ring.hpp"

namespace tamefiber {

/// Coefficients (constant term first) of the n-th cyclotomic polynomial,
/// obtained by dividing x^n - 1 exactly by Phi_d for every proper divisor d.
/// Results are memoized; safe to call from several threads.
const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n);

/// Euler phi(n), the degree of Q(zeta_n) over Q.
std::int64_t euler_phi(std::int64_t n);

/// Exact element of Q(zeta_n), stored as its canonical representative of
/// degree < phi(n) modulo Phi_n.
class CyclotomicNumber {
public:
    static CyclotomicNumber zero(std::int64_t n);
    static CyclotomicNumber one(std::int64_t n);
    /// zeta_n^k.
    static CyclotomicNumber zeta_power(std::int64_t n, std::int64_t k);
    /// Reduces an arbitrary rational polynomial in zeta_n.
    static CyclotomicNumber from_polynomial(std::int64_t n, std::vector<BigRat> coeffs);

    std::int64_t conductor() const { return n_; }
    /// Exactly phi(n) coefficients, constant term first.
    const std::vector<BigRat>& coefficients() const { return coeffs_; }
    bool is_zero() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& other);
    CyclotomicNumber& operator-=(const CyclotomicNumber& other);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    CyclotomicNumber(std::int64_t n, std::vector<BigRat> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}
    void require_same_conductor(const CyclotomicNumber& other) const;

    std::int64_t n_;
    std::vector<BigRat> coeffs_;
};

/// Evaluates a group-ring element at xi = zeta_n^power.
CyclotomicNumber cyc_eval(const GroupRingElement& a, std::int64_t power);

/// Field inverse via the extended Euclidean algorithm against Phi_n.
/// Throws Error(DivisionByZero) for zero.
CyclotomicNumber cyc_inv(const CyclotomicNumber& a);

}  // namespace tamefiber
