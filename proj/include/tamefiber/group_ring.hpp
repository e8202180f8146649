#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tamefiber/bigint.hpp"

namespace tamefiber {

/// Element sum_e c_e xi^e of the integral group ring Z[Z/n].
///
/// Exponents are always stored reduced into [0, n). Storage is a dense
/// coefficient vector for n <= kDenseLimit and an ordered map above it; both
/// representations behave identically through the public interface.
class GroupRingElement {
public:
    static constexpr std::int64_t kDenseLimit = 4096;

    /// The zero element of Z[Z/n]; n must be positive.
    explicit GroupRingElement(std::int64_t n);

    static GroupRingElement monomial(std::int64_t n, std::int64_t exponent, const BigInt& coeff = 1);
    static GroupRingElement constant(std::int64_t n, const BigInt& c);

    std::int64_t modulus() const { return n_; }
    bool is_dense() const { return n_ <= kDenseLimit; }

    /// Coefficient of xi^e, e taken mod n.
    BigInt coeff(std::int64_t exponent) const;

    /// Adds c to the coefficient of xi^e, e taken mod n.
    void add_term(std::int64_t exponent, const BigInt& c);
    void add_term(std::int64_t exponent, long c);

    /// Nonzero terms with ascending exponents.
    std::vector<std::pair<std::int64_t, BigInt>> terms() const;
    std::size_t term_count() const;
    bool is_zero() const { return term_count() == 0; }

    GroupRingElement& operator+=(const GroupRingElement& other);
    GroupRingElement& operator-=(const GroupRingElement& other);
    GroupRingElement operator-() const;

    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

    /// Human-readable form, e.g. "3 + 2*x^10 + x^7" with terms by ascending
    /// exponent; `var` names the generator.
    std::string to_string(const std::string& var = "x") const;

private:
    void require_same_modulus(const GroupRingElement& other) const;

    std::int64_t n_;
    std::vector<BigInt> dense_;
    std::map<std::int64_t, BigInt> sparse_;
};

// Named forms of the ring operations. All throw Error(ModulusMismatch) when
// the operands live in different group rings.
GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement gr_scale(const GroupRingElement& a, const BigInt& factor);

/// sum_{k=0}^{count-1} xi^{k * step}.
GroupRingElement gr_geom(std::int64_t step, std::int64_t count, std::int64_t n);

/// Value at the trivial element xi = 1 (sum of the coefficients).
BigInt gr_eval_at_one(const GroupRingElement& a);

}  // namespace tamefiber
