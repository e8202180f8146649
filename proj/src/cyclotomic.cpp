#include "tamefiber/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "tamefiber/arith.hpp"
#include "tamefiber/errors.hpp"

namespace tamefiber {

namespace {

using RatPoly = std::vector<BigRat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
std::vector<BigInt> divide_exact_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<BigInt> quot(num.size() - dd, BigInt(0));
    for (std::size_t k = num.size(); k-- > dd;) {
        const BigInt c = num[k];
        quot[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    for (const auto& c : num) {
        if (c != 0) throw Error(ErrorKind::BadInput, "cyclotomic division left a remainder");
    }
    return quot;
}

// Remainder of p modulo the monic polynomial `mod`.
void reduce_mod(RatPoly& p, const std::vector<BigInt>& mod) {
    const std::size_t deg = mod.size() - 1;
    for (std::size_t k = p.size(); k-- > deg;) {
        if (p[k] == 0) continue;
        const BigRat c = p[k];
        for (std::size_t j = 0; j <= deg; ++j) p[k - deg + j] -= c * BigRat(mod[j]);
    }
    if (p.size() > deg) p.resize(deg);
    p.resize(deg, BigRat(0));
}

// Quotient and remainder of a by b (b nonzero, trimmed).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {RatPoly{}, a};
    RatPoly q(a.size() - db, BigRat(0));
    const BigRat lead = b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) continue;
        const BigRat c = a[k] / lead;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n) {
    static std::mutex mutex;
    static std::map<std::int64_t, std::vector<BigInt>> cache;
    if (n < 1) throw Error(ErrorKind::BadInput, "cyclotomic polynomial index must be positive");
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<BigInt> poly(static_cast<std::size_t>(n + 1), BigInt(0));
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_exact_monic(std::move(poly), cyclotomic_polynomial(d));
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(n, std::move(poly)).first->second;
}

CyclotomicNumber CyclotomicNumber::zero(std::int64_t n) {
    cyclotomic_polynomial(n);
    return CyclotomicNumber(n, RatPoly(static_cast<std::size_t>(euler_phi(n)), BigRat(0)));
}

CyclotomicNumber CyclotomicNumber::one(std::int64_t n) {
    return from_polynomial(n, {BigRat(1)});
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::int64_t n, std::int64_t k) {
    RatPoly p(static_cast<std::size_t>(mod_floor(k, n) + 1), BigRat(0));
    p.back() = 1;
    return from_polynomial(n, std::move(p));
}

CyclotomicNumber CyclotomicNumber::from_polynomial(std::int64_t n, std::vector<BigRat> coeffs) {
    reduce_mod(coeffs, cyclotomic_polynomial(n));
    return CyclotomicNumber(n, std::move(coeffs));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

void CyclotomicNumber::require_same_conductor(const CyclotomicNumber& other) const {
    if (other.n_ != n_) {
        throw Error(ErrorKind::ModulusMismatch,
                    "cyclotomic conductors differ: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
    require_same_conductor(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) {
    require_same_conductor(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.require_same_conductor(b);
    RatPoly prod = poly_mul(a.coeffs_, b.coeffs_);
    if (prod.empty()) return CyclotomicNumber::zero(a.n_);
    return CyclotomicNumber::from_polynomial(a.n_, std::move(prod));
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].get_str() << ")";
        if (i > 0) os << "*z^" << i;
    }
    return first ? "0" : os.str();
}

CyclotomicNumber cyc_eval(const GroupRingElement& a, std::int64_t power) {
    const std::int64_t n = a.modulus();
    RatPoly p(static_cast<std::size_t>(n), BigRat(0));
    for (const auto& [e, c] : a.terms()) {
        p[static_cast<std::size_t>(mul_mod(e, power, n))] += BigRat(c);
    }
    return CyclotomicNumber::from_polynomial(n, std::move(p));
}

CyclotomicNumber cyc_inv(const CyclotomicNumber& a) {
    if (a.is_zero()) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta_" + std::to_string(a.conductor()) + ")");
    }
    const auto& phi = cyclotomic_polynomial(a.conductor());
    RatPoly r0(phi.begin(), phi.end());
    RatPoly r1 = a.coefficients();
    trim(r1);
    RatPoly s0{}, s1{BigRat(1)};
    // Invariant: s_i * a = r_i (mod Phi_n).
    while (!r1.empty() && r1.size() > 1) {
        auto [q, rem] = divmod(r0, r1);
        RatPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_n is irreducible, so the last nonzero remainder is a unit constant.
    if (r1.empty()) {
        throw Error(ErrorKind::DivisionByZero, "element shares a factor with the cyclotomic polynomial");
    }
    const BigRat c = r1[0];
    for (auto& x : s1) x /= c;
    return CyclotomicNumber::from_polynomial(a.conductor(), std::move(s1));
}

}  // namespace tamefiber
