#include "tamefiber/singtrace.hpp"

#include <map>
#include <numeric>

#include "tamefiber/arith.hpp"
#include "tamefiber/errors.hpp"

namespace tamefiber {

namespace {

// ceil(a / b) for a >= 0, b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

GroupRingElement trace_polynomial(const ResolutionData& res) {
    const std::int64_t n = res.n();
    const std::int64_t L = res.length();
    const std::int64_t a1 = res.alpha1;
    GroupRingElement out(n);

    // Node terms. Inner loop steps the exponent by chi^{r_{l-1}}.
    for (std::int64_t l = 0; l <= L; ++l) {
        const std::int64_t step_i = mod_floor(-mul_mod(a1, res.r_at(l), n), n);
        const std::int64_t step_j = mul_mod(a1, res.r_at(l - 1), n);
        std::int64_t ei = 0;
        for (std::int64_t i = 0; i < res.mu_at(l); ++i) {
            std::int64_t e = ei;
            for (std::int64_t j = 0; j < res.mu_at(l + 1); ++j) {
                out.add_term(e, 1L);
                e += step_j;
                if (e >= n) e -= n;
            }
            ei += step_i;
            if (ei >= n) ei -= n;
        }
    }

    // Curve corrections.
    for (std::int64_t j = 1; j <= L; ++j) {
        const std::int64_t l = j - 1;
        const std::int64_t bj = res.b_at(j);
        const std::int64_t step_k = mul_mod(a1, res.r_at(l - 1), n);
        const std::int64_t step_t = mul_mod(a1, res.r_at(l), n);
        const std::int64_t base = mod_floor(-mul_mod(step_t, res.mu_at(l) - 1, n), n);
        std::int64_t ek = base;
        for (std::int64_t k = 0; k < res.mu_at(j); ++k) {
            std::int64_t e = ek;
            const std::int64_t count = bj * (res.mu_at(j) - k) - 1;
            for (std::int64_t t = 0; t < count; ++t) {
                out.add_term(e, -1L);
                e += step_t;
                if (e >= n) e -= n;
            }
            ek += step_k;
            if (ek >= n) ek -= n;
        }
    }
    return out;
}

SingularTrace singular_trace(const Singularity& sing) {
    ResolutionData res = resolve(sing);
    GroupRingElement trace = trace_polynomial(res);
    return {std::move(res), std::move(trace)};
}

ClosedFormCoefficients closed_form_coefficients(const ResolutionData& res) {
    if (!is_stable(res)) {
        throw Error(ErrorKind::NotStable, "closed form needs a stable chain; (" + std::to_string(res.sing.m1) + "," +
                                              std::to_string(res.sing.m2) + "," + std::to_string(res.n()) +
                                              ") is not stable");
    }
    ClosedFormCoefficients c;
    const std::int64_t mu0 = res.mu_at(0);
    const std::int64_t mu1 = res.mu_first();
    const std::int64_t muL = res.mu_last();
    const std::int64_t muL1 = res.mu_at(res.length() + 1);
    for (std::int64_t r = 0; r < mu0; ++r) c.y.push_back(mu1 - ceil_div(r * mu1, mu0));
    for (std::int64_t r = 0; r < muL1; ++r) c.z.push_back(muL - ceil_div(r * muL, muL1));
    c.w_count = res.m;
    return c;
}

GroupRingElement trace_closed_form(const ResolutionData& res) {
    const ClosedFormCoefficients c = closed_form_coefficients(res);
    const std::int64_t n = res.n();
    const std::int64_t alpha = mod_inverse(res.m, n);
    GroupRingElement out(n);
    for (std::size_t r = 0; r < c.y.size(); ++r) {
        out.add_term(mul_mod(res.alpha2, static_cast<std::int64_t>(r), n), static_cast<long>(c.y[r]));
    }
    for (std::size_t r = 0; r < c.z.size(); ++r) {
        out.add_term(mul_mod(res.alpha1, static_cast<std::int64_t>(r), n), static_cast<long>(c.z[r]));
    }
    for (std::int64_t r = 0; r < c.w_count; ++r) out.add_term(mul_mod(alpha, r, n), -1L);
    return out;
}

CyclotomicNumber trace_oracle(const ResolutionData& res, std::int64_t power) {
    const std::int64_t n = res.n();
    if (std::gcd(mod_floor(power, n), n) != 1) {
        throw Error(ErrorKind::BadInput, "oracle power " + std::to_string(power) + " is not prime to " + std::to_string(n));
    }
    const std::int64_t L = res.length();
    // chi^e evaluated at zeta^power is zeta^{power alpha1 e}.
    auto chi = [&](std::int64_t e) {
        return CyclotomicNumber::zeta_power(n, mul_mod(mul_mod(power, res.alpha1, n), mod_floor(e, n), n));
    };
    const CyclotomicNumber one = CyclotomicNumber::one(n);
    std::map<std::int64_t, CyclotomicNumber> inverse_cache;
    // (1 - chi^e)^{-1}; repeated exponents are common along long chains.
    auto inv_one_minus = [&](std::int64_t e) -> const CyclotomicNumber& {
        const std::int64_t key = mod_floor(e, n);
        auto it = inverse_cache.find(key);
        if (it == inverse_cache.end()) it = inverse_cache.emplace(key, cyc_inv(one - chi(key))).first;
        return it->second;
    };
    auto integer = [&](std::int64_t v) {
        return CyclotomicNumber::from_polynomial(n, {BigRat(static_cast<long>(v))});
    };

    CyclotomicNumber total = integer(res.mu_first()) * inv_one_minus(-res.r_at(0));
    total += integer(res.mu_last()) * inv_one_minus(res.r_at(L - 1));
    for (std::int64_t l = 1; l <= L - 1; ++l) {
        const std::int64_t num_e =
            mul_mod(res.r_at(l - 1), res.mu_at(l + 1), n) - mul_mod(res.r_at(l), res.mu_at(l), n);
        total += (one - chi(num_e)) * inv_one_minus(res.r_at(l - 1)) * inv_one_minus(-res.r_at(l));
    }
    return total;
}

GroupRingElement vertex_trace(std::int64_t mult, std::int64_t genus, std::int64_t self_int, std::int64_t n) {
    if (mult < 1 || genus < 0) throw Error(ErrorKind::BadInput, "vertex needs mult >= 1 and genus >= 0");
    const std::int64_t alpha = mod_inverse(mult, n);
    GroupRingElement out(n);
    for (std::int64_t k = 0; k < mult; ++k) {
        BigInt c = BigInt(static_cast<long>(mult - k)) * BigInt(static_cast<long>(self_int));
        c += 1 - genus;
        out.add_term(mul_mod(alpha, k, n), c);
    }
    return out;
}

}  // namespace tamefiber
