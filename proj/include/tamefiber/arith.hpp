#pragma once

#include <cstdint>
#include <vector>

namespace tamefiber {

struct GcdLcm {
    std::int64_t gcd;
    std::int64_t lcm;
};

GcdLcm gcd_lcm(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of a modulo n (n > 0).
std::int64_t mod_floor(std::int64_t a, std::int64_t n);

/// (a * b) mod n without intermediate overflow; result in [0, n).
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);

/// The inverse of a modulo n, in [1, n-1] (1 when n == 1 is not allowed: n >= 2).
/// Throws Error(NotInvertible) when gcd(a, n) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t n);

/// Jung-Hirzebruch expansion n/r = [b_1, ..., b_L].
///
/// `rseq` holds r_{-1}, r_0, ..., r_L, so r_l lives at rseq[l + 1];
/// r_{-1} = n, r_0 = r, r_{L-1} = 1 and r_L = 0. The partial quotients obey
/// r_{l-1} = b_{l+1} r_l - r_{l+1} with every b_l >= 2.
struct JHExpansion {
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> rseq;

    std::size_t length() const { return b.size(); }
    /// r_l for -1 <= l <= L.
    std::int64_t r_at(std::int64_t l) const { return rseq.at(static_cast<std::size_t>(l + 1)); }
    /// b_l for 1 <= l <= L.
    std::int64_t b_at(std::int64_t l) const { return b.at(static_cast<std::size_t>(l - 1)); }
};

/// r is reduced into [0, n) first; throws Error(BadInput) unless the reduced
/// value is nonzero and coprime to n.
JHExpansion jh_expand(std::int64_t n, std::int64_t r);

}  // namespace tamefiber
