#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tamefiber/arith.hpp"
#include "tamefiber/bigint.hpp"

namespace tamefiber {

/// Tame cyclic quotient singularity (m1, m2, n): branches of multiplicity m1
/// and m2 meeting at a point, pulled back along a degree-n extension.
struct Singularity {
    std::int64_t m1 = 0;
    std::int64_t m2 = 0;
    std::int64_t n = 0;

    /// Throws Error(BadInput) unless n >= 2, m1, m2 >= 1 and both are prime to n.
    void validate() const;

    friend bool operator==(const Singularity&, const Singularity&) = default;
};

/// Numerical data of the minimal resolution of a singularity.
///
/// The exceptional chain C_1..C_L sits between the formal branches C_0
/// (multiplicity mu_0 = m2) and C_{L+1} (multiplicity mu_{L+1} = m1), with
/// C_l^2 = -b_l. Node y_l is the point C_l meets C_{l+1}, 0 <= l <= L.
struct ResolutionData {
    Singularity sing;
    std::int64_t r = 0;       // 0 < r < n with m1 + r m2 = 0 mod n
    JHExpansion jh;           // expansion of n / r
    std::vector<std::int64_t> mu;  // mu_0 .. mu_{L+1}
    std::int64_t alpha1 = 0;  // m1^{-1} mod n
    std::int64_t alpha2 = 0;  // m2^{-1} mod n
    std::int64_t m = 0;       // gcd(m1, m2)
    std::int64_t M = 0;       // lcm(m1, m2)

    std::int64_t length() const { return static_cast<std::int64_t>(jh.length()); }
    std::int64_t n() const { return sing.n; }
    std::int64_t r_at(std::int64_t l) const { return jh.r_at(l); }
    std::int64_t b_at(std::int64_t l) const { return jh.b_at(l); }
    std::int64_t mu_at(std::int64_t l) const { return mu.at(static_cast<std::size_t>(l)); }
    /// mu_1, the multiplicity adjacent to the m2-branch.
    std::int64_t mu_first() const { return mu_at(1); }
    /// mu_L, the multiplicity adjacent to the m1-branch.
    std::int64_t mu_last() const { return mu_at(length()); }
};

ResolutionData resolve(const Singularity& sing);

/// Eigenvalue exponents of the local coordinates at a node y_l:
/// [xi](z_l) = xi^{z_exponent} z_l and [xi](w_l) = xi^{w_exponent} w_l.
struct NodeEigen {
    std::int64_t z_exponent = 0;  // alpha1 * r_{l-1} mod n
    std::int64_t w_exponent = 0;  // -alpha1 * r_l mod n
};

/// nodes[l] describes y_l, 0 <= l <= L. The chart numbered l (1-based) in the
/// chart description of the resolution is centred at y_{l-1}.
struct NodeEigenData {
    std::int64_t n = 0;
    std::vector<NodeEigen> nodes;
};

NodeEigenData node_eigen_data(const ResolutionData& res);

/// P_{-1} .. P_L with P_{-1} = 0, P_0 = 1, P_l = b_l P_{l-1} - P_{l-2}.
/// These satisfy r_l = P_l r_0 (mod n).
std::vector<BigInt> universal_polys(const ResolutionData& res);

/// True iff mu strictly decreases to m, stays at m, then strictly increases to
/// m1, and some exceptional curve (1 <= l <= L) has multiplicity m. Either
/// monotone segment may be empty.
bool is_stable(const ResolutionData& res);

struct StableProfile {
    std::int64_t mu_first = 0;
    std::int64_t mu_last = 0;
    std::int64_t witness_n = 0;  // the second of the two confirming degrees
};

/// (mu_1, mu_L) shared by every stable n in the class `residue` mod lcm(m1, m2).
/// Walks the class upwards until two consecutive members are both stable and
/// agree. Throws Error(BadInput) when the class is not invertible.
StableProfile stabilized_profile(std::int64_t m1, std::int64_t m2, std::int64_t residue);

}  // namespace tamefiber
