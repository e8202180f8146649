#pragma once

#include <cstdint>
#include <vector>

#include "tamefiber/bigint.hpp"
#include "tamefiber/cyclotomic.hpp"
#include "tamefiber/group_ring.hpp"
#include "tamefiber/resolution.hpp"

namespace tamefiber {

struct SingularTrace {
    ResolutionData res;
    GroupRingElement trace;
};

/// Denominator-free trace of the singularity as an element of Z[Z/n].
///
/// Sum over the nodes of the product terms
///   sum_{i<mu_l} sum_{j<mu_{l+1}} chi^{-r_l i + r_{l-1} j}
/// minus, per exceptional curve C_j, the combined correction
///   sum_{k<mu_j} sum_{t<=b_j(mu_j-k)-2} chi^{r_{j-2} k - r_{j-1}(mu_{j-1}-1) + r_{j-1} t}
/// where chi = xi^{alpha1}. Valid at every xi, primitive or not.
GroupRingElement trace_polynomial(const ResolutionData& res);

SingularTrace singular_trace(const Singularity& sing);

/// Coefficient sequences of the closed form, indexed by r before the
/// exponent maps r -> alpha2 r, alpha1 r, alpha r are applied.
struct ClosedFormCoefficients {
    std::vector<std::int64_t> y;  // mu_1 - ceil(r mu_1 / mu_0), r < mu_0
    std::vector<std::int64_t> z;  // mu_L - ceil(r mu_L / mu_{L+1}), r < mu_{L+1}
    std::int64_t w_count = 0;     // m terms, each with coefficient -1
};

/// Throws Error(NotStable) unless is_stable(res).
ClosedFormCoefficients closed_form_coefficients(const ResolutionData& res);

/// Large-n closed form of the trace. Throws Error(NotStable) on a chain
/// that has not reached the stable pattern.
GroupRingElement trace_closed_form(const ResolutionData& res);

/// Fixed-point evaluation sum_l Tr_{y_l} at zeta_n^power, computed with
/// honest denominators in Q(zeta_n). `power` must be prime to n.
CyclotomicNumber trace_oracle(const ResolutionData& res, std::int64_t power);

/// Contribution of a component of multiplicity `mult`, genus `genus` and
/// self-intersection `self_int`:
///   sum_{k<mult} xi^{alpha k} ((mult - k) self_int + 1 - genus),
/// alpha = mult^{-1} mod n.
GroupRingElement vertex_trace(std::int64_t mult, std::int64_t genus, std::int64_t self_int, std::int64_t n);

}  // namespace tamefiber
