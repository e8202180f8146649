#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tamefiber/bigint.hpp"
#include "tamefiber/fiber.hpp"

namespace tamefiber {

/// lcm of the multiplicities of principal components: positive genus, or
/// at least three edge ends (loops count twice). 1 if there are none.
std::int64_t principal_lcm(const FiberGraph& g);

/// ((-a) mod n) / n for each character exponent a, with multiplicity,
/// ascending.
std::vector<BigRat> candidate_jumps(const CharacterMultiset& ch);

struct JumpOptions {
    int sweeps = 3;
    std::int64_t n_min = 1000;
    std::int64_t residue = 1;  // class of n modulo lcm
    /// When set, a second batch of sweeps in this class must agree too.
    std::optional<std::int64_t> cross_check_residue;
};

struct JumpSet {
    std::vector<BigRat> jumps;  // ascending, with repetition
    std::int64_t n_tilde = 1;
    std::vector<std::int64_t> witnesses;
};

/// The K degrees used by compute_jumps: the smallest members of the class
/// `residue` mod lcm above max(2 n_tilde lcm, n_min), skipping degrees not
/// prime to lcm.
std::vector<std::int64_t> sweep_degrees(const FiberGraph& g, const JumpOptions& opt, std::int64_t residue);

/// Rounds every candidate to the nearest k / n_tilde, requiring the error
/// to be at most 1/n (Error(ToleranceExceeded) otherwise). A candidate that
/// rounds up to 1 raises Error(InconsistentRounding).
std::vector<BigRat> round_candidates(const std::vector<BigRat>& raw, std::int64_t n_tilde, std::int64_t n);

/// Throws Error(InconsistentRounding) when the sweeps disagree.
JumpSet compute_jumps(const FiberGraph& g, const JumpOptions& opt = {});

}  // namespace tamefiber
