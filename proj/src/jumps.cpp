#include "tamefiber/jumps.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "tamefiber/arith.hpp"
#include "tamefiber/errors.hpp"

namespace tamefiber {

namespace {

std::string show(const std::vector<BigRat>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + "}";
}

}  // namespace

std::int64_t principal_lcm(const FiberGraph& g) {
    std::int64_t out = 1;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        const auto& v = g.vertices()[i];
        if (v.genus > 0 || g.degree(i) >= 3) out = std::lcm(out, v.mult);
    }
    return out;
}

std::vector<BigRat> candidate_jumps(const CharacterMultiset& ch) {
    std::vector<BigRat> out;
    for (const auto& [e, mult] : ch.exponents) {
        BigRat q(mod_floor(-e, ch.n), ch.n);
        q.canonicalize();
        for (std::int64_t k = 0; k < mult; ++k) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> sweep_degrees(const FiberGraph& g, const JumpOptions& opt, std::int64_t residue) {
    if (opt.sweeps < 1) throw Error(ErrorKind::BadInput, "need at least one sweep");
    const std::int64_t l = g.lcm();
    const std::int64_t floor_n = std::max(2 * principal_lcm(g) * l, opt.n_min);
    const std::int64_t cls = mod_floor(residue, l);
    if (std::gcd(cls, l) != 1 && l > 1) {
        throw Error(ErrorKind::BadInput, "residue " + std::to_string(residue) + " is not prime to lcm " + std::to_string(l));
    }
    // First member of the class strictly above floor_n.
    std::int64_t n = floor_n + 1 + mod_floor(cls - (floor_n + 1), l);
    std::vector<std::int64_t> out;
    for (; static_cast<int>(out.size()) < opt.sweeps; n += l) {
        if (n >= 2 && std::gcd(n, l) == 1) out.push_back(n);
    }
    return out;
}

std::vector<BigRat> round_candidates(const std::vector<BigRat>& raw, std::int64_t n_tilde, std::int64_t n) {
    std::vector<BigRat> out;
    for (const auto& a : raw) {
        // Nearest k / n_tilde; ties cannot occur within tolerance once n > 2 n_tilde.
        BigRat scaled = a * n_tilde;
        BigInt k = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
        BigRat target(k, n_tilde);
        target.canonicalize();
        BigRat err = a - target;
        // With n_tilde = 1 the only admissible jump is 0, so any miss is a disagreement.
        if (n_tilde == 1 && (k != 0 || abs(err) * n > 1)) {
            throw Error(ErrorKind::InconsistentRounding,
                        "candidate " + a.get_str() + " does not round to 0 at n = " + std::to_string(n));
        }
        if (abs(err) * n > 1) {
            throw Error(ErrorKind::ToleranceExceeded, "candidate " + a.get_str() + " is more than 1/" + std::to_string(n) +
                                                          " from every k/" + std::to_string(n_tilde));
        }
        if (k == n_tilde) {
            throw Error(ErrorKind::InconsistentRounding,
                        "candidate " + a.get_str() + " rounds to 1, outside [0, 1) at n = " + std::to_string(n));
        }
        out.push_back(target);
    }
    std::sort(out.begin(), out.end());
    return out;
}

JumpSet compute_jumps(const FiberGraph& g, const JumpOptions& opt) {
    JumpSet out;
    out.n_tilde = principal_lcm(g);
    out.witnesses = sweep_degrees(g, opt, opt.residue);
    if (opt.cross_check_residue) {
        for (auto n : sweep_degrees(g, opt, *opt.cross_check_residue)) out.witnesses.push_back(n);
    }

    std::vector<std::future<std::vector<BigRat>>> pending;
    for (auto n : out.witnesses) {
        pending.push_back(std::async(std::launch::async, [&g, n, nt = out.n_tilde] {
            return round_candidates(candidate_jumps(h1_character(g, n)), nt, n);
        }));
    }
    std::vector<std::vector<BigRat>> results;
    for (auto& f : pending) results.push_back(f.get());

    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i] != results[0]) {
            throw Error(ErrorKind::InconsistentRounding, "n = " + std::to_string(out.witnesses[0]) + " gives " +
                                                             show(results[0]) + " but n = " +
                                                             std::to_string(out.witnesses[i]) + " gives " + show(results[i]));
        }
    }
    out.jumps = results.front();
    return out;
}

}  // namespace tamefiber
