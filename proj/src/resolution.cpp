#include "tamefiber/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "tamefiber/errors.hpp"

namespace tamefiber {

namespace {

std::string describe(const Singularity& s) {
    return "(" + std::to_string(s.m1) + "," + std::to_string(s.m2) + "," + std::to_string(s.n) + ")";
}

}  // namespace

void Singularity::validate() const {
    if (n < 2 || m1 < 1 || m2 < 1) {
        throw Error(ErrorKind::BadInput, "singularity " + describe(*this) + " needs n >= 2 and positive multiplicities");
    }
    if (std::gcd(n, m1) != 1 || std::gcd(n, m2) != 1) {
        throw Error(ErrorKind::BadInput, "singularity " + describe(*this) + " needs n prime to m1 and m2");
    }
}

ResolutionData resolve(const Singularity& sing) {
    sing.validate();
    ResolutionData res;
    res.sing = sing;
    const std::int64_t n = sing.n;
    res.alpha1 = mod_inverse(sing.m1, n);
    res.alpha2 = mod_inverse(sing.m2, n);
    res.r = mod_floor(-mul_mod(sing.m1, res.alpha2, n), n);
    res.jh = jh_expand(n, res.r);
    res.m = std::gcd(sing.m1, sing.m2);
    res.M = std::lcm(sing.m1, sing.m2);

    const std::int64_t L = res.length();
    res.mu.reserve(static_cast<std::size_t>(L + 2));
    res.mu.push_back(sing.m2);
    res.mu.push_back((sing.m1 + res.r * sing.m2) / n);
    for (std::int64_t l = 1; l <= L; ++l) {
        res.mu.push_back(res.b_at(l) * res.mu_at(l) - res.mu_at(l - 1));
    }
    if (res.mu.back() != sing.m1) {
        throw Error(ErrorKind::BadInput, "multiplicity chain of " + describe(sing) + " does not close at m1");
    }
    return res;
}

NodeEigenData node_eigen_data(const ResolutionData& res) {
    NodeEigenData out;
    out.n = res.n();
    for (std::int64_t l = 0; l <= res.length(); ++l) {
        out.nodes.push_back({mul_mod(res.alpha1, res.r_at(l - 1), out.n),
                             mod_floor(-mul_mod(res.alpha1, res.r_at(l), out.n), out.n)});
    }
    return out;
}

std::vector<BigInt> universal_polys(const ResolutionData& res) {
    std::vector<BigInt> p{BigInt(0), BigInt(1)};
    for (std::int64_t l = 1; l <= res.length(); ++l) {
        const std::size_t i = p.size();
        p.push_back(BigInt(static_cast<long>(res.b_at(l))) * p[i - 1] - p[i - 2]);
    }
    return p;
}

bool is_stable(const ResolutionData& res) {
    const auto& mu = res.mu;
    std::size_t i = 0;
    while (i + 1 < mu.size() && mu[i + 1] < mu[i]) ++i;
    if (mu[i] != res.m) return false;
    while (i + 1 < mu.size() && mu[i + 1] == mu[i]) ++i;
    while (i + 1 < mu.size() && mu[i + 1] > mu[i]) ++i;
    if (i + 1 != mu.size()) return false;
    // The minimum must sit on an exceptional curve. Very short chains (n below
    // max(m1, m2)) can reach m only at a branch, and their end multiplicities
    // differ from the ones shared by the rest of the residue class.
    return std::find(mu.begin() + 1, mu.end() - 1, res.m) != mu.end() - 1;
}

StableProfile stabilized_profile(std::int64_t m1, std::int64_t m2, std::int64_t residue) {
    if (m1 < 1 || m2 < 1) {
        throw Error(ErrorKind::BadInput, "stabilized_profile expects positive multiplicities");
    }
    const std::int64_t M = std::lcm(m1, m2);
    const std::int64_t cls = mod_floor(residue, M);
    if (std::gcd(cls, M) != 1) {
        throw Error(ErrorKind::BadInput,
                    "residue " + std::to_string(residue) + " is not invertible modulo " + std::to_string(M));
    }
    std::optional<std::pair<std::int64_t, std::int64_t>> previous;
    // Terminates: every class eventually stabilizes and then keeps (mu_1, mu_L).
    for (std::int64_t n = cls; ; n += M) {
        if (n < 2) continue;
        const ResolutionData res = resolve({m1, m2, n});
        if (!is_stable(res)) {
            previous.reset();
            continue;
        }
        const std::pair<std::int64_t, std::int64_t> current{res.mu_first(), res.mu_last()};
        if (previous && *previous == current) {
            return {current.first, current.second, n};
        }
        previous = current;
    }
}

}  // namespace tamefiber
