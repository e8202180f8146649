#include <doctest.h>

#include "tamefiber/catalog.hpp"
#include "tamefiber/errors.hpp"
#include "tamefiber/jumps.hpp"

using namespace tamefiber;

namespace {

std::vector<BigRat> rats(std::initializer_list<std::pair<long, long>> v) {
    std::vector<BigRat> out;
    for (auto [p, q] : v) {
        BigRat r(p, q);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("principal_lcm") {
    CHECK(principal_lcm(lookup("kodaira:IV")) == 3);
    CHECK(principal_lcm(lookup("ogg:4")) == 4);
    for (int k = 1; k <= 5; ++k) CHECK(principal_lcm(lookup("kodaira:In:" + std::to_string(k))) == 1);
    CHECK(principal_lcm(lookup("kodaira:I")) == 1);
    CHECK(principal_lcm(lookup("kodaira:II*")) == 6);
    // A loop adds two ends: a rational curve with a loop and a tail has degree 3.
    auto g = parse_graph("vertex a genus=0 mult=2\nvertex b genus=0 mult=1\nedge a a\nedge a b\n");
    CHECK(principal_lcm(g) == 2);
}

TEST_CASE("candidate_jumps") {
    CharacterMultiset a{13, {{9, 1}}, 1};
    CHECK(candidate_jumps(a) == rats({{4, 13}}));
    CharacterMultiset b{13, {{10, 1}, {4, 1}}, 2};
    CHECK(candidate_jumps(b) == rats({{3, 13}, {9, 13}}));
    CharacterMultiset c{13, {{0, 2}}, 2};
    CHECK(candidate_jumps(c) == rats({{0, 1}, {0, 1}}));
}

TEST_CASE("round_candidates") {
    CHECK(round_candidates(rats({{334, 1003}}), 3, 1003) == rats({{1, 3}}));
    CHECK(round_candidates(rats({{0, 1}}), 1, 1001) == rats({{0, 1}}));
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::UnknownType;
    };
    CHECK(kind([] { round_candidates(rats({{1, 10}}), 3, 1000); }) == ErrorKind::ToleranceExceeded);
    CHECK(kind([] { round_candidates(rats({{999, 1000}}), 3, 1000); }) == ErrorKind::InconsistentRounding);
    CHECK(kind([] { round_candidates(rats({{1, 10}}), 1, 1000); }) == ErrorKind::InconsistentRounding);
    CHECK(kind([] { round_candidates(rats({{1, 2}}), 1, 1000); }) == ErrorKind::InconsistentRounding);
}

TEST_CASE("rounding targets are unambiguous once n > 2 n_tilde") {
    // Any two distinct k/nt differ by at least 1/nt > 2/n, so at most one lies within 1/n.
    for (std::int64_t nt = 1; nt <= 12; ++nt) {
        for (std::int64_t n = 2 * nt + 1; n <= 2 * nt + 40; ++n) {
            for (std::int64_t a = 0; a < n; ++a) {
                int within = 0;
                for (std::int64_t k = 0; k <= nt; ++k) {
                    BigRat d = BigRat(a, n) - BigRat(k, nt);
                    if (abs(d) * n <= 1) ++within;
                }
                CHECK(within <= 1);
            }
        }
    }
}

TEST_CASE("sweep degrees") {
    auto g = lookup("kodaira:IV");
    JumpOptions opt;
    CHECK(sweep_degrees(g, opt, 1) == std::vector<std::int64_t>{1003, 1006, 1009});
    CHECK(sweep_degrees(g, opt, 2) == std::vector<std::int64_t>{1001, 1004, 1007});
    opt.n_min = 5;
    // 2 * n_tilde * lcm = 18 dominates a small n_min.
    CHECK(sweep_degrees(g, opt, 1).front() == 19);
    CHECK_THROWS_AS(sweep_degrees(g, opt, 3), Error);
}

TEST_CASE("compute_jumps examples") {
    auto iv = compute_jumps(lookup("kodaira:IV"));
    CHECK(iv.jumps == rats({{1, 3}}));
    CHECK(iv.n_tilde == 3);
    CHECK(iv.witnesses.size() == 3);
    CHECK(compute_jumps(lookup("kodaira:II*")).jumps == rats({{5, 6}}));
    CHECK(compute_jumps(lookup("ogg:4")).jumps == rats({{1, 4}, {3, 4}}));

    JumpOptions cross;
    cross.cross_check_residue = 2;
    auto both = compute_jumps(lookup("kodaira:IV"), cross);
    CHECK(both.jumps == rats({{1, 3}}));
    CHECK(both.witnesses.size() == 6);
}

TEST_CASE("sweep floor of 2 n_tilde lcm is enforced") {
    // A tiny n_min cannot pull the degrees below 2 n_tilde lcm = 720.
    JumpOptions opt;
    opt.n_min = 1;
    opt.sweeps = 1;
    auto g = lookup("kodaira:II*");
    auto js = compute_jumps(g, opt);
    CHECK(js.witnesses.front() > 720);
    CHECK(js.jumps == rats({{5, 6}}));
}
