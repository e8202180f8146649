#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "tamefiber/arith.hpp"
#include "tamefiber/catalog.hpp"
#include "tamefiber/errors.hpp"
#include "tamefiber/fiber.hpp"

using namespace tamefiber;

namespace {

const char* kTypeIV = R"(# Kodaira IV as an SNC model
vertex c genus=0 mult=3
vertex a genus=0 mult=1
vertex b genus=0 mult=1
vertex d genus=0 mult=1   # third tail
edge c a
edge c b
edge d c
)";

const char* kOgg4 = R"(vertex v1 genus=0 mult=1
vertex v2 genus=0 mult=2
vertex v3 genus=0 mult=3
vertex v4 genus=0 mult=4
vertex v5 genus=0 mult=2
vertex v6 genus=0 mult=2
vertex v7 genus=0 mult=1
edge v1 v2
edge v2 v3
edge v3 v4
edge v5 v4
edge v6 v4
edge v7 v4
)";

ErrorKind parse_error_kind(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::UnknownType;
}

GroupRingElement poly(std::int64_t n, std::initializer_list<std::pair<std::int64_t, long>> terms) {
    GroupRingElement g(n);
    for (auto [e, c] : terms) g.add_term(e, c);
    return g;
}

}  // namespace

TEST_CASE("parse_graph") {
    auto g = parse_graph(kTypeIV);
    CHECK(g.vertices().size() == 4);
    CHECK(g.edges().size() == 3);
    CHECK(g.lcm() == 3);
    CHECK(g.degree(g.index_of("c")) == 3);

    auto loop = parse_graph("vertex a genus=0 mult=1\nedge a a\n");
    CHECK(loop.edges().size() == 1);
    CHECK(loop.degree(0) == 2);

    auto round_trip = parse_graph(g.to_text());
    CHECK(round_trip.edge_ids() == g.edge_ids());
}

TEST_CASE("parse_graph errors") {
    CHECK(parse_error_kind("vertex a genus=0 mult=1\nvertex b genus=0 mult=1\n") == ErrorKind::ValidationError);
    CHECK(parse_error_kind("vertex a genus=0 mult=2\n") == ErrorKind::ValidationError);
    CHECK(parse_error_kind("vertex a genus=0 mult=1\nvertex a genus=0 mult=1\n") == ErrorKind::ValidationError);
    CHECK(parse_error_kind("vertex a genus=0 mult=1\nedge a b\n") == ErrorKind::ValidationError);
    CHECK(parse_error_kind("") == ErrorKind::ValidationError);
    CHECK(parse_error_kind("vertex a genus=0\n") == ErrorKind::ParseError);
    CHECK(parse_error_kind("vertex a genus=x mult=1\n") == ErrorKind::ParseError);
    CHECK(parse_error_kind("vertex a genus=-1 mult=1\n") == ErrorKind::ParseError);
    CHECK(parse_error_kind("vertex a genus=0 mult=0\n") == ErrorKind::ParseError);
    CHECK(parse_error_kind("vertex a colour=0 mult=1\n") == ErrorKind::ParseError);
    CHECK(parse_error_kind("node a\n") == ErrorKind::ParseError);
    CHECK(parse_error_kind("vertex a genus=0 mult=1\nedge a\n") == ErrorKind::ParseError);
    try {
        parse_graph("# header\n\nvertex a genus=0 mult=1\nbogus\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("self intersections") {
    auto iv = parse_graph(kTypeIV);
    for (std::int64_t n : {7, 13, 1003}) {
        auto c2 = self_intersections(iv, n);
        CHECK(c2.at("c") == -1);
    }
    auto ogg = parse_graph(kOgg4);
    CHECK(self_intersections(ogg, 13).at("v3") == -1);
    // v4 meets chain ends 3 + 2 + 2 + 1 = 8 with multiplicity 4.
    CHECK(self_intersections(ogg, 13).at("v4") == -2);
    auto elliptic = parse_graph("vertex e genus=1 mult=1\n");
    CHECK(self_intersections(elliptic, 5).at("e") == 0);
    CHECK_THROWS_AS(self_intersections(iv, 9), Error);

    // Two reduced curves meeting a double curve once each cannot be a fiber.
    auto bad = parse_graph("vertex a genus=0 mult=1\nvertex b genus=0 mult=2\nedge a b\n");
    try {
        self_intersections(bad, 7);
        FAIL("expected NonIntegralSelfIntersection");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegralSelfIntersection);
    }
}

TEST_CASE("total trace examples") {
    auto iv = parse_graph(kTypeIV);
    for (std::int64_t n : {7, 13, 31}) {
        const std::int64_t a3 = mod_inverse(3, n);
        CHECK(total_trace(iv, n) == poly(n, {{0, 1}, {a3, -1}}));
    }
    auto ogg = parse_graph(kOgg4);
    for (std::int64_t n : {13, 25, 37}) {
        const std::int64_t a4 = mod_inverse(4, n);
        CHECK(total_trace(ogg, n) == poly(n, {{0, 1}, {a4, -1}, {3 * a4, -1}}));
    }
    CHECK(total_trace(parse_graph("vertex e genus=1 mult=1\n"), 11).is_zero());
}

TEST_CASE("h1 characters") {
    auto iv = parse_graph(kTypeIV);
    auto ch = h1_character(iv, 13);
    CHECK(ch.total == 1);
    CHECK(ch.exponents == std::map<std::int64_t, std::int64_t>{{9, 1}});

    auto ogg = h1_character(parse_graph(kOgg4), 13);
    CHECK(ogg.total == 2);
    CHECK(ogg.exponents == std::map<std::int64_t, std::int64_t>{{4, 1}, {10, 1}});

    auto good = h1_character(parse_graph("vertex e genus=1 mult=1\n"), 7);
    CHECK(good.exponents == std::map<std::int64_t, std::int64_t>{{0, 1}});

    // A genus-3 reduced curve crossing itself: characters 0 with multiplicity 4.
    auto nodal = h1_character(parse_graph("vertex e genus=3 mult=1\nedge e e\n"), 5);
    CHECK(nodal.exponents == std::map<std::int64_t, std::int64_t>{{0, 4}});
}

TEST_CASE("total trace ignores labels and edge order") {
    auto g = parse_graph(kOgg4);
    auto relabeled = parse_graph(R"(vertex z7 genus=0 mult=1
vertex a genus=0 mult=2
vertex q genus=0 mult=3
vertex b4 genus=0 mult=4
vertex y genus=0 mult=2
vertex c genus=0 mult=2
vertex m genus=0 mult=1
edge b4 m
edge c b4
edge b4 y
edge q b4
edge a q
edge a z7
)");
    for (std::int64_t n : {13, 49, 97}) CHECK(total_trace(g, n) == total_trace(relabeled, n));
}

TEST_CASE("random blow-ups stay integral with nonnegative characters") {
    std::mt19937_64 rng(31337);
    const char* seeds[] = {"kodaira:IV", "kodaira:I*", "kodaira:In:3", "kodaira:III", "ogg:4", "kodaira:I"};
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        FiberGraph g = lookup(seeds[trial % 6]);
        const int steps = 1 + trial % 3;
        for (int s = 0; s < steps; ++s) g = testing::random_blowup(g, rng);
        if (g.lcm() > 2000) continue;
        const auto n = testing::admissible_above(g, 50);
        auto ch = h1_character(g, n);
        for (auto [e, m] : ch.exponents) CHECK(m >= 1);
        ++checked;
    }
    CHECK(checked >= 40);
}
