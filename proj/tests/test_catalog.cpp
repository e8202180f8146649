#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "tamefiber/catalog.hpp"
#include "tamefiber/errors.hpp"
#include "tamefiber/fiber.hpp"

using namespace tamefiber;

namespace {

ErrorKind lookup_kind(const std::string& id) {
    try {
        lookup(id);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::BadInput;
}

std::vector<std::int64_t> sorted_mults(const FiberGraph& g) {
    std::vector<std::int64_t> m;
    for (const auto& v : g.vertices()) m.push_back(v.mult);
    std::sort(m.begin(), m.end());
    return m;
}

}  // namespace

TEST_CASE("catalog ids") {
    auto id = FiberTypeId::parse("kodaira:In*:3");
    CHECK(id.family == "kodaira");
    CHECK(id.name == "In*");
    CHECK(id.parameter == 3);
    CHECK(id.to_string() == "kodaira:In*:3");
    CHECK(lookup_kind("kodaira:V") == ErrorKind::UnknownType);
    CHECK(lookup_kind("kodaira:In") == ErrorKind::UnknownType);
    CHECK(lookup_kind("kodaira:IV:2") == ErrorKind::UnknownType);
    CHECK(lookup_kind("kodaira:In:x") == ErrorKind::UnknownType);
    CHECK(lookup_kind("ogg:33") == ErrorKind::UnknownType);
    CHECK(lookup_kind("weierstrass:IV") == ErrorKind::UnknownType);
    CHECK(lookup_kind("IV") == ErrorKind::UnknownType);
}

TEST_CASE("catalog graphs") {
    auto iv = lookup("kodaira:IV");
    CHECK(sorted_mults(iv) == std::vector<std::int64_t>{1, 1, 1, 3});
    CHECK(iv.edges().size() == 3);
    auto ogg = lookup("ogg:4");
    std::vector<std::int64_t> m;
    for (const auto& v : ogg.vertices()) m.push_back(v.mult);
    CHECK(m == std::vector<std::int64_t>{1, 2, 3, 4, 2, 2, 1});
    CHECK(ogg.edges().size() == 6);
    auto smooth = lookup("kodaira:In:0");
    CHECK(smooth.vertices().size() == 1);
    CHECK(smooth.vertices()[0].genus == 1);
    CHECK(smooth.edges().empty());
    CHECK(lookup("kodaira:I").vertices().size() == 1);
    CHECK(lookup("kodaira:In:1").edges().size() == 1);
    CHECK(lookup("kodaira:In*:2").vertices().size() == 7);
    CHECK(lookup("kodaira:In*:0").vertices().size() == 5);
}

TEST_CASE("catalog graphs give integral self-intersections and genus 1 or 2") {
    std::vector<std::string> ids{"kodaira:I", "kodaira:I*", "kodaira:II", "kodaira:II*", "kodaira:III",
                                 "kodaira:III*", "kodaira:IV", "kodaira:IV*", "ogg:4"};
    for (int k = 1; k <= 4; ++k) {
        ids.push_back("kodaira:In:" + std::to_string(k));
        ids.push_back("kodaira:In*:" + std::to_string(k));
    }
    for (const auto& id : ids) {
        auto g = lookup(id);
        const std::int64_t expected = id == "ogg:4" ? 2 : 1;
        int seen = 0;
        for (std::int64_t n = 2; seen < 12; ++n) {
            if (std::gcd(n, g.lcm()) != 1) continue;
            ++seen;
            INFO(id << " n=" << n);
            CHECK(h1_character(g, n).total == expected);
        }
    }
}

TEST_CASE("catalog list") {
    auto list = catalog_list();
    CHECK(list.size() == 11);
    for (const auto& e : list) {
        if (e.id.find("<n>") != std::string::npos) continue;
        CHECK_NOTHROW(lookup(e.id));
    }
}
