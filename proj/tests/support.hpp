#pragma once

#include <random>
#include <string>
#include <vector>

#include "tamefiber/fiber.hpp"

namespace tamefiber::testing {

// Blows up a point of the fiber: either an intersection point (new curve of
// multiplicity m_u + m_v on the subdivided edge) or a smooth point of one
// component (new leaf with that component's multiplicity). The result is
// again the dual graph of an SNC fiber.
inline FiberGraph random_blowup(const FiberGraph& g, std::mt19937_64& rng) {
    const std::string id = "x" + std::to_string(g.vertices().size());
    std::uniform_int_distribution<int> coin(0, 9);
    if (!g.edges().empty() && coin(rng) < 6) {
        std::uniform_int_distribution<std::size_t> pick(0, g.edges().size() - 1);
        const std::size_t e = pick(rng);
        const auto [a, b] = g.edges()[e];
        return subdivide_edge(g, e, g.vertices()[a].mult + g.vertices()[b].mult, id);
    }
    std::uniform_int_distribution<std::size_t> pick(0, g.vertices().size() - 1);
    const auto& v = g.vertices()[pick(rng)];
    auto vertices = g.vertices();
    auto edges = g.edge_ids();
    vertices.push_back({id, 0, v.mult});
    edges.emplace_back(v.id, id);
    return FiberGraph(std::move(vertices), edges);
}

// Smallest n > floor in the class 1 mod lcm.
inline std::int64_t admissible_above(const FiberGraph& g, std::int64_t floor) {
    const std::int64_t l = g.lcm();
    return (floor / l + 1) * l + 1;
}

}  // namespace tamefiber::testing
