#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tamefiber/group_ring.hpp"

namespace tamefiber {

struct FiberVertex {
    std::string id;
    std::int64_t genus = 0;
    std::int64_t mult = 1;
};

/// Dual graph of a special fiber: components with genus and multiplicity,
/// one edge per intersection point. Loops and parallel edges are allowed.
class FiberGraph {
public:
    FiberGraph() = default;
    /// Edges name vertex ids. Throws Error(ValidationError) when the graph is
    /// empty, disconnected, has no multiplicity-1 component, repeats an id or
    /// references an unknown id.
    FiberGraph(std::vector<FiberVertex> vertices, const std::vector<std::pair<std::string, std::string>>& edges);

    const std::vector<FiberVertex>& vertices() const { return vertices_; }
    /// Edges as index pairs into vertices().
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::size_t index_of(const std::string& id) const;
    /// Number of edge ends at vertex i; a loop counts twice.
    std::int64_t degree(std::size_t i) const;
    /// lcm of all multiplicities.
    std::int64_t lcm() const { return lcm_; }

    std::vector<std::pair<std::string, std::string>> edge_ids() const;
    /// Serializes in the text format accepted by parse_graph.
    std::string to_text() const;

private:
    std::vector<FiberVertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::map<std::string, std::size_t> index_;
    std::int64_t lcm_ = 1;
};

/// Line format, '#' starts a comment:
///   vertex <id> genus=<int> mult=<int>
///   edge <id> <id>
/// Throws Error(ParseError) naming the line, or Error(ValidationError).
FiberGraph parse_graph(const std::string& text);
FiberGraph load_graph(const std::string& path);

/// Replaces the edge at `edge_index` by a path through a new genus-0 vertex
/// of multiplicity `mult` named `new_id`.
FiberGraph subdivide_edge(const FiberGraph& g, std::size_t edge_index, std::int64_t mult, const std::string& new_id);

/// Vertex id -> C^2 for the degree-n pullback, keyed and ordered by id.
/// Throws Error(NonIntegralSelfIntersection) when a multiplicity does not
/// divide the sum of the adjacent chain ends.
std::map<std::string, std::int64_t> self_intersections(const FiberGraph& g, std::int64_t n);

/// Sum of the vertex and singularity contributions.
GroupRingElement total_trace(const FiberGraph& g, std::int64_t n);

struct CharacterMultiset {
    std::int64_t n = 0;
    std::map<std::int64_t, std::int64_t> exponents;  // exponent -> multiplicity >= 1
    std::int64_t total = 0;                          // genus
};

/// Characters of H^1, read off from 1 - total_trace. Throws
/// Error(NegativeCharacterCoefficient) if a coefficient is negative.
CharacterMultiset h1_character(const FiberGraph& g, std::int64_t n);

}  // namespace tamefiber
