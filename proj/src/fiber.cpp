#include "tamefiber/fiber.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "tamefiber/errors.hpp"
#include "tamefiber/resolution.hpp"
#include "tamefiber/singtrace.hpp"

namespace tamefiber {

namespace {

void invalid(const std::string& msg) { throw Error(ErrorKind::ValidationError, msg); }

// The (m1, m2) orientation: m1 belongs to the lexicographically larger id.
struct OrientedEdge {
    std::size_t big;
    std::size_t small;
};

OrientedEdge orient(const FiberGraph& g, std::pair<std::size_t, std::size_t> e) {
    const auto& v = g.vertices();
    if (v[e.first].id > v[e.second].id) return {e.first, e.second};
    return {e.second, e.first};
}

Singularity edge_singularity(const FiberGraph& g, const OrientedEdge& e, std::int64_t n) {
    return {g.vertices()[e.big].mult, g.vertices()[e.small].mult, n};
}

void require_admissible(const FiberGraph& g, std::int64_t n) {
    if (n < 2 || std::gcd(n, g.lcm()) != 1) {
        throw Error(ErrorKind::BadInput,
                    "n = " + std::to_string(n) + " must be >= 2 and prime to lcm " + std::to_string(g.lcm()));
    }
}

std::int64_t parse_int(const std::string& s, int line) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad integer '" + s + "'");
    }
}

}  // namespace

FiberGraph::FiberGraph(std::vector<FiberVertex> vertices, const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) invalid("graph has no vertices");
    bool has_reduced = false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (v.id.empty()) invalid("empty vertex id");
        if (v.genus < 0) invalid("vertex " + v.id + " has negative genus");
        if (v.mult < 1) invalid("vertex " + v.id + " has multiplicity < 1");
        if (!index_.emplace(v.id, i).second) invalid("duplicate vertex id " + v.id);
        lcm_ = std::lcm(lcm_, v.mult);
        has_reduced = has_reduced || v.mult == 1;
    }
    if (!has_reduced) invalid("no component of multiplicity 1");
    for (const auto& [a, b] : edges) {
        auto ia = index_.find(a), ib = index_.find(b);
        if (ia == index_.end()) invalid("edge references unknown vertex " + a);
        if (ib == index_.end()) invalid("edge references unknown vertex " + b);
        edges_.emplace_back(ia->second, ib->second);
    }
    // Connectivity by union-find.
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges_) parent[find(a)] = find(b);
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
        if (find(i) != find(0)) invalid("graph is not connected: " + vertices_[i].id + " is cut off from " + vertices_[0].id);
    }
}

std::size_t FiberGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorKind::BadInput, "unknown vertex " + id);
    return it->second;
}

std::int64_t FiberGraph::degree(std::size_t i) const {
    std::int64_t d = 0;
    for (const auto& [a, b] : edges_) d += (a == i) + (b == i);
    return d;
}

std::vector<std::pair<std::string, std::string>> FiberGraph::edge_ids() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : edges_) out.emplace_back(vertices_[a].id, vertices_[b].id);
    return out;
}

std::string FiberGraph::to_text() const {
    std::ostringstream os;
    for (const auto& v : vertices_) os << "vertex " << v.id << " genus=" << v.genus << " mult=" << v.mult << "\n";
    for (const auto& [a, b] : edges_) os << "edge " << vertices_[a].id << " " << vertices_[b].id << "\n";
    return os.str();
}

FiberGraph parse_graph(const std::string& text) {
    std::vector<FiberVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + why);
        };
        if (tok[0] == "vertex") {
            if (tok.size() != 4) fail("expected 'vertex <id> genus=<int> mult=<int>'");
            FiberVertex v;
            v.id = tok[1];
            bool seen_genus = false, seen_mult = false;
            for (std::size_t i = 2; i < 4; ++i) {
                const auto eq = tok[i].find('=');
                if (eq == std::string::npos) fail("expected key=value, got '" + tok[i] + "'");
                const std::string key = tok[i].substr(0, eq);
                const std::int64_t val = parse_int(tok[i].substr(eq + 1), line);
                if (key == "genus" && !seen_genus) {
                    v.genus = val;
                    seen_genus = true;
                } else if (key == "mult" && !seen_mult) {
                    v.mult = val;
                    seen_mult = true;
                } else {
                    fail("unexpected attribute '" + key + "'");
                }
            }
            if (v.genus < 0) fail("genus must be >= 0");
            if (v.mult < 1) fail("mult must be >= 1");
            vertices.push_back(std::move(v));
        } else if (tok[0] == "edge") {
            if (tok.size() != 3) fail("expected 'edge <id> <id>'");
            edges.emplace_back(tok[1], tok[2]);
        } else {
            fail("unknown directive '" + tok[0] + "'");
        }
    }
    return FiberGraph(std::move(vertices), edges);
}

FiberGraph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::BadInput, "cannot open graph file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

FiberGraph subdivide_edge(const FiberGraph& g, std::size_t edge_index, std::int64_t mult, const std::string& new_id) {
    auto edges = g.edge_ids();
    if (edge_index >= edges.size()) throw Error(ErrorKind::BadInput, "edge index out of range");
    auto vertices = g.vertices();
    vertices.push_back({new_id, 0, mult});
    const auto [a, b] = edges[edge_index];
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
    edges.emplace_back(a, new_id);
    edges.emplace_back(new_id, b);
    return FiberGraph(std::move(vertices), edges);
}

std::map<std::string, std::int64_t> self_intersections(const FiberGraph& g, std::int64_t n) {
    require_admissible(g, n);
    std::vector<std::int64_t> ends(g.vertices().size(), 0);
    for (const auto& e : g.edges()) {
        const OrientedEdge oe = orient(g, e);
        const ResolutionData res = resolve(edge_singularity(g, oe, n));
        ends[oe.small] += res.mu_first();
        ends[oe.big] += res.mu_last();
    }
    std::map<std::string, std::int64_t> out;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        const auto& v = g.vertices()[i];
        if (ends[i] % v.mult != 0) {
            throw Error(ErrorKind::NonIntegralSelfIntersection,
                        "vertex " + v.id + ": multiplicity " + std::to_string(v.mult) +
                            " does not divide the adjacent chain ends " + std::to_string(ends[i]) + " at n = " +
                            std::to_string(n));
        }
        out[v.id] = -ends[i] / v.mult;
    }
    return out;
}

GroupRingElement total_trace(const FiberGraph& g, std::int64_t n) {
    const auto c2 = self_intersections(g, n);
    GroupRingElement out(n);
    for (const auto& v : g.vertices()) out += vertex_trace(v.mult, v.genus, c2.at(v.id), n);
    for (const auto& e : g.edges()) out += trace_polynomial(resolve(edge_singularity(g, orient(g, e), n)));
    return out;
}

CharacterMultiset h1_character(const FiberGraph& g, std::int64_t n) {
    GroupRingElement h1 = GroupRingElement::constant(n, 1) - total_trace(g, n);
    CharacterMultiset out;
    out.n = n;
    for (const auto& [e, c] : h1.terms()) {
        if (c < 0) {
            throw Error(ErrorKind::NegativeCharacterCoefficient,
                        "coefficient " + c.get_str() + " at exponent " + std::to_string(e) + " for n = " + std::to_string(n));
        }
        if (!c.fits_slong_p()) throw Error(ErrorKind::BadInput, "character multiplicity overflows");
        out.exponents[e] = c.get_si();
        out.total += c.get_si();
    }
    return out;
}

}  // namespace tamefiber
