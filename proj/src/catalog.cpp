#include "tamefiber/catalog.hpp"

#include <utility>

#include "tamefiber/errors.hpp"

namespace tamefiber {

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

[[noreturn]] void unknown(const std::string& what) { throw Error(ErrorKind::UnknownType, what); }

bool parameterized(const std::string& family, const std::string& name) {
    return family == "kodaira" && (name == "In" || name == "In*");
}

// Central rational curve of multiplicity `center`, with chains of given
// multiplicities hanging off it.
FiberGraph star(std::int64_t center, const std::vector<std::vector<std::int64_t>>& arms) {
    std::vector<FiberVertex> v{{"c", 0, center}};
    EdgeList e;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        std::string prev = "c";
        for (std::size_t j = 0; j < arms[i].size(); ++j) {
            std::string id = "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            v.push_back({id, 0, arms[i][j]});
            e.emplace_back(prev, id);
            prev = id;
        }
    }
    return FiberGraph(std::move(v), e);
}

FiberGraph cycle(std::int64_t len) {
    std::vector<FiberVertex> v;
    EdgeList e;
    for (std::int64_t i = 0; i < len; ++i) v.push_back({"v" + std::to_string(i + 1), 0, 1});
    for (std::int64_t i = 0; i < len; ++i) e.emplace_back(v[i].id, v[(i + 1) % len].id);
    return FiberGraph(std::move(v), e);
}

// Chain of len+1 double curves with two reduced leaves at each end.
FiberGraph d_type(std::int64_t len) {
    std::vector<FiberVertex> v;
    EdgeList e;
    for (std::int64_t i = 0; i <= len; ++i) v.push_back({"c" + std::to_string(i), 0, 2});
    for (std::int64_t i = 0; i < len; ++i) e.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
    const std::string last = "c" + std::to_string(len);
    for (int k = 1; k <= 4; ++k) {
        const std::string leaf = "l" + std::to_string(k);
        v.push_back({leaf, 0, 1});
        e.emplace_back(k <= 2 ? "c0" : last, leaf);
    }
    return FiberGraph(std::move(v), e);
}

FiberGraph ogg4() {
    const std::int64_t mults[] = {1, 2, 3, 4, 2, 2, 1};
    std::vector<FiberVertex> v;
    for (int i = 0; i < 7; ++i) v.push_back({"v" + std::to_string(i + 1), 0, mults[i]});
    EdgeList e{{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v5", "v4"}, {"v6", "v4"}, {"v7", "v4"}};
    return FiberGraph(std::move(v), e);
}

}  // namespace

FiberTypeId FiberTypeId::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) unknown("expected family:name[:parameter], got '" + text + "'");
    FiberTypeId id{parts[0], parts[1], std::nullopt};
    if (parts.size() == 3) {
        try {
            std::size_t pos = 0;
            const long long p = std::stoll(parts[2], &pos);
            if (pos != parts[2].size() || p < 0) throw std::invalid_argument(parts[2]);
            id.parameter = p;
        } catch (const std::exception&) {
            unknown("bad parameter in '" + text + "'");
        }
    }
    return id;
}

std::string FiberTypeId::to_string() const {
    return family + ":" + name + (parameter ? ":" + std::to_string(*parameter) : "");
}

FiberGraph lookup(const FiberTypeId& id) {
    if (parameterized(id.family, id.name) != id.parameter.has_value()) {
        unknown(id.to_string() + (id.parameter ? " takes no parameter" : " needs a parameter"));
    }
    if (id.family == "ogg") {
        if (id.name == "4") return ogg4();
        unknown("genus-2 type " + id.to_string() + " is not built in; supply a graph file");
    }
    if (id.family != "kodaira") unknown("unknown family '" + id.family + "'");
    const std::string& k = id.name;
    if (k == "I" || (k == "In" && *id.parameter == 0)) return FiberGraph({{"e", 1, 1}}, {});
    if (k == "In") return cycle(*id.parameter);
    if (k == "I*" || (k == "In*" && *id.parameter == 0)) return star(2, {{1}, {1}, {1}, {1}});
    if (k == "In*") return d_type(*id.parameter);
    if (k == "II") return star(6, {{1}, {2}, {3}});
    if (k == "III") return star(4, {{1}, {1}, {2}});
    if (k == "IV") return star(3, {{1}, {1}, {1}});
    if (k == "IV*") return star(3, {{2, 1}, {2, 1}, {2, 1}});
    if (k == "III*") return star(4, {{3, 2, 1}, {3, 2, 1}, {2}});
    if (k == "II*") return star(6, {{5, 4, 3, 2, 1}, {4, 2}, {3}});
    unknown("unknown Kodaira type '" + k + "'");
}

FiberGraph lookup(const std::string& id) { return lookup(FiberTypeId::parse(id)); }

std::vector<CatalogEntry> catalog_list() {
    return {
        {"kodaira:I", "smooth genus-1 curve"},
        {"kodaira:In:<n>", "cycle of n rational curves, multiplicity 1"},
        {"kodaira:I*", "multiplicity-2 curve with four reduced tails"},
        {"kodaira:In*:<n>", "chain of n+1 double curves, two reduced tails at each end"},
        {"kodaira:II", "SNC model: multiplicity-6 curve with tails 1, 2, 3"},
        {"kodaira:III", "SNC model: multiplicity-4 curve with tails 1, 1, 2"},
        {"kodaira:IV", "SNC model: multiplicity-3 curve with three reduced tails"},
        {"kodaira:IV*", "multiplicity-3 curve with three arms 2-1"},
        {"kodaira:III*", "multiplicity-4 curve with arms 3-2-1, 3-2-1, 2"},
        {"kodaira:II*", "multiplicity-6 curve with arms 5-4-3-2-1, 4-2, 3"},
        {"ogg:4", "genus 2: chain 1-2-3-4 with tails 2, 2, 1 on the multiplicity-4 curve"},
    };
}

}  // namespace tamefiber
