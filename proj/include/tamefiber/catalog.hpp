#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamefiber/fiber.hpp"

namespace tamefiber {

struct FiberTypeId {
    std::string family;  // "kodaira" or "ogg"
    std::string name;    // I, I*, In, In*, II, II*, III, III*, IV, IV*, 4
    std::optional<std::int64_t> parameter;

    /// "kodaira:IV", "kodaira:In*:3", "ogg:4". Throws Error(UnknownType).
    static FiberTypeId parse(const std::string& text);
    std::string to_string() const;
};

/// Throws Error(UnknownType) for names outside the catalog or a missing or
/// superfluous parameter. In with parameter 0 is the smooth fiber I, and
/// In* with parameter 0 is I*.
FiberGraph lookup(const FiberTypeId& id);
FiberGraph lookup(const std::string& id);

struct CatalogEntry {
    std::string id;           // e.g. "kodaira:In*:<n>"
    std::string description;
};

std::vector<CatalogEntry> catalog_list();

}  // namespace tamefiber
