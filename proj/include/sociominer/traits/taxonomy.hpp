#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace sociominer::traits {

inline constexpr std::size_t kTraitCount = 52;

enum class TraitGroup { dimension, facet, need, value };

struct TraitDescriptor {
    std::string_view key;
    std::string_view display_name;
    TraitGroup group;
    std::string_view parent; // owning dimension key, facets only
};

// The 52-trait profile: 5 dimensions, 30 facets (6 per dimension),
// 12 needs, 5 values. Canonical order: dimensions, then facets grouped
// by dimension, then needs, then values; alphabetical within a block.
const std::array<TraitDescriptor, kTraitCount>& taxonomy();

std::optional<std::size_t> trait_index(std::string_view key);
const TraitDescriptor& trait_at(std::size_t index);

} // namespace sociominer::traits
