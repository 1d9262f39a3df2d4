#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace termgraph {

struct TermId {
  std::uint32_t value = 0;

  constexpr std::size_t index() const noexcept { return value; }
  friend constexpr auto operator<=>(TermId, TermId) = default;
};

struct ComponentId {
  std::uint32_t value = 0;

  constexpr std::size_t index() const noexcept { return value; }
  friend constexpr auto operator<=>(ComponentId, ComponentId) = default;
};

}  // namespace termgraph

template <>
struct std::hash<termgraph::TermId> {
  std::size_t operator()(termgraph::TermId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
