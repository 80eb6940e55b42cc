#pragma once

#include <cstdint>

namespace graphmodel {

/// Largest vertex count accepted by graph enumeration unless overridden.
inline constexpr int kDefaultEnumerationBudget = 5;
/// Enumeration refuses anything above this, whatever the budget says.
inline constexpr int kEnumerationHardCap = 8;
/// Largest vertex count accepted by subobject counting.
inline constexpr int kSubobjectVertexBudget = 20;
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// Search-node budget used when callers do not pass one explicitly.
/// Starts at kDefaultNodeBudget; the CLI overrides it from GRAPHMODEL_BUDGET.
std::uint64_t default_node_budget() noexcept;
void set_default_node_budget(std::uint64_t nodes) noexcept;

}  // namespace graphmodel
