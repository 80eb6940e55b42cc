#include "graphmodel/config.hpp"

#include <atomic>

namespace graphmodel {

namespace {
std::atomic<std::uint64_t> node_budget{kDefaultNodeBudget};
}

std::uint64_t default_node_budget() noexcept { return node_budget.load(std::memory_order_relaxed); }

void set_default_node_budget(std::uint64_t nodes) noexcept {
  node_budget.store(nodes, std::memory_order_relaxed);
}

}  // namespace graphmodel
