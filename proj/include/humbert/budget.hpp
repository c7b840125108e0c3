#ifndef HUMBERT_BUDGET_HPP
#define HUMBERT_BUDGET_HPP

#include <cstddef>
#include <cstdlib>
#include <string>

#include "humbert/error.hpp"

namespace humbert {

/// Memory cap for large interpolation tables, from HUMBERT_MEM_BUDGET_MB
/// (default 4096 MB).
inline std::size_t memory_budget_bytes() {
  std::size_t mb = 4096;
  if (const char* env = std::getenv("HUMBERT_MEM_BUDGET_MB")) {
    try {
      mb = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw DomainError(std::string("HUMBERT_MEM_BUDGET_MB is not a number: ") + env);
    }
  }
  return mb * 1024 * 1024;
}

} // namespace humbert

#endif // HUMBERT_BUDGET_HPP
