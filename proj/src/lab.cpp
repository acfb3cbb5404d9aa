#include "tamari_lab/lab.hpp"

#include <cstdlib>
#include <string>

#include "tamari_lab/census.hpp"
#include "tamari_lab/errors.hpp"

namespace tamari_lab {

int limit_from_env(int fallback) {
  const char* raw = std::getenv("TAMARI_LAB_LIMIT");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) return fallback;
  return static_cast<int>(v);
}

Lab::~Lab() = default;

void Lab::check_limit(int n) const {
  if (n < 1) throw SemanticError("size must be >= 1");
  if (n > max_n_)
    throw LimitError("size " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(max_n_) +
                     " (raise with --limit or TAMARI_LAB_LIMIT)");
}

const TamariPoset& Lab::poset(int n) {
  check_limit(n);
  {
    std::scoped_lock lock(mu_);
    if (auto it = posets_.find(n); it != posets_.end()) return *it->second;
  }
  auto built = std::make_unique<const TamariPoset>(TamariPoset::build(n));
  std::scoped_lock lock(mu_);
  auto [it, _] = posets_.try_emplace(n, std::move(built));
  return *it->second;
}

const IntervalCensus& Lab::census(int n) {
  check_limit(n);
  {
    std::scoped_lock lock(mu_);
    if (auto it = censuses_.find(n); it != censuses_.end()) return *it->second;
  }
  auto swept =
      std::make_unique<const IntervalCensus>(census_intervals_parallel(n, *this));
  std::scoped_lock lock(mu_);
  auto [it, _] = censuses_.try_emplace(n, std::move(swept));
  return *it->second;
}

}  // namespace tamari_lab
