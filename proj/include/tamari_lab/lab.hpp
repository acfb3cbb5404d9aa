#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "tamari_lab/census.hpp"
#include "tamari_lab/tamari.hpp"

namespace tamari_lab {

// Posets up to this size are safe on a desktop; larger n needs an explicit
// opt-in (TAMARI_LAB_LIMIT or --limit), since the reachability bitsets grow
// like the square of the Catalan numbers.
inline constexpr int kDefaultMaxN = 10;

// Reads TAMARI_LAB_LIMIT; falls back when unset or unparsable.
int limit_from_env(int fallback = kDefaultMaxN);

// Shared workspace: caches Tamari posets and per-size interval censuses.
// Cached objects are immutable once published; the cache itself is locked, so
// a Lab can be used from several threads (parallel kernels prebuild the
// posets they need and then only read).
class Lab {
 public:
  explicit Lab(int max_n = kDefaultMaxN) : max_n_(max_n) {}
  ~Lab();

  int max_n() const { return max_n_; }
  void set_max_n(int n) { max_n_ = n; }

  // SemanticError when n < 1; LimitError when n > max_n().
  const TamariPoset& poset(int n);

  // Full interval sweep for size n (parallel kernel), cached.
  const IntervalCensus& census(int n);

 private:
  void check_limit(int n) const;

  std::mutex mu_;
  int max_n_;
  std::map<int, std::unique_ptr<const TamariPoset>> posets_;
  std::map<int, std::unique_ptr<const IntervalCensus>> censuses_;
};

}  // namespace tamari_lab
