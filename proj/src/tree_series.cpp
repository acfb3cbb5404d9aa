#include "tamari_lab/tree_series.hpp"

#include "tamari_lab/errors.hpp"

namespace tamari_lab {

bool equal_through(const TreeSeries& a, const TreeSeries& b, int through) {
  if (a.max_size() < through || b.max_size() < through)
    throw InternalError("tree series compared beyond its truncation");
  for (const auto& [t, c] : a.terms())
    if (t.size() <= through && b.coeff(t) != c) return false;
  for (const auto& [t, c] : b.terms())
    if (t.size() <= through && a.coeff(t) != c) return false;
  return true;
}

}  // namespace tamari_lab
