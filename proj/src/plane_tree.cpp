#include "tamari_lab/plane_tree.hpp"

#include <map>
#include <mutex>
#include <string>

#include "tamari_lab/errors.hpp"

namespace tamari_lab {

int PlaneTree::leaf_count() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const auto& c : children) total += c.leaf_count();
  return total;
}

int PlaneTree::internal_count() const {
  if (is_leaf()) return 0;
  int total = 1;
  for (const auto& c : children) total += c.internal_count();
  return total;
}

bool valences_ok(const PlaneTree& t) {
  if (t.is_leaf()) return true;
  if (t.children.size() < 2) return false;
  for (const auto& c : t.children)
    if (!valences_ok(c)) return false;
  return true;
}

namespace {

using Cache = std::map<int, std::vector<PlaneTree>>;

// Appends children holding `remaining` more leaves to `partial`; every
// complete choice with >= 2 children becomes one tree. cache[m] must already
// hold the internal-rooted trees with m leaves for all m < current target.
void build_children(const Cache& cache, std::vector<PlaneTree>& out,
                    std::vector<PlaneTree>& partial, int remaining) {
  if (remaining == 0) {
    if (partial.size() >= 2) out.push_back(PlaneTree{partial});
    return;
  }
  for (int take = 1; take <= remaining; ++take) {
    // A first child holding every leaf would leave the root with one child;
    // skipping it here also keeps the lookups below strictly in the cache.
    if (take == remaining && partial.empty()) continue;
    if (take == 1) {
      partial.push_back(PlaneTree{});
      build_children(cache, out, partial, remaining - 1);
      partial.pop_back();
    } else {
      for (const auto& sub : cache.at(take)) {
        partial.push_back(sub);
        build_children(cache, out, partial, remaining - take);
        partial.pop_back();
      }
    }
  }
}

}  // namespace

const std::vector<PlaneTree>& enumerate_plane_trees(int n) {
  if (n < 1) throw SemanticError("plane tree enumeration needs n >= 1");
  static std::mutex mu;
  static Cache cache;  // keyed by leaf count, internal root (so >= 2 leaves)
  std::scoped_lock lock(mu);
  for (int m = 2; m <= n + 1; ++m) {
    if (cache.contains(m)) continue;
    std::vector<PlaneTree> trees;
    std::vector<PlaneTree> partial;
    build_children(cache, trees, partial, m);
    cache.emplace(m, std::move(trees));
  }
  return cache.at(n + 1);
}

std::string encode(const PlaneTree& t) {
  if (t.is_leaf()) return ".";
  std::string out = "(";
  for (const PlaneTree& c : t.children) out += encode(c);
  out += ")";
  return out;
}

}  // namespace tamari_lab
