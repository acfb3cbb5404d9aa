#include "tamari_lab/census.hpp"

#include <utility>

#include "tamari_lab/errors.hpp"
#include "tamari_lab/interval.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/new_intervals.hpp"

namespace tamari_lab {

namespace {

IntervalCensus empty_census(int n) {
  IntervalCensus c;
  c.n = n;
  c.by_border.assign(n + 2, 0);
  c.indec_by_border.assign(n + 2, 0);
  return c;
}

void merge_into(IntervalCensus& into, const IntervalCensus& part) {
  into.total += part.total;
  into.indecomposable_total += part.indecomposable_total;
  into.new_total += part.new_total;
  for (std::size_t k = 0; k < into.by_border.size(); ++k) {
    into.by_border[k] += part.by_border[k];
    into.indec_by_border[k] += part.indec_by_border[k];
  }
}

// One proper span of a tree, with the spanned subtree and the contraction
// resolved to element ids of the smaller posets.
struct SpanIds {
  int a;
  int width;
  int sub_id;
  int quot_id;
};

}  // namespace

IntervalCensus census_intervals_serial(int n, Lab& lab) {
  const TamariPoset& p = lab.poset(n);
  for (int m = 1; m < n; ++m) lab.poset(m);  // used by find_cuts

  IntervalCensus c = empty_census(n);
  for (int lo = 0; lo < p.element_count(); ++lo) {
    const bool indec = is_indecomposable(p.element(lo));
    p.for_each_geq(lo, [&](int hi) {
      const int border = left_border_length(p.element(hi));
      ++c.total;
      ++c.by_border[border];
      if (indec) {
        ++c.indecomposable_total;
        ++c.indec_by_border[border];
      }
      if (is_new(Interval{p.element(lo), p.element(hi)}, lab)) ++c.new_total;
    });
  }
  return c;
}

IntervalCensus census_intervals_parallel(int n, Lab& lab) {
  const TamariPoset& p = lab.poset(n);
  std::vector<const TamariPoset*> sub(n, nullptr);  // sub[m] = poset of size m
  for (int m = 1; m < n; ++m) sub[m] = &lab.poset(m);
  const int m = p.element_count();

  // Per-tree tables, built once: left border length, indecomposability, and
  // every proper span resolved to ids in the smaller posets.
  std::vector<int> border(m);
  std::vector<unsigned char> indec(m);
  std::vector<std::vector<SpanIds>> spans(m);
  for (int id = 0; id < m; ++id) {
    const BinaryTree& t = p.element(id);
    border[id] = left_border_length(t);
    indec[id] = is_indecomposable(t) ? 1 : 0;
    auto& row = spans[id];
    for (auto [a, b] : node_spans(t)) {
      const int width = b - a;
      if (width == n) continue;
      row.push_back(SpanIds{
          a, width, sub[width]->index_of(subtree_spanning(t, a, b)),
          sub[n - width]->index_of(contract_span(t, a, b))});
    }
  }

  IntervalCensus c = empty_census(n);
#pragma omp parallel
  {
    IntervalCensus local = empty_census(n);
#pragma omp for schedule(dynamic, 4) nowait
    for (int lo = 0; lo < m; ++lo) {
      const auto& lo_spans = spans[lo];
      p.for_each_geq(lo, [&](int hi) {
        ++local.total;
        ++local.by_border[border[hi]];
        if (indec[lo]) {
          ++local.indecomposable_total;
          ++local.indec_by_border[border[hi]];
        }
        const auto& hi_spans = spans[hi];
        bool has_cut = false;
        std::size_t i = 0, j = 0;
        while (i < lo_spans.size() && j < hi_spans.size()) {
          const SpanIds& sl = lo_spans[i];
          const SpanIds& sh = hi_spans[j];
          if (sl.a != sh.a || sl.width != sh.width) {
            if (sl.a != sh.a ? sl.a < sh.a : sl.width < sh.width)
              ++i;
            else
              ++j;
            continue;
          }
          ++i, ++j;
          if (sub[sl.width]->leq(sl.sub_id, sh.sub_id) &&
              sub[n - sl.width]->leq(sl.quot_id, sh.quot_id)) {
            has_cut = true;
            break;
          }
        }
        if (!has_cut) ++local.new_total;
      });
    }
#pragma omp critical(tamari_lab_census_merge)
    merge_into(c, local);
  }
  return c;
}

IntervalCensus census_intervals(int n, Lab& lab, Exec how) {
  switch (how) {
    case Exec::serial:
      return census_intervals_serial(n, lab);
    case Exec::parallel:
      return census_intervals_parallel(n, lab);
  }
  throw InternalError("unknown execution mode");
}

}  // namespace tamari_lab
