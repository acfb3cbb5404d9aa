#pragma once

#include <json.hpp>

#include "tamari_lab/binary_tree.hpp"
#include "tamari_lab/interval.hpp"
#include "tamari_lab/new_intervals.hpp"
#include "tamari_lab/plane_tree.hpp"
#include "tamari_lab/tamari.hpp"
#include "tamari_lab/tree_series.hpp"
#include "tamari_lab/xy_poly.hpp"
#include "tamari_lab/y_series.hpp"

namespace tamari_lab {

// Trees are nested pairs with null leaves: Y is [null, null]. Plane trees are
// child arrays: a leaf is [].
nlohmann::json tree_to_json(const BinaryTree& t);
nlohmann::json plane_tree_to_json(const PlaneTree& t);

// {"lo": ..., "hi": ...}, both trees also present as text under "text".
nlohmann::json interval_to_json(const Interval& i);

// {"skeleton": ..., "pieces": [{"path": [...], "interval": ...}, ...]} with
// pieces sorted by path.
nlohmann::json decoupage_to_json(const Decoupage& d);

// {"n": ..., "trees": [...], "upCovers": [[...], ...]}.
nlohmann::json poset_to_json(const TamariPoset& p);

// Exact integers that fit 64 bits stay JSON numbers; anything else becomes a
// decimal string ("p/q" for non-integers) so nothing is ever rounded.
nlohmann::json rational_to_json(const mpq_class& v);

// [{"degree": k, "coeff": ...}, ...] for nonzero terms, degree ascending.
nlohmann::json y_series_to_json(const YSeries& s);

// [{"yDegree": k, "xPolynomial": [c0, c1, ...]}, ...] for nonzero rows.
nlohmann::json xy_poly_to_json(const XYPoly& p);

// [{"tree": "(..)", "coeff": ...}, ...] in the series' term order.
nlohmann::json tree_series_to_json(const TreeSeries& s);

}  // namespace tamari_lab
