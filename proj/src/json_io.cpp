#include "tamari_lab/json_io.hpp"

#include <cstdint>
#include <string>

namespace tamari_lab {

nlohmann::json tree_to_json(const BinaryTree& t) {
  if (t.is_leaf()) return nullptr;
  return nlohmann::json::array({tree_to_json(t.left()), tree_to_json(t.right())});
}

nlohmann::json plane_tree_to_json(const PlaneTree& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const PlaneTree& c : t.children) out.push_back(plane_tree_to_json(c));
  return out;
}

nlohmann::json interval_to_json(const Interval& i) {
  return {{"lo", tree_to_json(i.lo)},
          {"hi", tree_to_json(i.hi)},
          {"text", interval_to_text(i)}};
}

nlohmann::json decoupage_to_json(const Decoupage& d) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& [path, piece] : d.pieces)
    pieces.push_back({{"path", path}, {"interval", interval_to_json(piece)}});
  return {{"skeleton", plane_tree_to_json(d.skeleton)}, {"pieces", pieces}};
}

nlohmann::json poset_to_json(const TamariPoset& p) {
  nlohmann::json trees = nlohmann::json::array();
  for (const BinaryTree& t : p.elements()) trees.push_back(encode(t));
  return {{"n", p.tree_size()},
          {"trees", trees},
          {"upCovers", p.up_covers()}};
}

nlohmann::json rational_to_json(const mpq_class& v) {
  if (v.get_den() == 1) {
    const mpz_class& num = v.get_num();
    if (num.fits_slong_p())
      return static_cast<std::int64_t>(num.get_si());
    return num.get_str();
  }
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

nlohmann::json y_series_to_json(const YSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (int k = 0; k <= s.order(); ++k)
    if (s.coeff(k) != 0)
      out.push_back({{"degree", k}, {"coeff", rational_to_json(s.coeff(k))}});
  return out;
}

nlohmann::json xy_poly_to_json(const XYPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (int k = 0; k <= p.order(); ++k) {
    const auto& row = p.row(k);
    if (row.empty()) continue;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const mpq_class& c : row) coeffs.push_back(rational_to_json(c));
    out.push_back({{"yDegree", k}, {"xPolynomial", coeffs}});
  }
  return out;
}

nlohmann::json tree_series_to_json(const TreeSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [t, c] : s.terms())
    out.push_back({{"tree", encode(t)}, {"coeff", c}});
  return out;
}

}  // namespace tamari_lab
