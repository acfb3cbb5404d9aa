#include "tamari_lab/verify.hpp"

#include <chrono>
#include <cstdint>
#include <string>

#include "tamari_lab/census.hpp"
#include "tamari_lab/dendriform.hpp"
#include "tamari_lab/errors.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/new_intervals.hpp"
#include "tamari_lab/prelie.hpp"
#include "tamari_lab/series.hpp"
#include "tamari_lab/tamari.hpp"

namespace tamari_lab {

namespace {

bool run_interval_counts(int, Lab& lab) {
  static const std::uint64_t known[] = {1, 3, 13, 68, 399, 2530};
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t c = lab.poset(n).interval_count();
    if (n <= 6 && c != known[n - 1]) return false;
    if (closed_interval_count(n) != mpz_class(static_cast<unsigned long>(c)))
      return false;
  }
  return true;
}

bool run_new_counts(int, Lab& lab) {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t c = lab.census(n).new_total;
    if (n == 1) {
      if (c != 1) return false;
    } else if (closed_new_count(n) != mpz_class(static_cast<unsigned long>(c))) {
      return false;
    }
  }
  return true;
}

bool run_lagrange(int, Lab&) {
  YSeries p = lagrange_phi(12);
  if (p.coeff(0) != 0) return false;
  for (int n = 1; n <= 12; ++n)
    if (p.coeff(n) != mpq_class(closed_interval_count(n))) return false;
  return eqphi_holds(p);
}

struct CheckDef {
  const char* name;
  std::string (*scope)(int order);
  bool (*run)(int order, Lab& lab);
};

const CheckDef kChecks[] = {
    {"interval_counts", [](int) { return std::string("sizes 1..8"); },
     run_interval_counts},
    {"new_counts", [](int) { return std::string("sizes 1..7"); },
     run_new_counts},
    {"relaphi",
     [](int order) { return "through y^" + std::to_string(order); },
     [](int order, Lab& lab) { return check_relaphi(order, lab); }},
    {"theta_relations",
     [](int order) { return "through y^" + std::to_string(order); },
     [](int order, Lab& lab) { return check_theta_relations(order, lab); }},
    {"diffPhi",
     [](int order) { return "through y^" + std::to_string(order); },
     [](int order, Lab& lab) { return check_diffPhi(order, lab); }},
    {"maxi8",
     [](int order) { return "through y^" + std::to_string(order); },
     [](int order, Lab& lab) { return check_maxi8(order, lab); }},
    {"eqphi",
     [](int order) { return "through y^" + std::to_string(order); },
     [](int order, Lab& lab) { return check_eqphi(order, lab); }},
    {"nu",
     [](int order) { return "through y^" + std::to_string(order); },
     [](int order, Lab& lab) { return check_nu(order, lab); }},
    {"lagrange", [](int) { return std::string("orders 1..12"); },
     run_lagrange},
    {"relaF",
     [](int order) { return "sizes 1.." + std::to_string(order); },
     [](int order, Lab& lab) { return check_relaF(order, lab); }},
    {"u_recurrence",
     [](int order) { return "terms up to U_" + std::to_string(order); },
     [](int order, Lab&) { return check_u_recurrence(order); }},
    {"psi_sum",
     [](int order) { return "through y^" + std::to_string(order); },
     [](int order, Lab& lab) { return check_psi_sum(order, lab); }},
    {"Psi_equation",
     [](int order) {
       return "through y^" + std::to_string(order) + ", z^4";
     },
     [](int order, Lab& lab) { return check_Psi_equation(order, 4, lab); }},
};

const CheckDef* find_check(const std::string& name) {
  for (const CheckDef& def : kChecks)
    if (name == def.name) return &def;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& available_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const CheckDef& def : kChecks) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

VerificationReport run_checks(const std::vector<std::string>& names, int order,
                              Lab& lab) {
  if (order < 2) throw SemanticError("verification order must be at least 2");
  VerificationReport report;
  for (const std::string& name : names) {
    const CheckDef* def = find_check(name);
    if (!def) throw SemanticError("unknown check: " + name);
    CheckOutcome o;
    o.name = name;
    o.scope = def->scope(order);
    auto t0 = std::chrono::steady_clock::now();
    try {
      o.pass = def->run(order, lab);
    } catch (const DataFileError& e) {
      o.pass = false;
      o.note = e.what();
    }
    o.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

}  // namespace tamari_lab
