#include "tamari_lab/cli.hpp"

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamari_lab/binary_tree.hpp"
#include "tamari_lab/census.hpp"
#include "tamari_lab/dendriform.hpp"
#include "tamari_lab/errors.hpp"
#include "tamari_lab/interval.hpp"
#include "tamari_lab/json_io.hpp"
#include "tamari_lab/lab.hpp"
#include "tamari_lab/new_intervals.hpp"
#include "tamari_lab/rational.hpp"
#include "tamari_lab/series.hpp"
#include "tamari_lab/tamari.hpp"
#include "tamari_lab/verify.hpp"

namespace tamari_lab {

namespace {

std::string rational_to_text(const mpq_class& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// "x^2 + 2*x^3" style, ascending x-degrees, "0" for an empty row.
std::string x_poly_to_text(const std::vector<mpq_class>& row) {
  std::string out;
  for (std::size_t d = 0; d < row.size(); ++d) {
    if (row[d] == 0) continue;
    mpq_class c = row[d];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    std::string power =
        d == 0 ? "" : (d == 1 ? "x" : "x^" + std::to_string(d));
    if (power.empty())
      out += rational_to_text(c);
    else if (c == 1)
      out += power;
    else
      out += rational_to_text(c) + "*" + power;
  }
  return out.empty() ? "0" : out;
}

std::string path_to_text(const std::vector<int>& path) {
  if (path.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(path[i]);
  }
  return out;
}

void emit_json(const nlohmann::json& j, std::ostream& out) {
  out << j.dump(2) << "\n";
}

struct CountOptions {
  std::string what;
  int n = 0;
  bool formula = false;
  std::string format = "plain";
};

int do_count(const CountOptions& opt, Lab& lab, std::ostream& out,
             std::ostream& err) {
  std::uint64_t enumerated = 0;
  if (opt.what == "trees") {
    if (opt.n > lab.max_n())
      throw LimitError("size " + std::to_string(opt.n) +
                       " exceeds the cap of " + std::to_string(lab.max_n()) +
                       " (raise with --limit or TAMARI_LAB_LIMIT)");
    enumerated = enumerate_binary_trees(opt.n).size();
  } else if (opt.what == "intervals") {
    enumerated = lab.poset(opt.n).interval_count();
  } else if (opt.what == "indecomposable") {
    enumerated = lab.census(opt.n).indecomposable_total;
  } else {
    enumerated = lab.census(opt.n).new_total;
  }

  mpz_class formula_value;
  if (opt.formula) {
    if (opt.what == "trees") {
      formula_value = binomial(2UL * opt.n, opt.n) / mpz_class(opt.n + 1);
    } else if (opt.what == "intervals") {
      formula_value = closed_interval_count(opt.n);
    } else if (opt.what == "new" && opt.n >= 2) {
      formula_value = closed_new_count(opt.n);
    } else {
      err << "no closed formula for " << opt.what << " at n = " << opt.n
          << "\n";
      return 2;
    }
  }
  bool agree =
      opt.formula &&
      formula_value == mpz_class(static_cast<unsigned long>(enumerated));

  if (opt.format == "json") {
    nlohmann::json j{{"what", opt.what}, {"n", opt.n}, {"count", enumerated}};
    if (opt.formula) {
      j["formula"] = formula_value.get_str();
      j["agreement"] = agree;
    }
    emit_json(j, out);
  } else if (opt.format == "csv") {
    if (opt.formula)
      out << "count,formula,agreement\n"
          << enumerated << "," << formula_value.get_str() << ","
          << (agree ? "yes" : "no") << "\n";
    else
      out << "count\n" << enumerated << "\n";
  } else {
    if (opt.formula)
      out << "enumerated " << enumerated << "\nformula "
          << formula_value.get_str() << "\nagreement "
          << (agree ? "yes" : "no") << "\n";
    else
      out << enumerated << "\n";
  }
  if (opt.formula && !agree) return 1;
  return 0;
}

struct SeriesOptions {
  std::string name;
  int order = 6;
  std::string format = "plain";
};

int do_series(const SeriesOptions& opt, Lab& lab, std::ostream& out) {
  if (opt.name == "Phi" || opt.name == "Theta") {
    XYPoly p = opt.name == "Phi" ? compute_Phi(opt.order, lab)
                                 : compute_Theta(opt.order, lab);
    if (opt.format == "json") {
      emit_json(xy_poly_to_json(p), out);
    } else if (opt.format == "csv") {
      out << "yDegree,xDegree,coeff\n";
      for (int k = 0; k <= p.order(); ++k) {
        const auto& row = p.row(k);
        for (std::size_t d = 0; d < row.size(); ++d)
          if (row[d] != 0)
            out << k << "," << d << "," << rational_to_text(row[d]) << "\n";
      }
    } else {
      for (int k = 0; k <= p.order(); ++k)
        out << "y^" << k << ": " << x_poly_to_text(p.row(k)) << "\n";
    }
    return 0;
  }

  YSeries s = [&] {
    if (opt.name == "phi") return compute_phi(opt.order, lab);
    if (opt.name == "theta") return compute_theta(opt.order, lab);
    if (opt.name == "psi") return compute_psi(opt.order, lab);
    return compute_nu(opt.order, lab);
  }();
  if (opt.format == "json") {
    emit_json(y_series_to_json(s), out);
  } else if (opt.format == "csv") {
    out << "degree,coeff\n";
    for (int k = 0; k <= s.order(); ++k)
      out << k << "," << rational_to_text(s.coeff(k)) << "\n";
  } else {
    for (int k = 0; k <= s.order(); ++k)
      out << (k ? "," : "") << rational_to_text(s.coeff(k));
    out << "\n";
  }
  return 0;
}

struct VerifyOptions {
  std::vector<std::string> checks{"all"};
  int order = 6;
  bool timing = false;
  std::string format = "json";
};

int do_verify(const VerifyOptions& opt, Lab& lab, std::ostream& out) {
  std::vector<std::string> names;
  bool all = false;
  for (const std::string& c : opt.checks)
    if (c == "all") all = true;
  names = all ? available_checks() : opt.checks;

  VerificationReport report = run_checks(names, opt.order, lab);

  if (opt.format == "json") {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckOutcome& o : report.outcomes) {
      nlohmann::json j{{"name", o.name}, {"scope", o.scope}, {"pass", o.pass}};
      if (!o.note.empty()) j["note"] = o.note;
      if (opt.timing) j["elapsedMs"] = o.elapsed_ms;
      checks.push_back(std::move(j));
    }
    emit_json(nlohmann::json{{"order", opt.order},
                             {"allPassed", report.all_passed()},
                             {"checks", checks}},
              out);
  } else if (opt.format == "csv") {
    out << (opt.timing ? "name,scope,pass,elapsedMs\n" : "name,scope,pass\n");
    for (const CheckOutcome& o : report.outcomes) {
      out << o.name << ",\"" << o.scope << "\"," << (o.pass ? "yes" : "no");
      if (opt.timing) out << "," << o.elapsed_ms;
      out << "\n";
    }
  } else {
    std::size_t passed = 0;
    for (const CheckOutcome& o : report.outcomes) {
      out << (o.pass ? "PASS " : "FAIL ") << o.name << " (" << o.scope << ")";
      if (!o.pass && !o.note.empty()) out << ": " << o.note;
      if (opt.timing) out << " [" << o.elapsed_ms << " ms]";
      out << "\n";
      if (o.pass) ++passed;
    }
    out << "passed " << passed << "/" << report.outcomes.size() << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

struct IntervalOptions {
  std::string text;
  std::string format = "json";
};

int do_decompose(const IntervalOptions& opt, Lab& lab, std::ostream& out) {
  Interval i = parse_interval(opt.text, lab);
  std::vector<Interval> factors = interval_decomposition(i);
  if (opt.format == "plain") {
    for (const Interval& f : factors) out << interval_to_text(f) << "\n";
  } else {
    nlohmann::json fs = nlohmann::json::array();
    for (const Interval& f : factors) fs.push_back(interval_to_json(f));
    emit_json(nlohmann::json{{"interval", interval_to_json(i)},
                             {"factors", fs}},
              out);
  }
  return 0;
}

int do_decoupage(const IntervalOptions& opt, Lab& lab, std::ostream& out) {
  Interval i = parse_interval(opt.text, lab);
  Decoupage d = decoupage(i, lab);
  if (opt.format == "plain") {
    out << "skeleton " << encode(d.skeleton) << "\n";
    for (const auto& [path, piece] : d.pieces)
      out << "piece " << path_to_text(path) << " " << interval_to_text(piece)
          << "\n";
  } else {
    nlohmann::json j = decoupage_to_json(d);
    j["interval"] = interval_to_json(i);
    emit_json(j, out);
  }
  return 0;
}

struct PosetOptions {
  int n = 1;
  std::string format = "json";
};

int do_poset(const PosetOptions& opt, Lab& lab, std::ostream& out) {
  const TamariPoset& p = lab.poset(opt.n);
  if (opt.format == "plain") {
    for (int i = 0; i < p.element_count(); ++i) {
      out << encode(p.element(i)) << ":";
      for (int j : p.up_covers()[i]) out << " " << encode(p.element(j));
      out << "\n";
    }
  } else {
    emit_json(poset_to_json(p), out);
  }
  return 0;
}

void add_format_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
}

// CLI11's numeric validators report double bounds (2.2e-308 ...); these keep
// the message in terms a user typed.
CLI::Validator integer_at_least(int floor) {
  return CLI::Validator(
      [floor](std::string& s) -> std::string {
        int v = 0;
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || end != s.data() + s.size() || v < floor)
          return "expected an integer >= " + std::to_string(floor) + ", got '" +
                 s + "'";
        return {};
      },
      "INT>=" + std::to_string(floor));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Tamari lattice interval laboratory"};
  app.name("tamari-lab");
  app.require_subcommand(1);

  int limit = 0;
  CLI::Option* limit_opt =
      app.add_option("--limit", limit,
                     "enumeration size cap (default 10, or TAMARI_LAB_LIMIT)")
          ->check(integer_at_least(1));

  CountOptions count_opt;
  CLI::App* count_cmd =
      app.add_subcommand("count", "count combinatorial objects of size n");
  count_cmd
      ->add_option("what", count_opt.what,
                   "trees | intervals | indecomposable | new")
      ->required()
      ->check(CLI::IsMember({"trees", "intervals", "indecomposable", "new"}));
  count_cmd->add_option("--n", count_opt.n, "object size")
      ->required()
      ->check(integer_at_least(0));
  count_cmd->add_flag("--formula", count_opt.formula,
                      "also evaluate the closed formula and compare");
  add_format_option(count_cmd, count_opt.format);

  SeriesOptions series_opt;
  CLI::App* series_cmd =
      app.add_subcommand("series", "print a generating series");
  series_cmd
      ->add_option("name", series_opt.name,
                   "Phi | Theta | phi | theta | psi | nu")
      ->required()
      ->check(CLI::IsMember({"Phi", "Theta", "phi", "theta", "psi", "nu"}));
  series_cmd->add_option("--order", series_opt.order, "truncation order in y")
      ->check(integer_at_least(0));
  add_format_option(series_cmd, series_opt.format);

  VerifyOptions verify_opt;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the verification suite");
  {
    std::vector<std::string> allowed = available_checks();
    allowed.push_back("all");
    verify_cmd
        ->add_option("--check", verify_opt.checks,
                     "check name (repeatable) or 'all'")
        ->check(CLI::IsMember(allowed));
  }
  verify_cmd->add_option("--order", verify_opt.order, "series order")
      ->check(integer_at_least(1));
  verify_cmd->add_flag("--timing", verify_opt.timing,
                       "include elapsed times (non-deterministic output)");
  add_format_option(verify_cmd, verify_opt.format);

  IntervalOptions decompose_opt;
  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "maximal factorization of an interval \"lo;hi\"");
  decompose_cmd->add_option("interval", decompose_opt.text, "interval text")
      ->required();
  add_format_option(decompose_cmd, decompose_opt.format);

  IntervalOptions decoupage_opt;
  CLI::App* decoupage_cmd = app.add_subcommand(
      "decoupage", "split an interval \"lo;hi\" into new pieces");
  decoupage_cmd->add_option("interval", decoupage_opt.text, "interval text")
      ->required();
  add_format_option(decoupage_cmd, decoupage_opt.format);

  PosetOptions poset_opt;
  CLI::App* poset_cmd =
      app.add_subcommand("poset", "export the covering relations of Y_n");
  poset_cmd->add_option("--n", poset_opt.n, "tree size")
      ->required()
      ->check(integer_at_least(1));
  add_format_option(poset_cmd, poset_opt.format);

  // Let --limit appear before or after the subcommand.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Lab lab(limit_opt->count() ? limit : limit_from_env(kDefaultMaxN));

  try {
    if (count_cmd->parsed()) return do_count(count_opt, lab, out, err);
    if (series_cmd->parsed()) return do_series(series_opt, lab, out);
    if (verify_cmd->parsed()) return do_verify(verify_opt, lab, out);
    if (decompose_cmd->parsed()) return do_decompose(decompose_opt, lab, out);
    if (decoupage_cmd->parsed()) return do_decoupage(decoupage_opt, lab, out);
    if (poset_cmd->parsed()) return do_poset(poset_opt, lab, out);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const LimitError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const SemanticError& e) {
    err << e.what() << "\n";
    return 3;
  } catch (const DataFileError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace tamari_lab
