#pragma once

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "padicpow/constructions.hpp"
#include "padicpow/parse.hpp"
#include "padicpow/report_json.hpp"

namespace padicpow::cli {

enum ExitCode : int { kComputed = 0, kPrecondition = 2, kBudget = 3, kUsage = 64, kInternal = 70 };

struct Options {
  std::int64_t p = 0;
  std::vector<std::string> ext;
  std::string poly_expr;
  std::string coeffs;
  bool json = false;
  bool timing = false;
  unsigned threads = 1;
  std::uint64_t budget = ScanOptions{}.budget;
  std::string strategy = "frontier";
  bool ring = false;
  std::string construct_kind;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::string value;
};

namespace detail {

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ScanBudgetExceeded:
    case ErrorCode::KTooLargeForMemory:
      return kBudget;
    case ErrorCode::ParseError:
      return kUsage;
    default:
      return kPrecondition;
  }
}

inline ScanOptions scan_options(const Options& o) {
  ScanOptions s;
  s.threads = o.threads;
  s.budget = o.budget;
  s.strategy = o.strategy == "naive" ? ScanStrategy::Naive : ScanStrategy::Frontier;
  return s;
}

inline IntPoly read_polynomial(const Options& o, const LocalField& field) {
  if (!o.poly_expr.empty() && !o.coeffs.empty())
    throw Error(ErrorCode::ParseError, "give either --poly or --coeffs, not both");
  if (!o.poly_expr.empty()) return parse_polynomial(o.poly_expr, field);
  if (!o.coeffs.empty()) return parse_coefficients(o.coeffs, field);
  throw Error(ErrorCode::ParseError, "a polynomial is required (--poly or --coeffs)");
}

inline std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline void print_decision_text(std::ostream& out, const DecisionReport& r, const LocalField& field,
                                const IntPoly& f) {
  out << "field       " << field.description() << " (p=" << field.p() << ", e=" << field.e() << ", f=" << field.f()
      << ")\n";
  out << "polynomial  " << poly::to_string(f) << "\n";
  out << "class       " << to_string(r.class_tested) << "\n";
  out << "verdict     " << (r.verdict ? "true" : "false") << "\n";
  out << "reason      " << r.reason << "\n";
  out << "M           " << r.M << "\n";
  out << "final_m     " << r.final_m << "\n";
  out << "m_history   " << join(r.m_history) << "\n";
  out << "witnesses   " << r.witness_count << "\n";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out << "counterexample a = " << (c.inverted ? "1/(" + c.point.str() + ")" : c.point.str())
        << ", F(a) in class of " << c.value_class.rep.str() << "\n";
  }
  out << "bounds      kras_upper=" << to_string(r.bounds.kras_upper)
      << " max_ord_bound=" << to_string(r.bounds.max_ord_bound) << " cardA_log_p=" << to_string(r.bounds.cardA_log_p);
  if (r.bounds.pejkovic_log_p) out << " pejkovic_log_p=" << *r.bounds.pejkovic_log_p;
  out << "\n";
}

inline void emit(std::ostream& out, Json j, const Options& o, double ms) {
  if (o.timing) j["timing_ms"] = ms;
  out << j.dump(2) << "\n";
}

inline int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  const LocalField field = parse_field(o.p, o.ext);
  const ScanOptions scan = scan_options(o);

  if (cmd == "decide") {
    const IntPoly f = read_polynomial(o, field);
    const DecisionReport r = o.ring ? decide_CZ(f, field, scan) : decide_CK(f, field, scan);
    if (o.json) emit(out, report_to_json(r, field), o, elapsed());
    else print_decision_text(out, r, field, f);
    return kComputed;
  }
  if (cmd == "spectrum") {
    const IntPoly f = read_polynomial(o, field);
    const SpectrumReport s = class_spectrum(f, field, scan);
    if (o.json) {
      Json j{{"field", field_to_json(field)}};
      const Json body = to_json(s);
      for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
      emit(out, j, o, elapsed());
    } else {
      out << "classes attained by " << poly::to_string(f) << " on " << field.description() << ":";
      for (const auto& c : s.classes) out << " " << c.rep.str();
      out << "\nattains zero: " << (s.attains_zero ? "true" : "false") << "\n";
    }
    return kComputed;
  }
  if (cmd == "classes") {
    const PowerClassSystem sys(field);
    if (o.json) {
      Json rows = Json::array();
      for (const auto& c : sys.classes()) {
        const std::int64_t j = field.ord(c.rep);
        rows.push_back(Json{{"index", c.index}, {"rep", to_json(c.rep)}, {"rep_text", c.rep.str()}, {"ord", j}});
      }
      emit(out, Json{{"field", field_to_json(field)}, {"classes", rows}, {"count", sys.classes().size()}}, o,
           elapsed());
    } else {
      out << "index  ord  representative\n";
      for (const auto& c : sys.classes()) {
        std::string idx = std::to_string(c.index), ord = std::to_string(field.ord(c.rep));
        out << idx << std::string(7 - std::min<std::size_t>(idx.size(), 6), ' ') << ord
            << std::string(5 - std::min<std::size_t>(ord.size(), 4), ' ') << c.rep.str() << "\n";
      }
      out << sys.classes().size() << " classes\n";
    }
    return kComputed;
  }
  if (cmd == "bounds") {
    const IntPoly f = read_polynomial(o, field);
    const BoundsReport b = witness_bounds(f, field);
    if (o.json) {
      emit(out, Json{{"field", field_to_json(field)}, {"bounds", to_json(b)}}, o, elapsed());
    } else {
      out << "kras_upper     " << to_string(b.kras_upper) << "\nmax_ord_bound  " << to_string(b.max_ord_bound)
          << "\ncardA_log_p    " << to_string(b.cardA_log_p) << "\n";
      if (b.pejkovic_log_p) out << "pejkovic_log_p " << *b.pejkovic_log_p << "\n";
    }
    return kComputed;
  }
  if (cmd == "construct") {
    IntPoly f;
    if (o.construct_kind == "cz-not-ck") f = make_cz_not_ck(field);
    else if (o.construct_kind == "ck-not-power") f = make_ck_not_power(field, o.m);
    else throw Error(ErrorCode::ParseError, "unknown construction '" + o.construct_kind + "'");
    if (o.json) {
      Json coeffs = Json::array();
      for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
      emit(out, Json{{"field", field_to_json(field)}, {"polynomial", poly::to_string(f)}, {"coeffs", coeffs}}, o,
           elapsed());
    } else {
      out << poly::to_string(f) << "\n";
    }
    return kComputed;
  }
  if (cmd == "approximate") {
    const IntPoly f = read_polynomial(o, field);
    const IntPoly g = approximate_on_integers(f, field, o.n, scan);
    if (o.json) emit(out, Json{{"field", field_to_json(field)}, {"n", o.n}, {"G", poly::to_string(g)}}, o, elapsed());
    else out << "G = " << poly::to_string(g) << "\n";
    return kComputed;
  }
  if (cmd == "check-power") {
    const OKElem x = parse_element(o.value, field);
    const bool yes = is_pth_power(x, field);
    if (o.json) {
      Json j{{"field", field_to_json(field)}, {"value", to_json(x)}, {"is_pth_power", yes}};
      if (!x.is_zero()) j["class_rep"] = PowerClassSystem(field).class_of(x).rep.str();
      emit(out, j, o, elapsed());
    } else {
      out << x.str() << (yes ? " is" : " is not") << " a " << field.p() << "-th power in " << field.description()
          << "\n";
    }
    return kComputed;
  }
  throw Error(ErrorCode::ParseError, "unknown subcommand '" + cmd + "'");
}

}  // namespace detail

/// Runs the command line `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decide whether a polynomial maps a local field into its p-th powers", "padicpow"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", o.p, "residue characteristic (prime)")->required();
  app.add_option("--ext", o.ext, "extension: eis:<coeffs> or unram:<coeffs>, constant term first");
  app.add_option("--poly", o.poly_expr, "polynomial expression in x (t is the field generator)");
  app.add_option("--coeffs", o.coeffs, "comma-separated coefficients, constant term first");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--timing", o.timing, "add timing_ms to JSON output");
  app.add_option("--threads", o.threads, "scan threads")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", o.budget, "cap on polynomial evaluations per scan");
  app.add_option("--strategy", o.strategy, "scan strategy")->check(CLI::IsMember({"frontier", "naive"}));

  auto* decide = app.add_subcommand("decide", "decide membership in C(K), or C(O) with --ring");
  decide->add_flag("--ring", o.ring, "test C(O) instead of C(K)");
  app.add_subcommand("spectrum", "power classes attained on K");
  app.add_subcommand("classes", "list the classes of K^x / K^x^p");
  app.add_subcommand("bounds", "Krasner and witness-set bounds");
  auto* construct = app.add_subcommand("construct", "generate a family member");
  construct->add_option("kind", o.construct_kind, "cz-not-ck or ck-not-power")
      ->required()
      ->check(CLI::IsMember({"cz-not-ck", "ck-not-power"}));
  construct->add_option("--m", o.m, "exponent for ck-not-power");
  auto* approx = app.add_subcommand("approximate", "G with F - G^p small on the integers");
  approx->add_option("--n", o.n, "target order")->required();
  auto* check = app.add_subcommand("check-power", "test a single value");
  check->add_option("--value", o.value, "field element, may use t")->required();

  std::vector<std::string> argv_store{"padicpow"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (o.json) out << Json{{"error", "UsageError"}, {"reason", e.what()}}.dump(2) << "\n";
    return kUsage;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return detail::dispatch(cmd, o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (o.json) out << Json{{"error", std::string(to_string(e.code()))}, {"reason", e.what()}}.dump(2) << "\n";
    return detail::exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    if (o.json) out << Json{{"error", "InternalError"}, {"reason", e.what()}}.dump(2) << "\n";
    return kInternal;
  }
}

}  // namespace padicpow::cli
