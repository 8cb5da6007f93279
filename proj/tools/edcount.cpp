// This file is part of edcount.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
//
// Command-line front end. Exit codes:
//   0  success, all internal cross-checks passed
//   1  runtime failure (enumeration budget, I/O, ...)
//   2  usage error (bad arguments, invalid p or d)
//   3  cross-check mismatch between two computation routes

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "edcount/analysis.hpp"
#include "edcount/birational.hpp"
#include "edcount/counting.hpp"
#include "edcount/serialize.hpp"

namespace {

using namespace edcount;
using nlohmann::json;

u64 budget_from_env() {
  const char* raw = std::getenv("EDCOUNT_ENUM_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumBudget;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0)
    throw DomainError("EDCOUNT_ENUM_BUDGET must be a positive integer");
  return static_cast<u64>(value);
}

void require_valid_pd(u64 p, u64 d) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw CLI::ValidationError("--p", "p must be an odd prime");
  if (d % p == 0 || d % p == 1)
    throw CLI::ValidationError("--d", "d must avoid 0 and 1 mod p");
}

void emit(const json& doc, const std::string& text, const std::string& format) {
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int run_count(u64 p, u64 d, unsigned n, const std::string& method,
              const std::string& format, u64 budget) {
  require_valid_pd(p, d);
  if (n == 0) throw CLI::ValidationError("--n", "n must be >= 1");

  CountReport report;
  bool oracle_verified = false;
  if (method == "enumerate") {
    report = enumeration_report(p, n, d, budget);
    oracle_verified = true;
  } else if (method == "congruence") {
    if (n != 1)
      throw CLI::ValidationError("--method",
                                 "congruence applies to n = 1 only");
    report = resolve_exact_count(p, d, budget);
  } else {  // auto: closed form first, enumeration as the verifier
    if (n == 1) {
      report = resolve_exact_count(p, d, budget);
    } else if (is_supersingular(p, d)) {
      report = formula_report(p, n, d, budget);
    } else {
      report = enumeration_report(p, n, d, budget);
      oracle_verified = true;
    }
    if (!oracle_verified && checked_pow(p, n) <= budget) {
      CountReport oracle = enumeration_report(p, n, d, budget);
      if (oracle.affine_count != report.affine_count ||
          oracle.projective_count != report.projective_count)
        throw InconsistencyError(
            "closed-form count disagrees with enumeration");
      oracle_verified = true;
    }
  }

  json results = to_json(report);
  std::ostringstream text;
  text << "p=" << report.p << " d=" << report.d << " n=" << report.n << "\n"
       << "method=" << to_string(report.method) << "\n"
       << "affine=" << report.affine_count
       << " projective=" << report.projective_count << "\n"
       << "legendre=" << report.legendre_d
       << " criterion_residue=" << report.criterion_residue
       << " trace=" << report.trace_T << "\n"
       << "supersingular=" << bool_str(report.supersingular) << "\n"
       << "oracle_verified=" << bool_str(oracle_verified) << "\n";
  if (n > 1) {
    Field field = Field::extension(p, n, budget);
    json poly = field.reduction_poly();
    results["reduction_poly"] = poly;
    text << "reduction_poly=" << poly.dump() << "\n";
  }

  json inputs{{"p", p}, {"d", d}, {"n", n}, {"method", method}};
  emit(make_envelope("count", inputs, results, oracle_verified), text.str(),
       format);
  return 0;
}

int run_supersingular(u64 p, u64 d, const std::string& format) {
  require_valid_pd(p, d);
  u64 residue = criterion_sum(p, d);
  bool ss = is_supersingular(p, d);
  json results{{"p", p},
               {"d", d % p},
               {"p_mod_4", p % 4},
               {"criterion_residue", residue},
               {"supersingular", ss}};
  std::ostringstream text;
  text << "p=" << p << " d=" << d % p << " p_mod_4=" << p % 4
       << " criterion_residue=" << residue << "\n"
       << "supersingular=" << bool_str(ss) << "\n";
  emit(make_envelope("supersingular", json{{"p", p}, {"d", d}}, results,
                     false),
       text.str(), format);
  return 0;
}

int run_twist(u64 p, u64 d, const std::string& format, u64 budget) {
  require_valid_pd(p, d);
  TwistReport report = twist_check(p, d, budget);
  std::ostringstream text;
  text << "p=" << report.p << " d=" << report.d
       << " d_inverse=" << report.d_inverse
       << " legendre=" << report.legendre_d << "\n"
       << "order_d=" << report.order_d
       << " order_d_inverse=" << report.order_d_inverse << "\n";
  if (report.legendre_d == 1)
    text << "relation: " << report.order_d << " = " << report.order_d_inverse
         << "\n";
  else
    text << "relation: " << report.order_d << " + " << report.order_d_inverse
         << " = " << report.order_d + report.order_d_inverse << " = 2p+2\n";
  text << "holds=" << bool_str(report.holds) << "\n";
  if (!report.holds) throw InconsistencyError("twist relation violated");
  emit(make_envelope("twist", json{{"p", p}, {"d", d}}, to_json(report),
                     report.oracle_verified),
       text.str(), format);
  return 0;
}

int run_embed(u64 p, u64 d, unsigned cap, const std::string& format,
              u64 budget) {
  require_valid_pd(p, d);
  CountReport report = resolve_exact_count(p, d, budget);
  auto k = embedding_degree(report.projective_count, p, cap);
  json results{{"p", p},
               {"d", d % p},
               {"group_order", report.projective_count},
               {"supersingular", report.supersingular},
               {"embedding_degree", k ? json(*k) : json(nullptr)},
               {"cap", cap}};
  std::ostringstream text;
  text << "p=" << p << " d=" << d % p
       << " group_order=" << report.projective_count
       << " supersingular=" << bool_str(report.supersingular) << "\n";
  if (k)
    text << "embedding_degree=" << *k << "\n";
  else
    text << "embedding_degree=none within cap " << cap << "\n";
  emit(make_envelope("embed", json{{"p", p}, {"d", d}, {"cap", cap}}, results,
                     false),
       text.str(), format);
  return 0;
}

int run_map(u64 p, u64 d, u64 x, u64 y, const std::string& direction,
            const std::string& format) {
  require_valid_pd(p, d);
  Field field = Field::prime(p);
  EdwardsCurve curve(field, d);
  MontgomeryCurve mont = curve.montgomery_form();

  std::optional<AffinePoint> image;
  try {
    if (direction == "e2m")
      image = edwards_to_montgomery(curve, curve.point(x, y));
    else
      image = montgomery_to_edwards(curve, mont.point(x, y));
  } catch (const DomainError& ex) {
    throw CLI::ValidationError("--x/--y", ex.what());
  }

  json results{{"direction", direction}, {"special", !image.has_value()}};
  std::ostringstream text;
  if (image) {
    results["image"] = to_json(*image);
    const char* names = direction == "e2m" ? "(u, v)" : "(x, y)";
    text << names << " = (" << image->x.residue() << ", "
         << image->y.residue() << ")\n";
  } else {
    results["image"] = nullptr;
    text << "SPECIAL (no image)\n";
  }
  emit(make_envelope("map",
                     json{{"p", p},
                          {"d", d},
                          {"x", x},
                          {"y", y},
                          {"direction", direction}},
                     results, false),
       text.str(), format);
  return 0;
}

int run_scan(u64 p_min, u64 p_max, const std::string& d_spec,
             const std::string& out_path, const std::string& format,
             u64 budget) {
  ScanOptions options;
  options.p_min = p_min;
  options.p_max = p_max;
  options.budget = budget;
  if (d_spec != "all") {
    std::stringstream ss(d_spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      char* end = nullptr;
      unsigned long long value = std::strtoull(item.c_str(), &end, 10);
      if (end == item.c_str() || *end != '\0')
        throw CLI::ValidationError("--d", "expected 'all' or a comma list");
      options.d_fixed.push_back(static_cast<u64>(value));
    }
    if (options.d_fixed.empty())
      throw CLI::ValidationError("--d", "expected 'all' or a comma list");
  }

  std::vector<ScanRecord> records = scan(options);
  bool all_verified = !records.empty();
  for (const ScanRecord& rec : records)
    all_verified = all_verified && rec.oracle_verified;

  std::string payload;
  if (format == "json") {
    json rows = json::array();
    for (const ScanRecord& rec : records) rows.push_back(to_json(rec));
    payload = make_envelope("scan",
                            json{{"p_min", p_min},
                                 {"p_max", p_max},
                                 {"d", d_spec}},
                            rows, all_verified)
                  .dump(2);
    payload += "\n";
  } else {
    payload = scan_to_csv(records);
  }

  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + out_path);
    out << payload;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edwards curve orders, supersingularity and twists over F_p"};
  app.require_subcommand(1);

  u64 p = 0, d = 0, x = 0, y = 0, p_min = 3, p_max = 3;
  unsigned n = 1, cap = 12;
  std::string method = "auto", format = "text", direction, d_spec = "all",
              out_path;

  auto* count = app.add_subcommand("count", "Count points of E_d");
  count->add_option("--p", p, "odd prime")->required();
  count->add_option("--d", d, "curve coefficient")->required();
  count->add_option("--n", n, "extension degree, default 1");
  count->add_option("--method", method, "auto|enumerate|congruence")
      ->check(CLI::IsMember({"auto", "enumerate", "congruence"}));
  count->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ss = app.add_subcommand("supersingular", "Supersingularity test");
  ss->add_option("--p", p)->required();
  ss->add_option("--d", d)->required();
  ss->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* twist = app.add_subcommand("twist", "Orders of E_d and E_{d^-1}");
  twist->add_option("--p", p)->required();
  twist->add_option("--d", d)->required();
  twist->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* embed = app.add_subcommand("embed", "Embedding degree of the group");
  embed->add_option("--p", p)->required();
  embed->add_option("--d", d)->required();
  embed->add_option("--cap", cap, "largest k tried, default 12");
  embed->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json"}));

  auto* map = app.add_subcommand("map", "Birational map of one point");
  map->add_option("--p", p)->required();
  map->add_option("--d", d)->required();
  map->add_option("--x", x)->required();
  map->add_option("--y", y)->required();
  map->add_option("--direction", direction, "e2m or m2e")
      ->required()
      ->check(CLI::IsMember({"e2m", "m2e"}));
  map->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* scan_cmd = app.add_subcommand("scan", "Classify a (p, d) grid");
  scan_cmd->add_option("--p-min", p_min)->required();
  scan_cmd->add_option("--p-max", p_max)->required();
  scan_cmd->add_option("--d", d_spec, "'all' or comma-separated values");
  scan_cmd->add_option("--out", out_path, "write to file instead of stdout");
  scan_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    u64 budget = budget_from_env();
    if (count->parsed()) return run_count(p, d, n, method, format, budget);
    if (ss->parsed()) return run_supersingular(p, d, format);
    if (twist->parsed()) return run_twist(p, d, format, budget);
    if (embed->parsed()) return run_embed(p, d, cap, format, budget);
    if (map->parsed()) return run_map(p, d, x, y, direction, format);
    if (scan_cmd->parsed()) {
      if (format == "text") format = "csv";  // scan default
      return run_scan(p_min, p_max, d_spec, out_path, format, budget);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InconsistencyError& e) {
    std::cerr << "cross-check failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
