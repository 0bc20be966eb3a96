// Copyright 2026 The twistlo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line frontend. Links only the C interface of libtwistlo.

#include <array>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistlo/twistlo.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitDomain = 1;

std::string num(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return ec == std::errc{} ? std::string(buf.data(), end) : std::string("nan");
}

// Structured error on stderr; returns the process exit code.
int report(twl_status st, const std::string& context = {}) {
  Json err{{"error", twl_status_name(st)},
           {"status", static_cast<int>(st)},
           {"message", context.empty() ? std::string(twl_last_error()) : context}};
  std::cerr << err.dump() << "\n";
  return twl_status_exit_code(st);
}

int usage_error(const std::string& message) {
  Json err{{"error", "UsageError"}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return kExitDomain;
}

struct Slope {
  long p = 0;
  long q = 1;
};

std::optional<Slope> parse_slope(const std::string& text) {
  static const std::regex re(R"(^\s*(-?\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  try {
    Slope r{std::stol(m[1].str()), m[2].matched ? std::stol(m[2].str()) : 1};
    if (r.q <= 0) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Owns a C string returned by the library.
struct CString {
  char* ptr = nullptr;
  ~CString() { twl_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

Json to_json(const twl_rep_solution& s) {
  return {{"n", s.n},           {"s", s.s},           {"T", s.T},
          {"t", s.t},           {"trace_W", s.trace_W}, {"theta", s.theta},
          {"offset", s.offset}, {"residual", s.residual}, {"iterations", s.iterations}};
}

Json to_json(const twl_slope_sample& s) {
  return {{"s", s.s}, {"T", s.T}, {"t", s.t}, {"B", s.B}, {"g", s.g}};
}

struct Options {
  int n = 0;
  std::optional<std::string> s_text;
  std::optional<std::string> T_text;
  std::optional<double> s;
  std::optional<std::string> r;
  double s_min = 1e-3;
  double s_max = 1e5;
  int samples = 200;
  bool all_roots = false;
  std::string format = "json";
  twl_tolerances tol = twl_default_tolerances();
};

int cmd_riley(const Options& o) {
  twl_poly* raw = nullptr;
  if (twl_status st = twl_riley_poly(o.n, &raw); st != TWL_OK) return report(st);
  std::unique_ptr<twl_poly, decltype(&twl_poly_free)> poly(raw, &twl_poly_free);

  CString value;
  if (o.s_text || o.T_text) {
    if (!o.s_text || !o.T_text) return usage_error("--s and --T must be given together");
    twl_status st = twl_poly_eval_rational(poly.get(), o.s_text->c_str(), o.T_text->c_str(),
                                           &value.ptr);
    if (st != TWL_OK) return report(st);
  }
  if (o.format == "text") {
    CString text;
    if (twl_status st = twl_poly_to_text(poly.get(), &text.ptr); st != TWL_OK) return report(st);
    std::cout << text.str() << "\n";
    if (value.ptr) std::cout << "value: " << value.str() << "\n";
    return 0;
  }
  CString json;
  if (twl_status st = twl_poly_to_json(poly.get(), &json.ptr); st != TWL_OK) return report(st);
  if (!value.ptr) {
    std::cout << json.str() << "\n";
    return 0;
  }
  Json out{{"n", o.n},
           {"coefficients", Json::parse(json.str())},
           {"s", *o.s_text},
           {"T", *o.T_text},
           {"value", value.str()}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_solve(const Options& o) {
  if (!o.s) return usage_error("solve requires --s");
  twl_rep_solution sol{};
  if (twl_status st = twl_solve(o.n, *o.s, o.tol.tol_T, &sol); st != TWL_OK) return report(st);

  Json out{{"solution", to_json(sol)}};
  if (o.n != 1) {
    twl_bracket b{};
    if (twl_status st = twl_bracket_compute(o.n, *o.s, &b); st != TWL_OK) return report(st);
    out["bracket"] = {{"lo", b.lo}, {"hi", b.hi}, {"sign_lo", b.sign_lo}, {"sign_hi", b.sign_hi}};
  }
  twl_poly* raw = nullptr;
  if (twl_status st = twl_riley_poly(o.n, &raw); st != TWL_OK) return report(st);
  double exact = 0;
  twl_status st = twl_poly_eval(raw, sol.s, sol.T, &exact);
  twl_poly_free(raw);
  if (st != TWL_OK) return report(st);
  out["exact_residual"] = exact;

  double rel = 0;
  if (st = twl_relation_residual(o.n, sol.s, sol.t, &rel); st != TWL_OK) return report(st);
  out["relation_residual"] = rel;

  double m[4];
  twl_holonomy h{};
  if (st = twl_longitude(&sol, m, &h); st != TWL_OK) return report(st);
  out["longitude"] = {{"matrix", {m[0], m[1], m[2], m[3]}},
                      {"A", h.A},
                      {"B", h.B},
                      {"B_matrix", h.B_matrix},
                      {"sigma", h.sigma},
                      {"offdiag_residual", h.offdiag_residual},
                      {"entry_identity_residual", h.entry_identity_residual},
                      {"entry_identity_scale", h.entry_identity_scale}};

  if (o.all_roots) {
    std::vector<double> roots(64);
    size_t count = 0;
    if (st = twl_scan_all_roots(o.n, *o.s, roots.data(), roots.size(), &count); st != TWL_OK) {
      return report(st);
    }
    roots.resize(std::min(count, roots.size()));
    out["all_roots_T"] = roots;
  }

  if (o.format == "text") {
    std::cout << "n " << sol.n << "\ns " << num(sol.s) << "\nT " << num(sol.T) << "\nt "
              << num(sol.t) << "\ntrace_W " << num(sol.trace_W) << "\ntheta " << num(sol.theta)
              << "\nresidual " << num(sol.residual) << "\nexact_residual " << num(exact)
              << "\nrelation_residual " << num(rel) << "\nB " << num(h.B) << "\n";
    return 0;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

void print_sample(const twl_slope_sample& smp, const std::string& format) {
  if (format == "csv") {
    std::cout << "s,T,t,B,g\n"
              << num(smp.s) << ',' << num(smp.T) << ',' << num(smp.t) << ',' << num(smp.B) << ','
              << num(smp.g) << "\n";
  } else if (format == "text") {
    std::cout << "s " << num(smp.s) << "\nT " << num(smp.T) << "\nt " << num(smp.t) << "\nB "
              << num(smp.B) << "\ng " << num(smp.g) << "\n";
  } else {
    std::cout << to_json(smp).dump() << "\n";
  }
}

int cmd_slope(const Options& o) {
  twl_slope_sample smp{};
  if (o.s && o.r) return usage_error("slope takes either --s or --r, not both");
  if (o.s) {
    if (twl_status st = twl_g_eval(o.n, *o.s, o.tol.tol_T, &smp); st != TWL_OK) return report(st);
  } else if (o.r) {
    auto r = parse_slope(*o.r);
    if (!r) return usage_error("malformed slope '" + *o.r + "', expected p/q with q > 0");
    if (twl_status st = twl_invert(o.n, r->p, r->q, &o.tol, &smp); st != TWL_OK) {
      return report(st);
    }
  } else {
    return usage_error("slope requires --s or --r");
  }
  print_sample(smp, o.format);
  return 0;
}

int cmd_scan(const Options& o) {
  twl_scan* raw = nullptr;
  if (twl_status st = twl_scan_create(o.n, o.s_min, o.s_max, o.samples, o.tol.tol_T, &raw);
      st != TWL_OK) {
    return report(st);
  }
  std::unique_ptr<twl_scan, decltype(&twl_scan_free)> scan(raw, &twl_scan_free);
  if (o.format == "json") {
    Json arr = Json::array();
    for (size_t i = 0; i < twl_scan_size(scan.get()); ++i) {
      twl_slope_sample smp{};
      twl_scan_get(scan.get(), i, &smp);
      arr.push_back(to_json(smp));
    }
    std::cout << arr.dump() << "\n";
    return 0;
  }
  CString csv;
  if (twl_status st = twl_scan_to_csv(scan.get(), &csv.ptr); st != TWL_OK) return report(st);
  std::cout << csv.str();
  return 0;
}

int cmd_certify(const Options& o) {
  if (!o.r) return usage_error("certify requires --r p/q");
  auto r = parse_slope(*o.r);
  if (!r) return usage_error("malformed slope '" + *o.r + "', expected p/q with q > 0");
  twl_certificate* raw = nullptr;
  const twl_status st = twl_certify(o.n, r->p, r->q, &o.tol, &raw);
  std::unique_ptr<twl_certificate, decltype(&twl_certificate_free)> cert(raw,
                                                                          &twl_certificate_free);
  if (cert) {
    if (o.format == "text") {
      twl_certificate_data d{};
      twl_certificate_get(cert.get(), &d);
      std::cout << "n " << d.n << "\nr " << d.p << "/" << d.q << "\ns_star " << num(d.s_star)
                << "\nt " << num(d.t) << "\nB " << num(d.B) << "\ngamma_x " << num(d.gamma_x)
                << "\ngamma_L " << num(d.gamma_L) << "\nrelator_residual "
                << num(d.relator_residual) << "\nlongitude_omega " << num(d.longitude_omega)
                << "\nfinal_gamma_abs " << num(d.final_gamma_abs) << "\nfinal_omega "
                << num(d.final_omega) << "\nvalid " << (d.valid ? "yes" : "no") << "\n";
    } else {
      CString json;
      if (twl_status js = twl_certificate_to_json(cert.get(), &json.ptr); js != TWL_OK) {
        return report(js);
      }
      std::cout << json.str() << "\n";
    }
  }
  return st == TWL_OK ? 0 : report(st);
}

int cmd_verify(const Options& o) {
  CString json;
  int all = 0;
  if (twl_status st = twl_verify(&json.ptr, &all); st != TWL_OK) return report(st);
  if (o.format == "text") {
    const Json rep = Json::parse(json.str());
    for (const auto& c : rep["checks"]) {
      std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
                << " (cases " << c["cases"].get<int>() << ", worst "
                << num(c["worst"].get<double>()) << ", threshold "
                << num(c["threshold"].get<double>()) << ")";
      if (c.contains("detail")) std::cout << " " << c["detail"].get<std::string>();
      std::cout << "\n";
    }
  } else {
    std::cout << json.str() << "\n";
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twist-knot surgery representations into the universal cover of SL2(R)"};
  app.set_version_flag("--version", std::string(twl_version()));
  app.require_subcommand(1);

  Options o;
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Twist number n (not 0 or -1)")->required(); };
  auto add_tols = [&](CLI::App* sub) {
    sub->add_option("--tol-T", o.tol.tol_T, "Absolute tolerance on T")->check(CLI::PositiveNumber);
    sub->add_option("--tol-g", o.tol.tol_g, "Absolute tolerance on g(s) - r")->check(CLI::PositiveNumber);
    sub->add_option("--tol-cert", o.tol.tol_cert, "Certificate tolerance")->check(CLI::PositiveNumber);
  };

  auto* riley = app.add_subcommand("riley", "Exact Riley polynomial phi_n(s,T)");
  add_n(riley);
  riley->add_option("--s", o.s_text, "Rational s for exact evaluation");
  riley->add_option("--T", o.T_text, "Rational T for exact evaluation");
  riley->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* solve = app.add_subcommand("solve", "Solve Riley's equation at s");
  add_n(solve);
  solve->add_option("--s", o.s, "Parameter s > 0");
  solve->add_flag("--all-roots", o.all_roots, "Also report every root in the band");
  solve->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  add_tols(solve);

  auto* slope = app.add_subcommand("slope", "Evaluate g(s) or invert g(s) = r");
  add_n(slope);
  slope->add_option("--s", o.s, "Parameter s > 0");
  slope->add_option("--r", o.r, "Target slope p/q in (0,4)");
  slope->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  add_tols(slope);

  auto* scan = app.add_subcommand("scan", "Tabulate g on a logarithmic s-grid");
  add_n(scan);
  scan->add_option("--s-min", o.s_min, "Smallest s");
  scan->add_option("--s-max", o.s_max, "Largest s");
  scan->add_option("--samples", o.samples, "Number of samples");
  scan->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  add_tols(scan);

  auto* certify = app.add_subcommand("certify", "Surgery certificate for slope r");
  add_n(certify);
  certify->add_option("--r", o.r, "Slope p/q in (0,4)");
  certify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  add_tols(certify);

  auto* verify = app.add_subcommand("verify", "Run all invariant suites on the standard grid");
  verify->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return usage_error(e.what());
  }

  if (*scan && o.format == "json" && scan->count("--format") == 0) o.format = "csv";

  if (*riley) return cmd_riley(o);
  if (*solve) return cmd_solve(o);
  if (*slope) return cmd_slope(o);
  if (*scan) return cmd_scan(o);
  if (*certify) return cmd_certify(o);
  if (*verify) return cmd_verify(o);
  return usage_error("no subcommand");
}
