// Copyright 2026 The brtriple Authors
// SPDX-License-Identifier: Apache-2.0

// brtriple: closed form, Monte Carlo, K-spectrum tables and verification.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error, 3 usage error.

#include <brtriple/brtriple.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 3;

struct DomainError {
  brt_status status;
  std::string message;
};

void check(brt_status s) {
  if (s != BRT_OK) throw DomainError{s, brt_last_error()};
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

ordered_json num(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

struct Result {
  std::string name;
  double value;
  std::optional<double> std_error;
  std::string provenance;  // closed_form | trace_series | monte_carlo | identity
};

struct RunRecord {
  std::string command;
  std::vector<std::pair<std::string, ordered_json>> parameters;
  std::vector<Result> results;
  std::vector<std::string> notes;
  std::vector<std::string> table_columns;
  std::vector<std::vector<ordered_json>> table;
  double wall_time = 0.0;
  std::optional<std::uint64_t> seed;

  void print(const std::string& format) const {
    if (format == "json") {
      ordered_json params = ordered_json::object();
      for (const auto& [k, v] : parameters) params[k] = v;
      ordered_json results_json = ordered_json::array();
      for (const auto& r : results) {
        ordered_json j{{"name", r.name}, {"value", num(r.value)}};
        j["std_error"] = r.std_error ? num(*r.std_error) : ordered_json(nullptr);
        j["provenance"] = r.provenance;
        results_json.push_back(j);
      }
      ordered_json out{{"schema", "brtriple.run/1"},
                       {"command", command},
                       {"parameters", params},
                       {"results", results_json}};
      if (!table_columns.empty()) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : table) {
          ordered_json r = ordered_json::object();
          for (std::size_t i = 0; i < row.size(); ++i) r[table_columns[i]] = row[i];
          rows.push_back(r);
        }
        out["table"] = rows;
      }
      out["notes"] = notes;
      out["wall_time"] = wall_time;
      out["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
      std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
      const auto cell = [](const ordered_json& v) {
        return v.is_string() ? csv_escape(v.get<std::string>()) : v.dump();
      };
      for (const auto& [k, v] : parameters) std::cout << k << ',';
      if (table_columns.empty()) {
        std::cout << "name,value,std_error,provenance\n";
        for (const auto& r : results) {
          for (const auto& p : parameters) std::cout << cell(p.second) << ',';
          std::cout << csv_escape(r.name) << ',' << fmt(r.value) << ','
                    << (r.std_error ? fmt(*r.std_error) : "") << ',' << r.provenance << '\n';
        }
      } else {
        for (std::size_t i = 0; i < table_columns.size(); ++i) std::cout << (i ? "," : "") << table_columns[i];
        std::cout << '\n';
        for (const auto& row : table) {
          for (const auto& p : parameters) std::cout << cell(p.second) << ',';
          for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << cell(row[i]);
          std::cout << '\n';
        }
      }
    } else {
      std::cout << command;
      for (const auto& [k, v] : parameters) std::cout << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
      std::cout << '\n';
      for (const auto& r : results) {
        std::cout << "  " << r.name << " = " << fmt(r.value);
        if (r.std_error) std::cout << " +/- " << fmt(*r.std_error);
        std::cout << "  [" << r.provenance << "]\n";
      }
      if (!table_columns.empty()) {
        for (std::size_t i = 0; i < table_columns.size(); ++i) std::printf(i ? " %22s" : "%6s", table_columns[i].c_str());
        std::printf("\n");
        for (const auto& row : table) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            const std::string s = row[i].is_number_float() ? fmt(row[i].get<double>())
                                  : row[i].is_string()     ? row[i].get<std::string>()
                                                           : row[i].dump();
            std::printf(i ? " %22s" : "%6s", s.c_str());
          }
          std::printf("\n");
        }
      }
      for (const auto& n : notes) std::cout << "  note: " << n << '\n';
      if (seed) std::cout << "  seed: " << *seed << '\n';
      std::cout << "  wall_time: " << fmt(wall_time) << " s\n";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Params {
  brt_params* handle = nullptr;
  Params(int n, double a, double b, double c) { check(brt_params_create(n, a, b, c, &handle)); }
  ~Params() { brt_params_destroy(handle); }
  Params(const Params&) = delete;
  Params& operator=(const Params&) = delete;
};

double closed_value(const Params& p, double tol, std::int64_t max_terms) {
  brt_signed_log v;
  check(brt_closed_form(p.handle, tol, max_terms, &v, nullptr, nullptr));
  return brt_signed_log_to_double(v);
}

RunRecord cmd_closed(int n, double a, double b, double c, double tol, std::int64_t max_terms) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.command = "closed";
  rec.parameters = {{"n", n}, {"alpha", a}, {"beta", b}, {"gamma", c}, {"tol", tol}, {"max_terms", max_terms}};
  const Params p(n, a, b, c);
  const double closed = closed_value(p, tol, max_terms);
  rec.results.push_back({"I_n", closed, std::nullopt, "closed_form"});

  double trace = 0.0;
  int converged = 0;
  std::int64_t terms = 0;
  if (brt_trace_series(p.handle, max_terms, tol, &trace, &converged, &terms) == BRT_OK && converged) {
    rec.results.push_back({"I_n", trace, std::nullopt, "trace_series"});
  }
  if (n >= 2 && brt_trace_series_signed(p.handle, max_terms, tol, &trace, &converged, &terms) == BRT_OK &&
      converged) {
    rec.results.push_back({"I_n_signed_ktype_trace", trace, std::nullopt, "trace_series"});
  }
  if (n == 1) {
    double mu[3];
    brt_params_mu(p.handle, mu);
    brt_signed_log v;
    check(brt_closed_form_n1(mu, &v));
    rec.results.push_back({"n1_reduction", brt_signed_log_to_double(v), std::nullopt, "closed_form"});
  } else if (n == 2) {
    brt_signed_log printed, corrected;
    check(brt_closed_form_n2_printed(a, b, c, &printed));
    check(brt_closed_form_n2_corrected(a, b, c, &corrected));
    const double pr = brt_signed_log_to_double(printed);
    rec.results.push_back({"n2_reduction_printed", pr, std::nullopt, "closed_form"});
    rec.results.push_back({"n2_reduction_corrected", brt_signed_log_to_double(corrected), std::nullopt, "closed_form"});
    const double g = std::tgamma((a - 2) / 4) * std::tgamma((b - 2) / 4) * std::tgamma((c - 2) / 4);
    rec.notes.push_back("the printed n=2 reduction omits Gamma((a-2)/4) Gamma((b-2)/4) Gamma((c-2)/4) = " + fmt(g) +
                        "; closed/printed = " + fmt(closed / pr));
  }
  rec.wall_time = seconds_since(start);
  return rec;
}

brt_mc_options mc_options(std::uint64_t samples, std::uint64_t seed, unsigned threads, bool force) {
  brt_mc_options o;
  brt_mc_options_default(&o);
  o.samples = samples;
  o.seed = seed;
  o.threads = threads;
  o.force = force ? 1 : 0;
  return o;
}

RunRecord cmd_mc(int n, double a, double b, double c, std::uint64_t samples, std::uint64_t seed,
                 unsigned threads, bool force) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.command = "mc";
  rec.seed = seed;
  const unsigned used_threads = threads ? threads : brt_default_thread_count();
  rec.parameters = {{"n", n}, {"alpha", a}, {"beta", b}, {"gamma", c}, {"samples", samples}, {"seed", seed},
                    {"threads", used_threads}};
  const Params p(n, a, b, c);
  const brt_mc_options o = mc_options(samples, seed, threads, force);
  brt_estimate e;
  check(brt_estimate_In(p.handle, &o, &e));
  if (e.forced) rec.notes.push_back(brt_last_error());
  rec.results.push_back({"I_n", e.mean, e.std_error, "monte_carlo"});
  brt_signed_log v;
  if (brt_closed_form(p.handle, 1e-12, 1'000'000, &v, nullptr, nullptr) == BRT_OK) {
    const double closed = brt_signed_log_to_double(v);
    rec.results.push_back({"I_n", closed, std::nullopt, "closed_form"});
    const double diff = e.mean - closed;
    double z;
    if (e.std_error > 0.0) {
      z = diff / e.std_error;
    } else {
      z = std::fabs(diff) <= 1e-12 * std::fabs(closed) ? 0.0 : INFINITY;
    }
    rec.results.push_back({"z_score", z, std::nullopt, "monte_carlo"});
  } else {
    rec.notes.push_back(std::string("closed form unavailable: ") + brt_last_error());
  }
  rec.wall_time = seconds_since(start);
  return rec;
}

RunRecord cmd_spectrum(int n, double lambda, int m_max) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.command = "spectrum";
  rec.parameters = {{"n", n}, {"lambda", lambda}, {"m_max", m_max}};
  rec.table_columns = {"m", "A_2m", "dim_sum", "ratio", "expected_ratio"};
  brt_signed_log a0;
  check(brt_eigenvalue_A0(n, lambda, &a0));
  rec.results.push_back({"A_0", brt_signed_log_to_double(a0), std::nullopt, "closed_form"});
  double previous = NAN;
  for (int m = 0; m <= m_max; ++m) {
    brt_signed_log a;
    check(brt_eigenvalue_A2m(n, m, lambda, &a));
    const double value = brt_signed_log_to_double(a);
    std::size_t needed = 0;
    brt_dim_sum(n, m, nullptr, 0, &needed);
    std::string dims(needed, '\0');
    check(brt_dim_sum(n, m, dims.data(), dims.size(), &needed));
    dims.resize(needed - 1);
    // A_2m / A_2(m-1) against (n+m-1+lambda/2)/(n+m-1-lambda/2).
    const double k = m - 1;
    const ordered_json ratio = m == 0 ? ordered_json(nullptr) : num(value / previous);
    const ordered_json expected =
        m == 0 ? ordered_json(nullptr) : num((n + k + lambda / 2) / (n + k - lambda / 2));
    rec.table.push_back({m, num(value), dims, ratio, expected});
    previous = value;
  }
  rec.notes.push_back("ratio = A_2m / A_2(m-1); expected (n+m-1+lambda/2)/(n+m-1-lambda/2)");
  rec.wall_time = seconds_since(start);
  return rec;
}

int cmd_verify(const std::string& level, std::uint64_t seed, unsigned threads, bool acceptance_only,
               const std::string& format) {
  const brt_verify_level lv = level == "full" ? BRT_VERIFY_FULL : BRT_VERIFY_QUICK;
  brt_report* report = nullptr;
  check(acceptance_only ? brt_verify_acceptance(lv, seed, threads, &report)
                        : brt_verify(lv, seed, threads, &report));
  const bool passed = brt_report_passed(report) != 0;
  const ordered_json j = ordered_json::parse(brt_report_json(report));
  brt_report_destroy(report);
  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "suite,check,measured,tolerance,passed,seconds,seed\n";
    for (const auto& s : j["suites"]) {
      for (const auto& c : s["checks"]) {
        std::cout << s["id"].get<std::string>() << ',' << csv_escape(c["name"].get<std::string>()) << ','
                  << c["measured"].dump() << ',' << c["tolerance"].dump() << ','
                  << (c["passed"].get<bool>() ? "true" : "false") << ',' << s["seconds"].dump() << ','
                  << seed << '\n';
      }
    }
  } else {
    std::cout << "verify level=" << level << " seed=" << seed << '\n';
    for (const auto& s : j["suites"]) {
      std::printf("%s %-16s %s (%.2fs)\n", s["passed"].get<bool>() ? "PASS" : "FAIL",
                  s["id"].get<std::string>().c_str(), s["title"].get<std::string>().c_str(),
                  s["seconds"].get<double>());
      for (const auto& c : s["checks"]) {
        if (c["passed"].get<bool>()) continue;
        std::printf("       failed: %s: measured %s, tolerance %s %s\n", c["name"].get<std::string>().c_str(),
                    c["measured"].dump().c_str(), c["tolerance"].dump().c_str(),
                    c["detail"].get<std::string>().c_str());
      }
    }
    std::printf("%s in %.1fs\n", passed ? "all suites passed" : "verification FAILED", j["wall_time"].get<double>());
  }
  return passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brtriple: triple integrals over spheres for the complex symplectic group"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", brt_version());

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0: machine parallelism)")
      ->envname("BRTRIPLE_THREADS");

  int n = 1;
  double alpha = 4.0, beta = 4.0, gamma = 4.0;
  double tol = 1e-12;
  std::int64_t max_terms = 1'000'000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0xB3A1;
  bool force = false;
  double lambda = -3.0;
  int m_max = 10;
  std::string level = "quick";
  bool acceptance_only = false;

  const auto add_triple = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Rank n >= 1")->check(CLI::Range(1, 64))->capture_default_str();
    sub->add_option("--alpha", alpha)->capture_default_str();
    sub->add_option("--beta", beta)->capture_default_str();
    sub->add_option("--gamma", gamma)->capture_default_str();
  };

  CLI::App* closed = app.add_subcommand("closed", "Closed form, trace series and reductions");
  add_triple(closed);
  closed->add_option("--tol", tol)->capture_default_str();
  closed->add_option("--max-terms", max_terms)->capture_default_str();

  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimate with closed-form z-score");
  add_triple(mc);
  mc->add_option("--samples", samples)->capture_default_str();
  mc->add_option("--seed", seed)->capture_default_str();
  mc->add_flag("--force", force, "Allow kernel exponents in (-1, 0)");

  CLI::App* spectrum = app.add_subcommand("spectrum", "K-spectrum table A_2m and dimension sums");
  spectrum->add_option("--n", n)->check(CLI::Range(1, 64))->capture_default_str();
  spectrum->add_option("--lambda", lambda)->capture_default_str();
  spectrum->add_option("--m-max", m_max)->check(CLI::Range(0, 100000))->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Run invariant suites and acceptance criteria");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_flag("--acceptance-only", acceptance_only);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*closed) {
      cmd_closed(n, alpha, beta, gamma, tol, max_terms).print(format);
    } else if (*mc) {
      cmd_mc(n, alpha, beta, gamma, samples, seed, threads, force).print(format);
    } else if (*spectrum) {
      cmd_spectrum(n, lambda, m_max).print(format);
    } else if (*verify) {
      return cmd_verify(level, seed, threads, acceptance_only, format);
    }
  } catch (const DomainError& e) {
    std::cerr << "error (" << brt_status_string(e.status) << "): " << e.message << '\n';
    return kExitDomain;
  }
  return kExitOk;
}
