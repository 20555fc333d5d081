#pragma once

// Command-line front end. Every command writes JSON lines to `out`; errors are
// reported as {"error": code, "detail": message}.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 suite violation.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "gyroqubit/errors.hpp"
#include "gyroqubit/gyrovector.hpp"
#include "gyroqubit/harness.hpp"
#include "gyroqubit/metrics.hpp"
#include "gyroqubit/qubit_density.hpp"
#include "gyroqubit/rng.hpp"
#include "gyroqubit/serialize.hpp"
#include "gyroqubit/suites.hpp"

namespace gyroqubit::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kUsage = 2, kViolation = 3 };

/// Parses "x,y,z" (no spaces).
inline BlochVector<double> parse_vector(const std::string& text) {
  double c[3];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, c[i]);
    if (ec != std::errc() || next == p) break;
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') break;
      ++p;
    } else if (p == end) {
      return {c[0], c[1], c[2]};
    }
  }
  throw UsageError("BadVector", "expected a vector 'x,y,z', got '" + text + "'");
}

/// Hermitian matrix from JSON: {"a11","a22","re12","im12"}, a state line
/// ({"result": {"matrix": ...}}), or a 2x2 array whose entries are numbers or
/// [re, im] pairs.
inline Hermitian2<double> parse_matrix(const json& j) {
  if (j.is_object()) {
    if (j.contains("result")) return parse_matrix(j.at("result"));
    if (j.contains("matrix")) return parse_matrix(j.at("matrix"));
    return hermitian_from_json(j);
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2) {
    throw std::invalid_argument("expected a 2x2 matrix");
  }
  auto entry = [&](int r, int c) -> std::complex<double> {
    const auto& e = j[r][c];
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_array() && e.size() == 2) return {e[0].get<double>(), e[1].get<double>()};
    throw std::invalid_argument("matrix entries must be numbers or [re, im] pairs");
  };
  const auto a11 = entry(0, 0), a12 = entry(0, 1), a21 = entry(1, 0), a22 = entry(1, 1);
  const double scale = std::max({1.0, std::abs(a11), std::abs(a12), std::abs(a22)});
  if (std::abs(a11.imag()) > 1e-12 * scale || std::abs(a22.imag()) > 1e-12 * scale ||
      std::abs(a12 - std::conj(a21)) > 1e-12 * scale) {
    throw NotHermitian("matrix is not Hermitian");
  }
  return {a11.real(), a22.real(), a12.real(), a12.imag()};
}

namespace detail {

inline json error_json(const std::string& code, const std::string& detail) {
  return {{"error", code}, {"detail", detail}};
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in = std::cin) {
  CLI::App app{"Einstein gyrogroup and qubit density matrix toolkit", "gyroqubit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indented JSON");

  auto emit = [&](const json& j) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; };

  std::string u_text, v_text, w_text, json_text;
  double t = 0.0;

  auto* add = app.add_subcommand("add", "Einstein addition u (+) v");
  bool closed = false;
  add->add_option("u", u_text)->required();
  add->add_option("v", v_text)->required();
  add->add_flag("--closed", closed, "Closed-ball extension (unit-norm left operand absorbs)");

  auto* gyr = app.add_subcommand("gyr", "Gyration gyr[u,v] or its image of w");
  gyr->add_option("u", u_text)->required();
  gyr->add_option("v", v_text)->required();
  gyr->add_option("w", w_text);

  auto* mul = app.add_subcommand("mul", "Scalar multiplication t (x) u");
  mul->add_option("t", t)->required();
  mul->add_option("u", u_text)->required();

  auto* boost = app.add_subcommand("boost", "Lorentz boost B(u), or B(u) applied to (1; v)");
  boost->add_option("u", u_text)->required();
  boost->add_option("v", v_text);

  auto* density = app.add_subcommand("density", "Density matrix of a Bloch vector");
  density->add_option("v", v_text)->required();

  auto* bloch = app.add_subcommand("bloch", "Bloch vector of a density matrix (JSON argument or stdin)");
  bloch->add_option("matrix", json_text, "JSON matrix; '-' or omitted reads one line from stdin");

  auto* sqrt_cmd = app.add_subcommand("sqrt", "Principal square root of rho_v");
  sqrt_cmd->add_option("v", v_text)->required();

  auto* odot_cmd = app.add_subcommand("odot", "rho_u (.) rho_v");
  odot_cmd->add_option("u", u_text)->required();
  odot_cmd->add_option("v", v_text)->required();

  auto* inv = app.add_subcommand("inv", "Inverse state rho_{-u} = det(rho) rho^{-1}");
  bool printed = false;
  inv->add_option("u", u_text)->required();
  inv->add_flag("--printed-eqn", printed, "Use the coefficient 1/(4 gamma) instead of 1/(4 gamma^2)");

  auto* dist = app.add_subcommand("dist", "Distances between u and v");
  std::vector<std::string> metrics;
  dist->add_option("u", u_text)->required();
  dist->add_option("v", v_text)->required();
  dist->add_option("--metric", metrics, "gyrometric, rapidity, trace, prop52 (repeatable; default all)")
      ->check(CLI::IsMember({"gyrometric", "rapidity", "trace", "prop52"}))
      ->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  TrialConfig cfg;
  std::string suite;
  bool timing = false;
  verify->add_option("--suite", suite, "Suite id or 'all'")->required();
  verify->add_option("--trials", cfg.trials)->capture_default_str();
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--tol", cfg.tol_rel, "Relative tolerance")->capture_default_str();
  verify->add_option("--tol-abs", cfg.tol_abs, "Absolute tolerance")->capture_default_str();
  verify->add_option("--cap", cfg.radius_cap, "Radius cap in (0, 1)")->capture_default_str();
  verify->add_option("--boundary-fraction", cfg.boundary_fraction)->capture_default_str();
  verify->add_option("--threads", cfg.threads, "0 uses every core")->capture_default_str();
  verify->add_flag("--timing", timing, "Include elapsed_ms in reports");

  auto* sample = app.add_subcommand("sample", "Seeded samples from the ball");
  std::size_t n = 10;
  std::uint64_t seed = 42;
  double cap = 0.999;
  double fraction = 0.0;
  sample->add_option("--n", n)->capture_default_str();
  sample->add_option("--seed", seed)->capture_default_str();
  sample->add_option("--cap", cap, "Radius cap in (0, 1]")->capture_default_str();
  sample->add_option("--boundary-fraction", fraction)->capture_default_str();

  std::vector<std::string> argv_store{"gyroqubit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, out);
  } catch (const CLI::ParseError& e) {
    emit(detail::error_json("UsageError", e.what()));
    return kUsage;
  }

  try {
    if (add->parsed()) {
      const auto u = parse_vector(u_text), v = parse_vector(v_text);
      emit({{"result", to_json(closed ? einstein_add_closed(u, v) : einstein_add(u, v))}});
    } else if (gyr->parsed()) {
      const auto u = parse_vector(u_text), v = parse_vector(v_text);
      const auto g = gyration(u, v);
      if (w_text.empty()) {
        emit({{"result", to_json(g)}});
      } else {
        emit({{"result", to_json(g.apply(parse_vector(w_text)))}});
      }
    } else if (mul->parsed()) {
      emit({{"result", to_json(scalar_mul(t, parse_vector(u_text)))}});
    } else if (boost->parsed()) {
      const auto u = parse_vector(u_text);
      if (v_text.empty()) {
        emit({{"result", to_json(lorentz_boost(u))}});
      } else {
        const auto [time, sum] = boost_add(u, parse_vector(v_text));
        emit({{"result", to_json(sum)}, {"time", time}});
      }
    } else if (density->parsed()) {
      emit({{"result", to_json(from_bloch(parse_vector(v_text)), true)}});
    } else if (bloch->parsed()) {
      if (json_text.empty() || json_text == "-") {
        if (!std::getline(in, json_text)) throw UsageError("BadMatrix", "no matrix on standard input");
      }
      Hermitian2<double> m;
      try {
        m = parse_matrix(json::parse(json_text));
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError("BadMatrix", e.what());
      }
      emit({{"result", to_json(to_bloch(m))}});
    } else if (sqrt_cmd->parsed()) {
      emit({{"result", to_json(sqrt_density(from_bloch(parse_vector(v_text))))}});
    } else if (odot_cmd->parsed()) {
      const auto r = odot(from_bloch(parse_vector(u_text)), from_bloch(parse_vector(v_text)));
      emit({{"result", to_json(r.bloch)}, {"matrix", to_json(r.matrix())}});
    } else if (inv->parsed()) {
      const auto rho = from_bloch(parse_vector(u_text));
      if (printed) {
        const auto m = inverse_state_matrix(rho, InverseFormula::Printed);
        emit({{"formula", "printed"}, {"matrix", to_json(m)}, {"trace", m.trace()}, {"is_state", false}});
      } else {
        const auto m = inverse_state_matrix(rho, InverseFormula::Corrected);
        emit({{"formula", "corrected"},
              {"result", to_json(inverse_state(rho).bloch)},
              {"matrix", to_json(m)},
              {"trace", m.trace()},
              {"is_state", true}});
      }
    } else if (dist->parsed()) {
      const auto u = parse_vector(u_text), v = parse_vector(v_text);
      std::set<std::string> want(metrics.begin(), metrics.end());
      if (want.empty()) want = {"gyrometric", "rapidity", "trace", "prop52"};
      json j = json::object();
      if (want.count("gyrometric")) j["gyrometric"] = gyrometric(u, v);
      if (want.count("rapidity")) j["rapidity"] = rapidity_metric(u, v);
      if (want.count("trace")) {
        require_interior(u, "left operand");
        require_interior(v, "right operand");
        j["trace"] = trace_metric(DensityMatrix<double>{u}.matrix(), DensityMatrix<double>{v}.matrix());
      }
      if (want.count("prop52")) j["prop52"] = prop_bound(u, v);
      emit(j);
    } else if (verify->parsed()) {
      try {
        cfg.validate();
      } catch (const OutOfRange& e) {
        throw UsageError("BadConfig", e.what());
      }
      std::vector<SuiteReport> reports;
      if (suite == "all") {
        reports = run_all(cfg);
      } else {
        reports.push_back(run_suite(suite, cfg));
      }
      bool ok = true;
      for (const auto& r : reports) {
        emit(to_json(r, timing));
        ok = ok && r.passed();
      }
      return ok ? kOk : kViolation;
    } else if (sample->parsed()) {
      if (!(cap > 0.0 && cap <= 1.0)) throw UsageError("BadConfig", "cap must lie in (0, 1]");
      if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw UsageError("BadConfig", "boundary fraction must lie in [0, 1]");
      }
      for (std::size_t i = 0; i < n; ++i) {
        auto rng = SplitMix64::for_trial(seed, "sample", i);
        emit({{"index", i}, {"v", to_json(sample_stratified(rng, cap, fraction))}});
      }
    }
  } catch (const UsageError& e) {
    emit(detail::error_json(e.code(), e.what()));
    return kUsage;
  } catch (const DomainError& e) {
    emit(detail::error_json(e.code(), e.what()));
    return kDomain;
  }
  return kOk;
}

}  // namespace gyroqubit::cli
