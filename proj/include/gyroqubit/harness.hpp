#pragma once

// Seeded Monte Carlo verification of the gyrogroup axioms, the density-matrix
// isomorphism, metric properties and the trace/rapidity bounds.
//
// Every suite is a list of named checks. A trial draws its inputs from its own
// counter-based stream (see rng.hpp), evaluates each check and records a
// non-negative residual; a residual above the check's tolerance is a
// violation. Trials may run on several threads: per-thread accumulators are
// merged in trial order with order-independent max/sum, so reports do not
// depend on the thread count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "gyroqubit/errors.hpp"
#include "gyroqubit/gyrovector.hpp"
#include "gyroqubit/hermitian2.hpp"
#include "gyroqubit/metrics.hpp"
#include "gyroqubit/qubit_density.hpp"
#include "gyroqubit/rng.hpp"
#include "gyroqubit/serialize.hpp"

namespace gyroqubit {

struct TrialConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 10000;
  double radius_cap = 0.999;
  double boundary_fraction = 0.2;
  double tol_rel = 1e-9;
  double tol_abs = 1e-12;
  unsigned threads = 0;  ///< 0: hardware concurrency

  void validate() const {
    if (trials == 0) throw OutOfRange("trials must be positive");
    if (!(radius_cap > 0.0 && radius_cap < 1.0)) throw OutOfRange("radius_cap must lie in (0, 1)");
    if (!(boundary_fraction >= 0.0 && boundary_fraction <= 1.0)) {
      throw OutOfRange("boundary_fraction must lie in [0, 1]");
    }
    if (!(tol_rel > 0.0) || !(tol_abs > 0.0)) throw OutOfRange("tolerances must be positive");
  }
};

struct CheckReport {
  std::string name;
  std::string precision = "double";
  double tolerance = 0.0;
  bool informational = false;  ///< observation only, never a violation
  std::size_t trials = 0;
  std::size_t violations = 0;
  double max_residual = 0.0;
  double min_value = std::numeric_limits<double>::infinity();  ///< informational checks only
  std::uint64_t worst_trial = 0;
  json witness;

  /// residual / tolerance, the quantity used to rank checks against each other.
  double severity() const {
    if (informational) return 0.0;
    if (tolerance > 0.0) return max_residual / tolerance;
    return max_residual > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
};

struct SuiteReport {
  std::string suite_id;
  std::uint64_t seed = 0;
  std::size_t trials_run = 0;
  std::size_t violations = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string worst_check;
  json worst_witness;
  double elapsed_ms = 0.0;
  std::vector<CheckReport> checks;
  json notes = json::object();

  bool passed() const { return violations == 0; }
};

namespace detail {

// Non-finite residuals are clamped so that they compare, serialize and count
// as violations.
inline double sanitize(double r) {
  if (std::isnan(r) || r > std::numeric_limits<double>::max()) return std::numeric_limits<double>::max();
  return r;
}

}  // namespace detail

/// |actual - target| / max(1, |target|)
template <std::floating_point T>
double residual(T actual, T target) {
  return detail::sanitize(double(std::abs(actual - target) / std::max(T(1), std::abs(target))));
}

template <std::floating_point T>
double residual(const BlochVector<T>& actual, const BlochVector<T>& target) {
  return detail::sanitize(double((actual - target).norm() / std::max(T(1), target.norm())));
}

/// Amount by which lhs <= rhs fails, relative to max(1, |rhs|).
template <std::floating_point T>
double excess(T lhs, T rhs) {
  return detail::sanitize(double(std::max(T(0), lhs - rhs) / std::max(T(1), std::abs(rhs))));
}

/// Amount by which lhs <= rhs fails, absolute.
template <std::floating_point T>
double excess_abs(T lhs, T rhs) {
  return detail::sanitize(double(std::max(T(0), lhs - rhs)));
}

class TrialScope;

/// Builder used by the suite implementations.
class Suite {
 public:
  Suite(std::string id, const TrialConfig& cfg) : id_(std::move(id)), cfg_(cfg) {}

  std::size_t check(std::string name, double tolerance, std::string precision = "double") {
    CheckReport c;
    c.name = std::move(name);
    c.tolerance = tolerance;
    c.precision = std::move(precision);
    checks_.push_back(std::move(c));
    return checks_.size() - 1;
  }

  std::size_t observe(std::string name, std::string precision = "double") {
    const auto i = check(std::move(name), 0.0, std::move(precision));
    checks_[i].informational = true;
    return i;
  }

  const TrialConfig& config() const { return cfg_; }
  json& notes() { return notes_; }

  /// Runs `fn(rng, scope)` for trials [0, n).
  void run(std::size_t n, const std::function<void(SplitMix64&, TrialScope&)>& fn);

  SuiteReport finish() const;

 private:
  std::string id_;
  TrialConfig cfg_;
  std::vector<CheckReport> checks_;
  std::size_t trials_ = 0;
  json notes_ = json::object();
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  friend class TrialScope;
};

class TrialScope {
 public:
  TrialScope(std::vector<CheckReport>& acc, std::uint64_t trial) : acc_(acc), trial_(trial) {}

  std::uint64_t trial() const { return trial_; }

  /// Records a residual; `witness` is only invoked when this trial becomes
  /// the worst seen so far for the check.
  template <class WitnessFn>
  void record(std::size_t check, double residual, WitnessFn&& witness) {
    auto& c = acc_[check];
    residual = detail::sanitize(residual);
    ++c.trials;
    if (c.informational) {
      c.min_value = std::min(c.min_value, residual);
    } else if (residual > c.tolerance) {
      ++c.violations;
    }
    if (c.trials == 1 || residual > c.max_residual) {
      c.max_residual = residual;
      c.worst_trial = trial_;
      c.witness = witness();
    }
  }

  void record(std::size_t check, double residual) {
    record(check, residual, [] { return json(); });
  }

 private:
  std::vector<CheckReport>& acc_;
  std::uint64_t trial_;
};

namespace detail {

inline CheckReport fresh(const CheckReport& c) {
  CheckReport f;
  f.name = c.name;
  f.precision = c.precision;
  f.tolerance = c.tolerance;
  f.informational = c.informational;
  return f;
}

// Folds a later block of trials into `dst`; on equal residuals the earlier
// trial stays the witness.
inline void merge(CheckReport& dst, const CheckReport& src) {
  if (src.trials == 0) return;
  if (dst.trials == 0 || src.max_residual > dst.max_residual) {
    dst.max_residual = src.max_residual;
    dst.worst_trial = src.worst_trial;
    dst.witness = src.witness;
  }
  dst.trials += src.trials;
  dst.violations += src.violations;
  dst.min_value = std::min(dst.min_value, src.min_value);
}

}  // namespace detail

inline void Suite::run(std::size_t n, const std::function<void(SplitMix64&, TrialScope&)>& fn) {
  if (trials_ != 0) throw UsageError("InternalError", "Suite::run called twice for " + id_);
  const std::size_t errors_check = check("domain_errors", 0.0);

  unsigned threads = cfg_.threads ? cfg_.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, n / 16)));

  std::vector<CheckReport> blank;
  for (const auto& c : checks_) blank.push_back(detail::fresh(c));
  std::vector<std::vector<CheckReport>> partial(threads, blank);

  auto worker = [&](unsigned w) {
    auto& acc = partial[w];
    const std::size_t lo = n * w / threads;
    const std::size_t hi = n * (w + 1) / threads;
    for (std::size_t i = lo; i < hi; ++i) {
      auto rng = SplitMix64::for_trial(cfg_.seed, id_, i);
      TrialScope scope(acc, i);
      try {
        fn(rng, scope);
        scope.record(errors_check, 0.0);
      } catch (const std::exception& e) {
        scope.record(errors_check, 1.0, [&] { return json{{"error", e.what()}}; });
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  for (const auto& part : partial)
    for (std::size_t c = 0; c < checks_.size(); ++c) detail::merge(checks_[c], part[c]);
  trials_ = n;
}

inline SuiteReport Suite::finish() const {
  SuiteReport r;
  r.suite_id = id_;
  r.seed = cfg_.seed;
  r.trials_run = trials_;
  r.checks = checks_;
  r.notes = notes_;
  const CheckReport* worst = nullptr;
  for (const auto& c : checks_) {
    r.violations += c.violations;
    if (c.informational) continue;
    if (!worst || c.severity() > worst->severity()) worst = &c;
  }
  if (worst) {
    r.max_residual = worst->max_residual;
    r.tolerance = worst->tolerance;
    r.worst_check = worst->name;
    r.worst_witness = worst->witness;
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  return r;
}

inline json to_json(const CheckReport& c) {
  json j{{"name", c.name},
         {"precision", c.precision},
         {"trials", c.trials},
         {"max_residual", c.max_residual},
         {"worst_trial", c.worst_trial},
         {"witness", c.witness}};
  if (c.informational) {
    j["informational"] = true;
    j["min_value"] = c.trials ? c.min_value : 0.0;
  } else {
    j["tolerance"] = c.tolerance;
    j["violations"] = c.violations;
  }
  return j;
}

/// Single-line report. Elapsed time is only included on request so that
/// equal configurations produce byte-identical output.
inline json to_json(const SuiteReport& r, bool with_timing = false) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  json j{{"suite", r.suite_id},
         {"seed", r.seed},
         {"trials_run", r.trials_run},
         {"violations", r.violations},
         {"passed", r.passed()},
         {"max_residual", r.max_residual},
         {"tolerance", r.tolerance},
         {"worst_check", r.worst_check},
         {"worst_witness", r.worst_witness},
         {"checks", checks}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace gyroqubit
