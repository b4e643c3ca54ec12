#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace lcoarea {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Caller passed something malformed: unknown ids, bad dimensions,
/// schema violations, cycles, axiom failures at parse time.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact method was asked to run beyond its configured instance size.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A geometric construction has no admissible solution.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation is not defined for the given backend or configuration.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked internal invariant failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Deterministic random source. The engine sequence is fixed by the
/// standard and all draws are hand-rolled, so identical seeds produce
/// identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t integer(std::uint64_t n);

  /// Poisson draw; large means are split into chunks so the inversion
  /// product never underflows.
  std::size_t poisson(double mean);

 private:
  std::mt19937_64 eng_;
};

/// Parallelism cap: LCOAREA_THREADS if set (>= 1), else hardware
/// concurrency clamped to 8.
int thread_cap();

/// Runs f(0..n-1) on up to thread_cap() workers. Callers keep results
/// in per-index slots so the merged output is schedule-independent.
void parallel_for(int n, const std::function<void(int)>& f);

}  // namespace lcoarea
