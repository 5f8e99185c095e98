#pragma once

// Averages over the unit 4-torus [0,1)^4, reproducible for a fixed
// (seed, samples, method) regardless of the number of worker threads.

#include <array>
#include <cstdint>
#include <functional>
#include <string_view>

namespace g2adm {

enum class QuadratureMethod { MonteCarlo, LatticeRule };

std::string_view method_name(QuadratureMethod m);
/// "monte-carlo" or "lattice-rule"; throws ParseError otherwise.
QuadratureMethod parse_method(std::string_view name);

struct QuadratureConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20080501;
  QuadratureMethod method = QuadratureMethod::MonteCarlo;
  double target_stderr = 1e-3;
  /// Worker threads; 0 means hardware concurrency. Never affects results.
  unsigned threads = 1;

  /// Throws InvalidParams if samples < 10^4 or target_stderr <= 0.
  void validate() const;
};

struct QuadratureEstimate {
  double mean = 0;
  double std_error = 0;
  /// Samples dropped because the integrand was not finite.
  std::uint64_t rejected = 0;
  std::uint64_t used = 0;
};

using TorusPoint = std::array<double, 4>;
/// Integrand; a non-finite return value rejects the sample.
using TorusIntegrand = std::function<double(const TorusPoint&)>;

/// Monte Carlo: independent uniform points, stderr from the sample
/// variance. Lattice rule: 16 random shifts of a rank-1 Korobov lattice,
/// stderr from the spread of the per-shift means.
/// Throws QuadratureUnstable when stderr exceeds 10x the target.
QuadratureEstimate torus_average(const TorusIntegrand& f, const QuadratureConfig& config);

/// Number of independent random shifts used by the lattice rule.
inline constexpr unsigned kLatticeShifts = 16;

/// Korobov generator (1, g, g^2, g^3) mod n chosen from a fixed candidate
/// set by the smallest P_2 figure of merit.
std::array<std::uint64_t, 4> korobov_vector(std::uint64_t n);

}  // namespace g2adm
