#include "g2adm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "g2adm/errors.hpp"

namespace g2adm {

namespace {

constexpr std::uint64_t kBlock = 4096;

struct Partial {
  double sum = 0;
  double sum_sq = 0;
  std::uint64_t used = 0;
  std::uint64_t rejected = 0;

  void add(double x) {
    if (!std::isfinite(x)) {
      ++rejected;
      return;
    }
    sum += x;
    sum_sq += x * x;
    ++used;
  }
  void merge(const Partial& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    used += o.used;
    rejected += o.rejected;
  }
};

double unit_double(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

// Runs task(i) for i in [0, count) on `threads` workers; each task writes
// only its own slot, so the combined result does not depend on scheduling.
template <typename Task>
void run_tasks(std::size_t count, unsigned threads, Task task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += threads) task(i);
    });
  }
}

double bernoulli2(double x) { return x * x - x + 1.0 / 6.0; }

QuadratureEstimate monte_carlo(const TorusIntegrand& f, const QuadratureConfig& q) {
  const std::size_t blocks = (q.samples + kBlock - 1) / kBlock;
  std::vector<Partial> parts(blocks);
  run_tasks(blocks, q.threads, [&](std::size_t k) {
    auto gen = stream(q.seed, k);
    const std::uint64_t begin = k * kBlock;
    const std::uint64_t end = std::min<std::uint64_t>(q.samples, begin + kBlock);
    for (std::uint64_t i = begin; i < end; ++i) {
      TorusPoint x;
      for (auto& c : x) c = unit_double(gen);
      parts[k].add(f(x));
    }
  });
  Partial total;
  for (const auto& p : parts) total.merge(p);
  QuadratureEstimate est;
  est.used = total.used;
  est.rejected = total.rejected;
  if (total.used < 2) throw QuadratureUnstable("too few finite samples");
  const double n = static_cast<double>(total.used);
  est.mean = total.sum / n;
  const double var = std::max(0.0, (total.sum_sq - n * est.mean * est.mean) / (n - 1));
  est.std_error = std::sqrt(var / n);
  return est;
}

QuadratureEstimate lattice_rule(const TorusIntegrand& f, const QuadratureConfig& q) {
  const std::uint64_t n = q.samples / kLatticeShifts;
  const auto gen_vec = korobov_vector(n);
  std::array<TorusPoint, kLatticeShifts> shifts;
  {
    auto gen = stream(q.seed, ~std::uint64_t{0});
    for (auto& s : shifts) {
      for (auto& c : s) c = unit_double(gen);
    }
  }
  const std::size_t blocks_per_shift = (n + kBlock - 1) / kBlock;
  std::vector<Partial> parts(kLatticeShifts * blocks_per_shift);
  run_tasks(parts.size(), q.threads, [&](std::size_t t) {
    const std::size_t s = t / blocks_per_shift;
    const std::uint64_t begin = (t % blocks_per_shift) * kBlock;
    const std::uint64_t end = std::min<std::uint64_t>(n, begin + kBlock);
    for (std::uint64_t i = begin; i < end; ++i) {
      TorusPoint x;
      for (std::size_t j = 0; j < 4; ++j) {
        const double v = static_cast<double>((i * gen_vec[j]) % n) / static_cast<double>(n) +
                         shifts[s][j];
        x[j] = v - std::floor(v);
      }
      parts[t].add(f(x));
    }
  });

  QuadratureEstimate est;
  std::array<double, kLatticeShifts> means{};
  for (std::size_t s = 0; s < kLatticeShifts; ++s) {
    Partial shift;
    for (std::size_t b = 0; b < blocks_per_shift; ++b) shift.merge(parts[s * blocks_per_shift + b]);
    if (shift.used == 0) throw QuadratureUnstable("lattice shift without finite samples");
    means[s] = shift.sum / static_cast<double>(shift.used);
    est.used += shift.used;
    est.rejected += shift.rejected;
  }
  const double k = static_cast<double>(kLatticeShifts);
  est.mean = std::accumulate(means.begin(), means.end(), 0.0) / k;
  double ss = 0;
  for (double m : means) ss += (m - est.mean) * (m - est.mean);
  est.std_error = std::sqrt(ss / (k - 1) / k);
  return est;
}

}  // namespace

std::string_view method_name(QuadratureMethod m) {
  return m == QuadratureMethod::MonteCarlo ? "monte-carlo" : "lattice-rule";
}

QuadratureMethod parse_method(std::string_view name) {
  if (name == "monte-carlo") return QuadratureMethod::MonteCarlo;
  if (name == "lattice-rule") return QuadratureMethod::LatticeRule;
  throw ParseError("unknown quadrature method '" + std::string(name) + "'");
}

void QuadratureConfig::validate() const {
  if (samples < 10'000) throw InvalidParams("quadrature needs at least 10^4 samples");
  if (!(target_stderr > 0)) throw InvalidParams("target standard error must be positive");
}

std::array<std::uint64_t, 4> korobov_vector(std::uint64_t n) {
  std::array<std::uint64_t, 4> best{1, 1, 1, 1};
  if (n < 5) return best;
  double best_merit = INFINITY;
  const double golden = std::numbers::phi - 1.0;
  for (int k = 1; k <= 48; ++k) {
    const double frac = std::fmod(k * golden, 1.0);
    const auto g = static_cast<std::uint64_t>(frac * static_cast<double>(n));
    if (g < 2 || std::gcd(g, n) != 1) continue;
    const std::array<std::uint64_t, 4> z{1, g, (g * g) % n, (((g * g) % n) * g) % n};
    double merit = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      double prod = 1;
      for (auto zj : z) {
        const double x = static_cast<double>((i * zj) % n) / static_cast<double>(n);
        prod *= 1 + 2 * std::numbers::pi * std::numbers::pi * bernoulli2(x);
      }
      merit += prod;
    }
    merit = merit / static_cast<double>(n) - 1;
    if (merit < best_merit) {
      best_merit = merit;
      best = z;
    }
  }
  return best;
}

QuadratureEstimate torus_average(const TorusIntegrand& f, const QuadratureConfig& config) {
  config.validate();
  QuadratureEstimate est = config.method == QuadratureMethod::MonteCarlo
                               ? monte_carlo(f, config)
                               : lattice_rule(f, config);
  if (est.std_error > 10 * config.target_stderr) {
    throw QuadratureUnstable("standard error " + std::to_string(est.std_error) +
                             " exceeds 10x the target " + std::to_string(config.target_stderr));
  }
  return est;
}

}  // namespace g2adm
