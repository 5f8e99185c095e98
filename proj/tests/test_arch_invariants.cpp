#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/generators.hpp"

namespace g2adm {
namespace {

const double kLog2Pi = std::log(2 * std::numbers::pi);

SiegelMatrix near_identity() {
  return SiegelMatrix(Complex(0, 1), Complex(0, 0.1), Complex(0, 0.1), Complex(0, 1));
}

QuadratureConfig quick(std::uint64_t samples = 100'000, std::uint64_t seed = 5,
                       QuadratureMethod method = QuadratureMethod::MonteCarlo) {
  QuadratureConfig q;
  q.samples = samples;
  q.seed = seed;
  q.method = method;
  return q;
}

TEST(LogH, MonteCarloAgreesWithDenserLatticeRule) {
  const SiegelMatrix t = near_identity();
  const QuadratureEstimate mc = log_h(t, quick(100'000));
  const QuadratureEstimate lattice = log_h(t, quick(400'000, 9, QuadratureMethod::LatticeRule));
  EXPECT_TRUE(std::isfinite(mc.mean));
  EXPECT_LT(std::abs(mc.mean - lattice.mean), 4 * (mc.std_error + lattice.std_error));
}

TEST(LogH, SeedsAgreeAndThreadsDoNotMatter) {
  testing::Rng rng(211);
  const SiegelMatrix t = testing::random_tau(rng);
  const QuadratureEstimate a = log_h(t, quick(60'000, 1));
  const QuadratureEstimate b = log_h(t, quick(60'000, 2));
  EXPECT_LT(std::abs(a.mean - b.mean), 4 * (a.std_error + b.std_error));
  QuadratureConfig threaded = quick(60'000, 1);
  threaded.threads = 3;
  const QuadratureEstimate c = log_h(t, threaded);
  EXPECT_EQ(a.mean, c.mean);
  EXPECT_EQ(a.std_error, c.std_error);
}

TEST(LogH, InvariantUnderTranslation) {
  testing::Rng rng(223);
  for (int trial = 0; trial < 3; ++trial) {
    const SiegelMatrix t = testing::random_tau(rng);
    const QuadratureEstimate a = log_h(t, quick());
    const QuadratureEstimate b = log_h(t.translated(testing::random_symmetric_integer(rng)), quick());
    EXPECT_LT(std::abs(a.mean - b.mean), 10 * std::hypot(a.std_error, b.std_error));
  }
}

TEST(ArchInvariants, IdentitiesHold) {
  testing::Rng rng(227);
  for (int trial = 0; trial < 4; ++trial) {
    const SiegelMatrix t = testing::random_tau(rng);
    ArchOptions opts;
    opts.quadrature = quick();
    const ArchReport r = arch_invariants(t, opts);
    EXPECT_LT(r.residual, 1e-10);
    EXPECT_LT(r.residual, 12 * r.phi_stderr);
    EXPECT_LT(r.s_residual, 1e-10);
    EXPECT_LT(r.delta2_route_gap, 1e-10);
    EXPECT_GT(r.phi, 0);
    EXPECT_EQ(r.epsilon, 0);
    EXPECT_NEAR(r.delta, r.delta_faltings - 8 * kLog2Pi, 1e-12);
    EXPECT_NEAR(r.lambda, (-20 * kLog2Pi - r.log_delta2) / 10, 1e-12);
    EXPECT_NEAR(r.phi, -0.5 * r.log_delta2 + 10 * r.log_h, 1e-12);
    EXPECT_NEAR(r.phi_stderr, 10 * r.log_h_stderr, 1e-15);
    EXPECT_NEAR(r.delta_faltings, -16 * kLog2Pi - r.log_delta2 - 4 * r.log_h, 1e-12);
    EXPECT_EQ(r.samples, 100'000u);
    EXPECT_EQ(r.seed, 5u);
  }
}

TEST(ArchInvariants, InvariantUnderInversion) {
  testing::Rng rng(229);
  const SiegelMatrix t = testing::random_tau(rng);
  ArchOptions opts;
  opts.quadrature = quick();
  const ArchReport a = arch_invariants(t, opts);
  const ArchReport b = arch_invariants(t.inverted(), opts);
  EXPECT_NEAR(a.log_delta2, b.log_delta2, 1e-10);
  EXPECT_LT(std::abs(a.phi - b.phi), 10 * std::hypot(a.phi_stderr, b.phi_stderr));
  EXPECT_NEAR(a.lambda, b.lambda, 1e-10);
}

TEST(ArchInvariants, Deterministic) {
  testing::Rng rng(233);
  const SiegelMatrix t = testing::random_tau(rng);
  ArchOptions opts;
  opts.quadrature = quick(50'000);
  EXPECT_EQ(arch_invariants(t, opts), arch_invariants(t, opts));
}

TEST(ArchInvariants, Errors) {
  ArchOptions opts;
  opts.quadrature = quick(20'000);
  EXPECT_THROW(arch_invariants(SiegelMatrix(Complex(0, 1), 0, 0, Complex(0, 1)), opts),
               DegenerateThetaNull);
  opts.quadrature.target_stderr = 1e-6;
  EXPECT_THROW(arch_invariants(near_identity(), opts), QuadratureUnstable);
}

}  // namespace
}  // namespace g2adm
