#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "risbc/errors.hpp"
#include "risbc/sca_opt.hpp"
#include "risbc/subproblems.hpp"

using namespace risbc;

namespace {

constexpr double kPi = std::numbers::pi;

Beamformer feasible_beam(const ComplexMatrix& rows, double thr, RngStream& rng) {
  return rescale_tight(rows, sample_complex_gaussian(rows.cols(), 1.0, rng), thr, 1.0);
}

}  // namespace

TEST_CASE("minorant examples and lower-bound property") {
  CHECK(sca_minorant({1.0, 0.0}, {1.0, 0.0}) == 1.0);
  CHECK(sca_minorant({1.0, 0.0}, {0.0, 0.0}) == -1.0);
  RngStream rng(1, 1);
  for (int k = 0; k < 1000; ++k) {
    const Eigen::Vector2d p(rng.normal(), rng.normal()), r(rng.normal(), rng.normal());
    CHECK(sca_minorant(p, r) <= r.squaredNorm() + 1e-12);
    CHECK(std::abs(sca_minorant(p, p) - p.squaredNorm()) <= 1e-12 * (1.0 + p.squaredNorm()));
  }
  const Eigen::Vector2d q(0.5, -2.0);
  CHECK(sca_minorant(q, q) == q.squaredNorm());
}

TEST_CASE("inner loop reaches maximum-ratio power for one ME") {
  RngStream rng(2, 1);
  for (int t = 0; t < 5; ++t) {
    const ComplexMatrix rows = sample_complex_gaussian(5, 1e-6, rng).transpose();
    const double gamma = 1.26, sigma2 = 1e-9, thr = gamma * sigma2;
    const Beamformer init = feasible_beam(rows, thr, rng);
    const ScaResult r = sca_beamforming(rows, gamma, sigma2, init, 30, 1e-9);
    CHECK(r.w.power() == doctest::Approx(thr / rows.squaredNorm()).epsilon(1e-4));
    for (size_t d = 1; d < r.power_trace.size(); ++d) {
      CHECK(r.power_trace[d] <= r.power_trace[d - 1] * (1.0 + 1e-9));
    }
    CHECK(fixture::min_snr(rows, r.w.w, sigma2) >= gamma * (1.0 - 1e-8));
  }
}

TEST_CASE("inner loop keeps an optimal point fixed") {
  RngStream rng(3, 1);
  const ComplexMatrix rows = sample_complex_gaussian(4, 1.0, rng).transpose();
  const Beamformer mrt{rows.adjoint() / rows.squaredNorm()};
  const ScaResult r = sca_beamforming(rows, 1.0, 1.0, mrt, 1, 0.0);
  CHECK(std::abs(r.w.power() / mrt.power() - 1.0) <= 1e-6);
}

TEST_CASE("inner loop on orthogonal equal-norm MEs") {
  RngStream rng(4, 1);
  for (int t = 0; t < 5; ++t) {
    const double c = 0.5 + t;
    const ComplexMatrix rows = c * fixture::random_unitary(2, rng);
    const double gamma = 1.5, sigma2 = 0.4, thr = gamma * sigma2;
    const Beamformer init = feasible_beam(rows, thr, rng);
    const ScaResult r = sca_beamforming(rows, gamma, sigma2, init, 200, 1e-12);
    CHECK(r.w.power() == doctest::Approx(2.0 * thr / (c * c)).epsilon(1e-3));
    CHECK(r.w.power() <= oracle::beam_grid_power_2d(rows, thr, 256) * (1.0 + 1e-3));
  }
}

TEST_CASE("inner loop is monotone and feasible for several MEs") {
  RngStream rng(5, 1);
  for (int t = 0; t < 10; ++t) {
    ComplexMatrix rows(4, 6);
    for (int i = 0; i < 4; ++i) rows.row(i) = sample_complex_gaussian(6, 1.0, rng).transpose();
    const Beamformer init = feasible_beam(rows, 2.0, rng);
    const ScaResult r = sca_beamforming(rows, 2.0, 1.0, init, 30, 1e-5);
    CHECK(r.power_trace.front() == doctest::Approx(init.power()));
    for (size_t d = 1; d < r.power_trace.size(); ++d) {
      CHECK(r.power_trace[d] <= r.power_trace[d - 1] * (1.0 + 1e-9));
    }
    CHECK(fixture::min_snr(rows, r.w.w, 1.0) >= 2.0 * (1.0 - 1e-8));
    CHECK(r.iterations <= 30);
  }
  CHECK_THROWS_AS(sca_beamforming(ComplexMatrix::Identity(2, 2), 1.0, 1.0,
                                  Beamformer{ComplexVector::Ones(3)}, 5, 1e-5),
                  InvalidInput);
}

TEST_CASE("max-min phase step with one element matches a fine grid") {
  for (std::uint64_t trial = 0; trial < 5; ++trial) {
    const ChannelSet cs = generate_channel(fixture::small_config(3, 1, 1), trial);
    RngStream rng(6, trial);
    const double thr = 1e-6;
    const Beamformer w = feasible_beam(composite_rows(cs, PhaseVector::random(1, rng)), thr, rng);
    const auto step = solve_phase_maxmin(cs, w, 1.0, thr, 50, rng);
    REQUIRE(step.has_value());
    double grid = 0.0;
    for (int k = 0; k < 4096; ++k) {
      RealVector th(1);
      th(0) = 2.0 * kPi * k / 4096;
      const ComplexVector row = oracle::composite_row_naive(cs.H_br, cs.h_r[0], cs.h_b[0], th);
      grid = std::max(grid, std::norm(row.cwiseProduct(w.w).sum()));
    }
    CHECK(step->value == doctest::Approx(grid).epsilon(1e-6));
  }
}

TEST_CASE("max-min phase step without an RIS path") {
  ChannelSet cs = generate_channel(fixture::small_config(3, 4, 2), 1);
  for (auto& h : cs.h_r) h.setZero();
  RngStream rng(7, 0);
  const double thr = 1e-6;
  const Beamformer w = feasible_beam(direct_rows(cs), thr, rng);
  const auto step = solve_phase_maxmin(cs, w, 1.0, thr, 20, rng);
  REQUIRE(step.has_value());
  const double g = (direct_rows(cs) * w.w).cwiseAbs2().minCoeff();
  CHECK(step->value == doctest::Approx(g).epsilon(1e-12));
  // The same beam scaled below the target cannot be rescued by any phase.
  CHECK_FALSE(solve_phase_maxmin(cs, Beamformer{0.5 * w.w}, 1.0, thr, 20, rng).has_value());
}

TEST_CASE("max-min and slack-sum phase steps agree for one ME") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const ChannelSet cs = generate_channel(fixture::small_config(4, 6, 1), trial);
    RngStream rng(8, trial);
    const double thr = 1e-6;
    const Beamformer w = feasible_beam(composite_rows(cs, PhaseVector::random(6, rng)), thr, rng);
    RngStream r1(9, trial), r2(9, trial);
    const auto a = solve_phase_maxmin(cs, w, 1.0, thr, 50, r1);
    const auto b = solve_phase_sdr(cs, w, 1.0, thr, 0.0, 50, r2);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->value / w.power() == doctest::Approx(b->value).epsilon(0.01));
  }
}

TEST_CASE("SCA alternation is monotone and feasible") {
  AlternatingOptions opts;
  opts.n_rand = 20;
  for (int K : {1, 3}) {
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
      const ScenarioConfig cfg = fixture::small_config(4, 8, K);
      const ChannelSet cs = generate_channel(cfg, trial);
      RngStream rng(10, trial);
      const SolveReport r = alternate_sca(cs, cfg, opts, rng);
      CAPTURE(K);
      CAPTURE(trial);
      for (size_t q = 1; q < r.power_trace.size(); ++q) {
        CHECK(r.power_trace[q] <= r.power_trace[q - 1] * (1.0 + 1e-9));
      }
      for (size_t q = 0; q < r.f_phase_trace.size() && q + 1 < r.f_trace.size(); ++q) {
        CHECK(r.f_phase_trace[q] >= r.f_trace[q] * (1.0 - 1e-9));
        CHECK(r.f_trace[q + 1] >= r.f_phase_trace[q] * (1.0 - 1e-9));
      }
      const ComplexMatrix rows = composite_rows(cs, r.phi);
      CHECK(fixture::min_snr(rows, r.w.w, cfg.sigma2_watts()) >= cfg.gamma_linear() * (1.0 - 1e-8));
      CHECK(r.final_power == r.power_trace.back());
    }
  }
}

TEST_CASE("SCA alternation without an RIS reduces to the inner loop") {
  const ScenarioConfig cfg = fixture::small_config(4, 0, 2);
  const ChannelSet cs = generate_channel(cfg, 0);
  RngStream rng(11, 0);
  const SolveReport r = alternate_sca(cs, cfg, {}, rng);
  CHECK(r.iterations == 0);
  CHECK(r.power_trace.size() == 1);
  CHECK(r.status == RunStatus::Converged);
  CHECK(fixture::min_snr(direct_rows(cs), r.w.w, cfg.sigma2_watts()) >=
        cfg.gamma_linear() * (1.0 - 1e-8));
}
