#include "risbc/baselines.hpp"

#include <chrono>
#include <cmath>

#include "risbc/errors.hpp"

namespace risbc {

namespace {

SolveReport single_solve(const ComplexMatrix& rows, PhaseVector phi, double gamma, double sigma2,
                         int n_rand, RngStream& rng, const ConicTolerances& tols) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveReport r;
  r.phi = std::move(phi);
  r.w = solve_beamforming_sdr(rows, gamma, sigma2, std::nullopt, n_rand, rng, tols);
  r.final_power = r.w.power();
  r.power_trace.push_back(r.final_power);
  r.f_trace.push_back(compute_f(rows, r.w.direction()));
  r.iterations = 1;
  r.status = RunStatus::Converged;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

SolveReport mmse_no_ris(const ChannelSet& cs, double gamma, double sigma2, int n_rand,
                        RngStream& rng, const ConicTolerances& tols) {
  return single_solve(direct_rows(cs), PhaseVector::zeros(cs.N()), gamma, sigma2, n_rand, rng,
                      tols);
}

double zf_power(const ComplexMatrix& rows, const RealVector& gamma, const RealVector& sigma2) {
  const Eigen::Index K = rows.rows();
  if (gamma.size() != K || sigma2.size() != K) throw InvalidInput("zf_power: target size mismatch");
  if (K == 0) throw InvalidInput("zf_power: no MEs");
  if (K > rows.cols()) throw Infeasible("zf_power: more MEs than antennas");
  const ComplexMatrix gram = rows * rows.adjoint();
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
  const RealVector ev = es.eigenvalues();
  if (!(ev(0) > 1e-12 * ev(K - 1))) {
    throw Infeasible("zf_power: stacked direct channel is rank deficient");
  }
  const ComplexMatrix inv = gram.llt().solve(ComplexMatrix::Identity(K, K));
  double p = 0.0;
  for (Eigen::Index i = 0; i < K; ++i) p += gamma(i) * sigma2(i) * inv(i, i).real();
  return p;
}

double zf_power(const ChannelSet& cs, double gamma, double sigma2) {
  return zf_power(direct_rows(cs), RealVector::Constant(cs.K(), gamma),
                  RealVector::Constant(cs.K(), sigma2));
}

SolveReport random_phase_ris(const ChannelSet& cs, double gamma, double sigma2, RngStream& rng,
                             int n_rand, const ConicTolerances& tols) {
  PhaseVector phi = PhaseVector::random(cs.N(), rng);
  const ComplexMatrix rows = composite_rows(cs, phi);
  return single_solve(rows, std::move(phi), gamma, sigma2, n_rand, rng, tols);
}

}  // namespace risbc
