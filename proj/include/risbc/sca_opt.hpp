#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "risbc/sdr_opt.hpp"

namespace risbc {

// First-order lower bound of ||r||^2 around p.
double sca_minorant(const Eigen::Vector2d& p, const Eigen::Vector2d& r);

struct ScaState {
  std::vector<Eigen::Vector2d> p;  // (Re, Im) of h_i^H w at the linearization point
  int d = 0;
};

struct ScaResult {
  Beamformer w;
  std::vector<double> power_trace;  // entry 0 is the initial point
  int iterations = 0;
};

// Inner successive convex approximation loop; `init` must be feasible.
ScaResult sca_beamforming(const ComplexMatrix& rows, double gamma, double sigma2,
                          const Beamformer& init, int max_inner, double tol,
                          const ConicTolerances& qp_tols = {1e-10, 1e-10, 200});
ScaResult sca_beamforming(const ChannelSet& cs, const PhaseVector& phi, double gamma,
                          double sigma2, const Beamformer& init, int max_inner, double tol,
                          const ConicTolerances& qp_tols = {1e-10, 1e-10, 200});

// Max-min phase subproblem. Returns nullopt when the relaxation is infeasible
// or no randomized candidate meets every SNR target with the given w.
std::optional<PhaseStep> solve_phase_maxmin(const ChannelSet& cs, const Beamformer& w,
                                            double gamma, double sigma2, int n_rand,
                                            RngStream& rng, const ConicTolerances& tols = {});

SolveReport alternate_sca(const ChannelSet& cs, const ScenarioConfig& cfg,
                          const AlternatingOptions& opts, RngStream& rng);

}  // namespace risbc
