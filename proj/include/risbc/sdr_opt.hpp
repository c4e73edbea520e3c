#pragma once

#include <optional>
#include <vector>

#include "risbc/channel.hpp"
#include "risbc/conic.hpp"

namespace risbc {

struct Beamformer {
  ComplexVector w;

  double power() const { return w.squaredNorm(); }
  ComplexVector direction() const { return w / w.norm(); }
};

enum class RunStatus { Converged, PhaseInfeasible, IterCap };
const char* to_string(RunStatus s);

struct SolveReport {
  double final_power = 0.0;
  std::vector<double> power_trace;    // entry 0 is the initial feasible point
  std::vector<double> f_trace;        // f after each beamforming step
  std::vector<double> f_phase_trace;  // f after each accepted phase step
  Beamformer w;
  PhaseVector phi;
  int iterations = 0;
  RunStatus status = RunStatus::Converged;
  double wall_time = 0.0;
};

struct AlternatingOptions {
  int n_rand = 50;
  int max_outer = 100;
  int max_inner = 30;        // SCA only
  double inner_tol = 1e-5;   // SCA only
  ConicTolerances sdp{};
  ConicTolerances qp{1e-10, 1e-10, 200};
};

struct PhaseStep {
  PhaseVector phi;
  double value = 0.0;  // f for the SDR step, min_i |h_i^H w|^2 for max-min
};

// min_i |rows.row(i) * w_dir|^2
double compute_f(const ComplexMatrix& rows, const ComplexVector& w_dir);
double compute_f(const ChannelSet& cs, const PhaseVector& phi, const ComplexVector& w_dir);
double power_from_f(double f, double gamma, double sigma2);

// Smallest scaling of w with every |rows.row(i) w|^2 >= gamma sigma2 and at
// least one constraint tight. Throws Infeasible if some row gives zero gain.
Beamformer rescale_tight(const ComplexMatrix& rows, const ComplexVector& w, double gamma,
                         double sigma2);

// Semidefinite relaxation of the beamforming subproblem followed by Gaussian
// randomization. `prev` competes as an extra candidate.
Beamformer solve_beamforming_sdr(const ComplexMatrix& rows, double gamma, double sigma2,
                                 const std::optional<Beamformer>& prev, int n_rand,
                                 RngStream& rng, const ConicTolerances& tols = {});
Beamformer solve_beamforming_sdr(const ChannelSet& cs, const PhaseVector& phi, double gamma,
                                 double sigma2, const std::optional<Beamformer>& prev,
                                 int n_rand, RngStream& rng, const ConicTolerances& tols = {});

// Phase subproblem with per-ME slacks. Returns nullopt when the best
// randomized candidate falls below f_floor or the relaxation is infeasible.
std::optional<PhaseStep> solve_phase_sdr(const ChannelSet& cs, const Beamformer& w,
                                         double gamma, double sigma2, double f_floor,
                                         int n_rand, RngStream& rng,
                                         const ConicTolerances& tols = {});

SolveReport alternate_sdr(const ChannelSet& cs, const ScenarioConfig& cfg,
                          const AlternatingOptions& opts, RngStream& rng);

}  // namespace risbc
