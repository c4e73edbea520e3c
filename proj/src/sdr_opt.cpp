#include "risbc/sdr_opt.hpp"

#include <chrono>
#include <cmath>

#include "risbc/errors.hpp"
#include "risbc/subproblems.hpp"

namespace risbc {

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Converged: return "converged";
    case RunStatus::PhaseInfeasible: return "phase_infeasible";
    case RunStatus::IterCap: return "iter_cap";
  }
  return "unknown";
}

double compute_f(const ComplexMatrix& rows, const ComplexVector& w_dir) {
  if (rows.cols() != w_dir.size()) throw InvalidInput("compute_f: dimension mismatch");
  if (std::abs(w_dir.norm() - 1.0) > 1e-9) throw InvalidInput("compute_f: direction must be unit norm");
  if (rows.rows() == 0) throw InvalidInput("compute_f: no MEs");
  return (rows * w_dir).cwiseAbs2().minCoeff();
}

double compute_f(const ChannelSet& cs, const PhaseVector& phi, const ComplexVector& w_dir) {
  return compute_f(composite_rows(cs, phi), w_dir);
}

double power_from_f(double f, double gamma, double sigma2) {
  if (!(f > 0.0)) throw Infeasible("power_from_f: f must be > 0");
  return gamma * sigma2 / f;
}

Beamformer rescale_tight(const ComplexMatrix& rows, const ComplexVector& w, double gamma,
                         double sigma2) {
  const double fmin = (rows * w).cwiseAbs2().minCoeff();
  if (!(fmin > 0.0) || !std::isfinite(fmin)) {
    throw Infeasible("rescale_tight: some ME receives zero gain");
  }
  return Beamformer{w * std::sqrt(gamma * sigma2 / fmin)};
}

Beamformer solve_beamforming_sdr(const ComplexMatrix& rows, double gamma, double sigma2,
                                 const std::optional<Beamformer>& prev, int n_rand,
                                 RngStream& rng, const ConicTolerances& tols) {
  if (rows.rows() == 0 || rows.cols() == 0) throw InvalidInput("beamforming: empty channel");
  if (!(gamma > 0.0) || !(sigma2 > 0.0)) throw InvalidInput("beamforming: gamma, sigma2 must be > 0");
  if (!rows.allFinite()) throw InvalidInput("beamforming: non-finite channel");
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    if (rows.row(i).squaredNorm() == 0.0) throw Infeasible("beamforming: zero channel for an ME");
  }
  const double thr = gamma * sigma2;
  const SdpSolution sol = solve_sdp(beamforming_sdp(rows / std::sqrt(thr)), tols);
  if (sol.status == SolveStatus::Infeasible) throw Infeasible("beamforming: relaxation infeasible");

  std::optional<Beamformer> best;
  auto consider = [&](const ComplexVector& w) {
    if (!w.allFinite() || (rows * w).cwiseAbs2().minCoeff() <= 0.0) return;
    Beamformer b = rescale_tight(rows, w, gamma, sigma2);
    if (!best || b.power() < best->power()) best = std::move(b);
  };
  if (sol.primal_matrix.matrix().allFinite()) {
    for (const auto& v : gaussian_candidates(sol.primal_matrix, n_rand, rng)) consider(v);
  }
  if (prev) consider(prev->w);
  if (!best) throw Infeasible("beamforming: no candidate reaches every ME");
  return *best;
}

Beamformer solve_beamforming_sdr(const ChannelSet& cs, const PhaseVector& phi, double gamma,
                                 double sigma2, const std::optional<Beamformer>& prev,
                                 int n_rand, RngStream& rng, const ConicTolerances& tols) {
  return solve_beamforming_sdr(composite_rows(cs, phi), gamma, sigma2, prev, n_rand, rng, tols);
}

std::optional<PhaseStep> solve_phase_sdr(const ChannelSet& cs, const Beamformer& w,
                                         double gamma, double sigma2, double f_floor,
                                         int n_rand, RngStream& rng,
                                         const ConicTolerances& tols) {
  const ComplexMatrix C = phase_coupling(cs, w.w);
  const double wn2 = w.power();
  if (!(wn2 > 0.0)) throw InvalidInput("solve_phase_sdr: zero beamformer");
  if (cs.N() == 0) {
    const PhaseVector phi = PhaseVector::zeros(0);
    const double f = min_gain(C, phi) / wn2;
    if (f < f_floor) return std::nullopt;
    return PhaseStep{phi, f};
  }
  const double thr = gamma * sigma2;
  const SdpSolution sol =
      solve_sdp(phase_sdp(C / std::sqrt(thr), 1.0, PhaseObjective::SlackSum), tols);
  if (sol.status == SolveStatus::Infeasible || !sol.primal_matrix.matrix().allFinite()) {
    return std::nullopt;
  }
  std::optional<PhaseStep> best;
  for (const auto& v : gaussian_candidates(sol.primal_matrix, n_rand, rng)) {
    PhaseVector phi = phases_from_lift(v);
    const double f = min_gain(C, phi) / wn2;
    if (!best || f > best->value) best = PhaseStep{std::move(phi), f};
  }
  if (!best || best->value < f_floor) return std::nullopt;
  return best;
}

SolveReport alternate_sdr(const ChannelSet& cs, const ScenarioConfig& cfg,
                          const AlternatingOptions& opts, RngStream& rng) {
  const auto t0 = std::chrono::steady_clock::now();
  const double gamma = cfg.gamma_linear(), sigma2 = cfg.sigma2_watts();
  SolveReport r;
  r.phi = PhaseVector::random(cs.N(), rng);
  ComplexMatrix rows = composite_rows(cs, r.phi);
  r.w = solve_beamforming_sdr(rows, gamma, sigma2, std::nullopt, opts.n_rand, rng, opts.sdp);
  r.power_trace.push_back(r.w.power());
  double f_ow = compute_f(rows, r.w.direction());
  r.f_trace.push_back(f_ow);
  r.status = RunStatus::Converged;

  if (cs.N() > 0) {
    r.status = RunStatus::IterCap;
    for (int q = 1; q <= opts.max_outer; ++q) {
      const auto step = solve_phase_sdr(cs, r.w, gamma, sigma2, f_ow, opts.n_rand, rng, opts.sdp);
      if (!step) {
        r.status = RunStatus::PhaseInfeasible;
        break;
      }
      r.f_phase_trace.push_back(step->value);
      rows = composite_rows(cs, step->phi);
      const Beamformer prev = rescale_tight(rows, r.w.w, gamma, sigma2);
      const Beamformer w = solve_beamforming_sdr(rows, gamma, sigma2, prev, opts.n_rand, rng, opts.sdp);
      const double p_old = r.power_trace.back();
      r.phi = step->phi;
      r.w = w;
      r.iterations = q;
      r.power_trace.push_back(w.power());
      f_ow = compute_f(rows, w.direction());
      r.f_trace.push_back(f_ow);
      if (1.0 - w.power() / p_old <= cfg.epsilon) {
        r.status = RunStatus::Converged;
        break;
      }
    }
  }
  r.final_power = r.w.power();
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace risbc
