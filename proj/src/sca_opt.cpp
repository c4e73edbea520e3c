#include "risbc/sca_opt.hpp"

#include <chrono>
#include <cmath>

#include "risbc/errors.hpp"
#include "risbc/subproblems.hpp"

namespace risbc {

double sca_minorant(const Eigen::Vector2d& p, const Eigen::Vector2d& r) {
  return p.squaredNorm() + 2.0 * p.dot(r - p);
}

ScaResult sca_beamforming(const ComplexMatrix& rows, double gamma, double sigma2,
                          const Beamformer& init, int max_inner, double tol,
                          const ConicTolerances& qp_tols) {
  if (rows.cols() != init.w.size()) throw InvalidInput("sca_beamforming: dimension mismatch");
  if (max_inner < 0 || !(tol >= 0.0)) throw InvalidInput("sca_beamforming: bad loop limits");
  const Eigen::Index K = rows.rows(), M = rows.cols();
  const ComplexMatrix g = rows / std::sqrt(gamma * sigma2);

  ScaResult res;
  res.w = init;
  if ((g * init.w).cwiseAbs2().minCoeff() < 1.0) res.w = rescale_tight(g, init.w, 1.0, 1.0);
  res.power_trace.push_back(res.w.power());

  ScaState st;
  LeastNormQp qp;
  qp.rows.resize(K, 2 * M);
  qp.rhs.resize(K);
  for (st.d = 0; st.d < max_inner; ++st.d) {
    // Linearize |g_i w|^2 at the current point: 2 p_i . r_i(x) >= 1 + |p_i|^2.
    const ComplexVector s = g * res.w.w;
    st.p.assign(K, Eigen::Vector2d::Zero());
    for (Eigen::Index i = 0; i < K; ++i) {
      st.p[i] = {s(i).real(), s(i).imag()};
      const RealVector gr = g.row(i).real().transpose(), gi = g.row(i).imag().transpose();
      const double px = st.p[i](0), py = st.p[i](1);
      qp.rows.row(i).head(M) = 2.0 * (px * gr + py * gi).transpose();
      qp.rows.row(i).tail(M) = 2.0 * (-px * gi + py * gr).transpose();
      qp.rhs(i) = 1.0 + st.p[i].squaredNorm();
    }
    const QpSolution sol = solve_least_norm(qp, qp_tols);
    if (sol.status == SolveStatus::Infeasible) throw Infeasible("sca_beamforming: QP infeasible");
    if (sol.status != SolveStatus::Optimal) break;
    ComplexVector w(M);
    w.real() = sol.x.head(M);
    w.imag() = sol.x.tail(M);
    const Beamformer next = rescale_tight(g, w, 1.0, 1.0);
    const double p_old = res.w.power(), p_new = next.power();
    if (p_new > p_old) break;
    res.w = next;
    res.power_trace.push_back(p_new);
    res.iterations = st.d + 1;
    if ((p_old - p_new) <= tol * p_old) break;
  }
  return res;
}

ScaResult sca_beamforming(const ChannelSet& cs, const PhaseVector& phi, double gamma,
                          double sigma2, const Beamformer& init, int max_inner, double tol,
                          const ConicTolerances& qp_tols) {
  return sca_beamforming(composite_rows(cs, phi), gamma, sigma2, init, max_inner, tol, qp_tols);
}

std::optional<PhaseStep> solve_phase_maxmin(const ChannelSet& cs, const Beamformer& w,
                                            double gamma, double sigma2, int n_rand,
                                            RngStream& rng, const ConicTolerances& tols) {
  const ComplexMatrix C = phase_coupling(cs, w.w);
  const double thr = gamma * sigma2;
  std::optional<PhaseStep> best;
  if (cs.N() == 0) {
    best = PhaseStep{PhaseVector::zeros(0), min_gain(C, PhaseVector::zeros(0))};
  } else {
    const SdpSolution sol =
        solve_sdp(phase_sdp(C / std::sqrt(thr), 1.0, PhaseObjective::MaxMin), tols);
    if (sol.status == SolveStatus::Infeasible || !sol.primal_matrix.matrix().allFinite()) {
      return std::nullopt;
    }
    for (const auto& v : gaussian_candidates(sol.primal_matrix, n_rand, rng)) {
      PhaseVector phi = phases_from_lift(v);
      const double g = min_gain(C, phi);
      if (!best || g > best->value) best = PhaseStep{std::move(phi), g};
    }
  }
  // Rounding slack: a tight incoming beam sits exactly on the target.
  if (!best || best->value < thr * (1.0 - 1e-12)) return std::nullopt;
  return best;
}

SolveReport alternate_sca(const ChannelSet& cs, const ScenarioConfig& cfg,
                          const AlternatingOptions& opts, RngStream& rng) {
  const auto t0 = std::chrono::steady_clock::now();
  const double gamma = cfg.gamma_linear(), sigma2 = cfg.sigma2_watts();
  SolveReport r;
  r.phi = PhaseVector::random(cs.N(), rng);
  ComplexMatrix rows = composite_rows(cs, r.phi);
  const Beamformer w0 =
      solve_beamforming_sdr(rows, gamma, sigma2, std::nullopt, opts.n_rand, rng, opts.sdp);
  r.w = sca_beamforming(rows, gamma, sigma2, w0, opts.max_inner, opts.inner_tol, opts.qp).w;
  r.power_trace.push_back(r.w.power());
  r.f_trace.push_back(compute_f(rows, r.w.direction()));
  r.status = RunStatus::Converged;

  if (cs.N() > 0) {
    r.status = RunStatus::IterCap;
    for (int q = 1; q <= opts.max_outer; ++q) {
      const auto step = solve_phase_maxmin(cs, r.w, gamma, sigma2, opts.n_rand, rng, opts.sdp);
      if (!step) {
        r.status = RunStatus::PhaseInfeasible;
        break;
      }
      r.f_phase_trace.push_back(step->value / r.w.power());
      rows = composite_rows(cs, step->phi);
      const Beamformer init = rescale_tight(rows, r.w.w, gamma, sigma2);
      const Beamformer w =
          sca_beamforming(rows, gamma, sigma2, init, opts.max_inner, opts.inner_tol, opts.qp).w;
      const double p_old = r.power_trace.back();
      r.phi = step->phi;
      r.w = w;
      r.iterations = q;
      r.power_trace.push_back(w.power());
      r.f_trace.push_back(compute_f(rows, w.direction()));
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
