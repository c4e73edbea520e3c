#include "risbc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "risbc/errors.hpp"

namespace risbc {

namespace {

constexpr double kPi = std::numbers::pi;

double min_over_mes(const BoundInputs& b, auto&& q_of) {
  double q = std::numeric_limits<double>::infinity();
  for (int i = 0; i < b.K; ++i) q = std::min(q, q_of(i));
  return b.gamma * b.sigma2 / q;
}

// Beam-phase dependent parts of the mean gain: with row sums
// s_n = sum_m exp(j(arg H_nm + phase_m)),
// t1 = sum_n |s_n| / sqrt(M) and t2 = sum_n |s_n|^2 / M.
struct LosTerms {
  double t1 = 0.0;
  double t2 = 0.0;
};

LosTerms los_terms(const RealMatrix& arg_h, const RealVector& phase) {
  LosTerms t;
  const double m = static_cast<double>(arg_h.cols());
  for (Eigen::Index n = 0; n < arg_h.rows(); ++n) {
    double re = 0.0, im = 0.0;
    for (Eigen::Index k = 0; k < arg_h.cols(); ++k) {
      const double a = arg_h(n, k) + phase(k);
      re += std::cos(a);
      im += std::sin(a);
    }
    const double mag2 = re * re + im * im;
    t.t1 += std::sqrt(mag2);
    t.t2 += mag2;
  }
  t.t1 /= std::sqrt(m);
  t.t2 /= m;
  return t;
}

ComplexVector phasors(const RealVector& phase) {
  return phase.unaryExpr([](double a) { return std::polar(1.0, a); });
}

// |sum_m exp(j(psi_m + phase_m))|^2
double direct_coherence(const ComplexVector& e_psi, const ComplexVector& e_phase) {
  return std::norm(e_psi.cwiseProduct(e_phase).sum());
}

double f_from_terms(const BoundInputs& b, int i, const LosTerms& t, double dcoh) {
  const double M = b.M;
  const double br = std::sqrt(b.beta2_br), rr = std::sqrt(b.beta2_r[i]),
               bb = std::sqrt(b.beta2_b[i]);
  // sum_n sqrt(S_n) = br * t1, sum_n S_n = br^2 * t2
  const double s1 = br * t.t1, s2 = b.beta2_br * t.t2;
  const double eb = b.beta2_b[i] * (kPi / (4.0 * M)) * dcoh + b.beta2_b[i] * (1.0 - kPi / 4.0);
  return (kPi / 4.0) * b.beta2_r[i] * s1 * s1 + b.beta2_r[i] * (1.0 - kPi / 4.0) * s2 + eb +
         (kPi / 2.0) * std::sqrt(M) * rr * bb * s1;
}

double min_f(const BoundInputs& b, const LosTerms& t, const ComplexMatrix& e_psi,
             const ComplexVector& e_phase) {
  double f = std::numeric_limits<double>::infinity();
  for (int i = 0; i < b.K; ++i) {
    f = std::min(f, f_from_terms(b, i, t, direct_coherence(e_psi.row(i).transpose(), e_phase)));
  }
  return f;
}

}  // namespace

void BoundInputs::validate() const {
  if (M < 1 || N < 0 || K < 1) throw InvalidInput("bounds: invalid M, N or K");
  if (!(gamma > 0.0) || !(sigma2 > 0.0)) throw InvalidInput("bounds: gamma, sigma2 must be > 0");
  if (!(beta2_br >= 0.0)) throw InvalidInput("bounds: beta2_br must be >= 0");
  if (static_cast<int>(beta2_r.size()) != K || static_cast<int>(beta2_b.size()) != K) {
    throw InvalidInput("bounds: beta vectors must have length K");
  }
  for (int i = 0; i < K; ++i) {
    if (!(beta2_r[i] >= 0.0) || !(beta2_b[i] >= 0.0)) {
      throw InvalidInput("bounds: path-loss gains must be >= 0");
    }
  }
}

BoundInputs BoundInputs::from(const ChannelSet& cs, double gamma, double sigma2) {
  BoundInputs b;
  b.M = cs.M();
  b.N = cs.N();
  b.K = cs.K();
  b.gamma = gamma;
  b.sigma2 = sigma2;
  b.beta2_br = cs.beta2_br;
  b.beta2_r = cs.beta2_r;
  b.beta2_b = cs.beta2_b;
  return b;
}

double analytical_lb_ris(const BoundInputs& b) {
  b.validate();
  const double M = b.M, N = b.N, br2 = b.beta2_br, br = std::sqrt(br2);
  return min_over_mes(b, [&](int i) {
    const double r2 = b.beta2_r[i], b2 = b.beta2_b[i];
    return kPi * N * N * br2 * r2 * M / 4.0 + N * r2 * br2 * M * (1.0 - kPi / 4.0) +
           N * kPi * std::sqrt(r2) * br * std::sqrt(b2) * M / 2.0 + b2 * (1.0 - kPi / 4.0) +
           kPi * b2 * M / 4.0;
  });
}

double analytical_lb_random_phase(const BoundInputs& b) {
  b.validate();
  const double M = b.M, N = b.N, br2 = b.beta2_br, br = std::sqrt(br2);
  return min_over_mes(b, [&](int i) {
    const double r2 = b.beta2_r[i], b2 = b.beta2_b[i];
    return N * M * br2 * r2 + std::sqrt(N) * kPi * std::sqrt(r2) * br * std::sqrt(b2) * M / 2.0 +
           kPi * b2 * M / 4.0 + b2 * (1.0 - kPi / 4.0);
  });
}

double analytical_lb_no_ris(const BoundInputs& b) {
  b.validate();
  const double M = b.M;
  return min_over_mes(b, [&](int i) {
    const double b2 = b.beta2_b[i];
    return kPi * b2 * M / 4.0 + b2 * (1.0 - kPi / 4.0);
  });
}

double semi_analytic_f(const BoundInputs& b, const ComplexMatrix& los, int i,
                       const RealVector& psi_i, const RealVector& beam_phase) {
  b.validate();
  if (los.rows() != b.N || los.cols() != b.M) throw InvalidInput("semi_analytic_f: LoS size");
  if (psi_i.size() != b.M || beam_phase.size() != b.M) {
    throw InvalidInput("semi_analytic_f: phase vectors must have length M");
  }
  if (i < 0 || i >= b.K) throw InvalidInput("semi_analytic_f: ME index out of range");
  const RealMatrix arg_h = los.unaryExpr([](cplx z) { return std::arg(z); }).real();
  return f_from_terms(b, i, los_terms(arg_h, beam_phase),
                      direct_coherence(phasors(psi_i), phasors(beam_phase)));
}

double semi_analytical_lb_ris(const BoundInputs& b, const SemiAnalyticSearchCfg& cfg,
                              const ComplexMatrix& los, RngStream& rng) {
  b.validate();
  if (cfg.levels < 2 || cfg.random_search_budget < 1 || cfg.realizations < 1) {
    throw InvalidInput("semi_analytical_lb_ris: invalid search configuration");
  }
  if (los.rows() != b.N || los.cols() != b.M) throw InvalidInput("semi_analytical_lb_ris: LoS size");
  const int M = b.M;
  const RealMatrix arg_h = los.unaryExpr([](cplx z) { return std::arg(z); }).real();

  // Candidate beam phases; entry 0 is the reference and stays at zero.
  std::vector<RealVector> points;
  const bool grid = M <= cfg.grid_max_m;
  if (grid) {
    long total = 1;
    for (int k = 1; k < M; ++k) total *= cfg.levels;
    points.reserve(total);
    for (long idx = 0; idx < total; ++idx) {
      RealVector ph = RealVector::Zero(M);
      long r = idx;
      for (int k = 1; k < M; ++k) {
        ph(k) = 2.0 * kPi * static_cast<double>(r % cfg.levels) / cfg.levels;
        r /= cfg.levels;
      }
      points.push_back(std::move(ph));
    }
  } else {
    const int n_uniform = std::max(1, cfg.random_search_budget / 2);
    for (int s = 0; s < n_uniform; ++s) {
      RealVector ph = RealVector::Zero(M);
      for (int k = 1; k < M; ++k) ph(k) = rng.uniform(0.0, 2.0 * kPi);
      points.push_back(std::move(ph));
    }
  }
  std::vector<LosTerms> terms;
  std::vector<ComplexVector> e_points;
  terms.reserve(points.size());
  e_points.reserve(points.size());
  for (const auto& ph : points) {
    terms.push_back(los_terms(arg_h, ph));
    e_points.push_back(phasors(ph));
  }

  const int n_local = grid ? 0 : cfg.random_search_budget - static_cast<int>(points.size());
  double acc = 0.0;
  for (int rlz = 0; rlz < cfg.realizations; ++rlz) {
    ComplexMatrix e_psi(b.K, M);
    for (int i = 0; i < b.K; ++i) {
      for (int k = 0; k < M; ++k) e_psi(i, k) = std::polar(1.0, rng.uniform(0.0, 2.0 * kPi));
    }
    double best = -1.0;
    size_t best_idx = 0;
    for (size_t g = 0; g < points.size(); ++g) {
      const double f = min_f(b, terms[g], e_psi, e_points[g]);
      if (f > best) {
        best = f;
        best_idx = g;
      }
    }
    // Shrinking Gaussian perturbations around the incumbent.
    RealVector x = points[best_idx];
    for (int s = 0; s < n_local; ++s) {
      const double step = std::pow(1e-3, static_cast<double>(s) / std::max(1, n_local - 1));
      RealVector y = x;
      for (int k = 1; k < M; ++k) y(k) += step * rng.normal();
      const double f = min_f(b, los_terms(arg_h, y), e_psi, phasors(y));
      if (f > best) {
        best = f;
        x = y;
      }
    }
    acc += best;
  }
  return b.gamma * b.sigma2 / (acc / cfg.realizations);
}

}  // namespace risbc
