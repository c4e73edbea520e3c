#pragma once

// Independent reference computations used only by the tests. They trade
// speed for transparency and share no code paths with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

constexpr double kPi = std::numbers::pi;

// Cyclic Jacobi on the real embedding; each complex eigenvalue appears twice,
// so every other sorted value is returned (descending).
inline std::vector<double> jacobi_eigenvalues(const CMat& h) {
  const int n = static_cast<int>(h.rows());
  RMat a(2 * n, 2 * n);
  a << h.real(), -h.imag(), h.imag(), h.real();
  const int m = 2 * n;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < m; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < m; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(m);
  for (int i = 0; i < m; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  std::vector<double> out;
  for (int i = 0; i < m; i += 2) out.push_back(ev[i]);
  return out;
}

// h_i^H(Phi) evaluated entry by entry with explicit loops.
inline CVec composite_row_naive(const CMat& H_br, const CVec& h_r, const CVec& h_b,
                                const RVec& theta) {
  const int N = static_cast<int>(H_br.rows()), M = static_cast<int>(H_br.cols());
  CVec row(M);
  for (int m = 0; m < M; ++m) {
    cplx acc = std::conj(h_b(m));
    for (int n = 0; n < N; ++n) {
      acc += std::conj(h_r(n)) * std::polar(1.0, theta(n)) * H_br(n, m);
    }
    row(m) = acc;
  }
  return row;
}

// Minimum power for K = 2 over a grid of unit beam directions in C^2,
// w = (cos a, sin a e^{j b}), each rescaled to meet the tighter constraint.
inline double beam_grid_power_2d(const CMat& rows, double thr, int levels) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= levels; ++i) {
    const double a = 0.5 * kPi * i / levels;
    for (int j = 0; j < levels; ++j) {
      const double b = 2.0 * kPi * j / levels;
      CVec w(2);
      w << std::cos(a), std::sin(a) * std::polar(1.0, b);
      const double f = (rows * w).cwiseAbs2().minCoeff();
      if (f > 0) best = std::min(best, thr / f);
    }
  }
  return best;
}

// Least-norm QP by projected gradient ascent on the dual:
// max_{lam >= 0} -1/4 ||G^T lam||^2 + h.lam, x = G^T lam / 2.
inline RVec least_norm_dual_ascent(const RMat& G, const RVec& h, int iters = 200000) {
  const double L = 0.5 * G.squaredNorm() + 1e-12;
  RVec lam = RVec::Zero(G.rows());
  for (int k = 0; k < iters; ++k) {
    const RVec grad = h - 0.5 * G * (G.transpose() * lam);
    lam = (lam + grad / L).cwiseMax(0.0);
  }
  return 0.5 * G.transpose() * lam;
}

// Exhaustive RIS phase grid for K = 1; maximum-ratio transmission is optimal
// for every fixed phase setting, so the power is thr / ||h(Phi)||^2.
inline double joint_grid_power_k1(const CMat& H_br, const CVec& h_r, const CVec& h_b, double thr,
                                  int phase_levels) {
  double best = std::numeric_limits<double>::infinity();
  const int N = static_cast<int>(H_br.rows());
  std::vector<int> idx(N, 0);
  while (true) {
    RVec theta(N);
    for (int n = 0; n < N; ++n) theta(n) = 2.0 * kPi * idx[n] / phase_levels;
    const CVec row = composite_row_naive(H_br, h_r, h_b, theta);
    best = std::min(best, thr / row.squaredNorm());
    int k = 0;
    while (k < N && ++idx[k] == phase_levels) idx[k++] = 0;
    if (k == N) break;
  }
  return best;
}

// Joint grid over RIS phases and a discrete beam-direction grid, the beam
// parameterized as (cos a, sin a e^{jb}) with `beam_levels` steps per angle.
inline double joint_grid_power_beams(const CMat& H_br, const CVec& h_r, const CVec& h_b,
                                     double thr, int phase_levels, int beam_levels) {
  double best = std::numeric_limits<double>::infinity();
  const int N = static_cast<int>(H_br.rows());
  std::vector<CVec> beams;
  for (int i = 0; i < beam_levels; ++i) {
    const double a = 0.5 * kPi * i / (beam_levels - 1);
    for (int j = 0; j < beam_levels; ++j) {
      const double b = 2.0 * kPi * j / beam_levels;
      CVec w(2);
      w << std::cos(a), std::sin(a) * std::polar(1.0, b);
      beams.push_back(w);
    }
  }
  std::vector<int> idx(N, 0);
  while (true) {
    RVec theta(N);
    for (int n = 0; n < N; ++n) theta(n) = 2.0 * kPi * idx[n] / phase_levels;
    const CVec row = composite_row_naive(H_br, h_r, h_b, theta);
    for (const auto& w : beams) {
      const double g = std::norm(row.cwiseProduct(w).sum());
      if (g > 0) best = std::min(best, thr / g);
    }
    int k = 0;
    while (k < N && ++idx[k] == phase_levels) idx[k++] = 0;
    if (k == N) break;
  }
  return best;
}

}  // namespace oracle
