#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "risbc/conic.hpp"
#include "risbc/errors.hpp"

namespace risbc {

namespace {

double max_step(const RealVector& v, const RealVector& dv) {
  double a = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (dv(i) < 0.0) a = std::min(a, -v(i) / dv(i));
  }
  return a;
}

}  // namespace

// Primal-dual Mehrotra method on min 1/2 ||x||^2 s.t. G x - s = h, s >= 0,
// after unit-normalizing the rows and scaling x by max |h|.
QpSolution solve_least_norm(const LeastNormQp& qp, const ConicTolerances& tols) {
  const Eigen::Index n = qp.rows.cols();
  if (n < 1) throw InvalidInput("solve_least_norm: dimension must be >= 1");
  if (qp.rows.rows() != qp.rhs.size()) throw InvalidInput("solve_least_norm: size mismatch");
  if (!qp.rows.allFinite() || !qp.rhs.allFinite()) {
    throw InvalidInput("solve_least_norm: non-finite data");
  }

  QpSolution sol;
  sol.x = RealVector::Zero(n);
  sol.multipliers = RealVector::Zero(qp.rows.rows());

  std::vector<Eigen::Index> keep;
  RealVector norms(qp.rows.rows());
  for (Eigen::Index j = 0; j < qp.rows.rows(); ++j) {
    norms(j) = qp.rows.row(j).norm();
    if (norms(j) > 0.0) {
      keep.push_back(j);
    } else if (qp.rhs(j) > 0.0) {
      sol.status = SolveStatus::Infeasible;
      return sol;
    }
  }
  const Eigen::Index m = static_cast<Eigen::Index>(keep.size());
  if (m == 0) {
    sol.status = SolveStatus::Optimal;
    return sol;
  }
  RealMatrix G(m, n);
  RealVector h(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    G.row(k) = qp.rows.row(keep[k]) / norms(keep[k]);
    h(k) = qp.rhs(keep[k]) / norms(keep[k]);
  }
  const double hmax = h.cwiseAbs().maxCoeff();
  const double rho = hmax > 0.0 ? hmax : 1.0;
  h /= rho;
  const double hnorm = h.norm();

  RealVector x = RealVector::Zero(n);
  RealVector s = RealVector::Ones(m);
  RealVector lam = RealVector::Ones(m);
  const RealMatrix Id = RealMatrix::Identity(n, n);

  for (int it = 0;; ++it) {
    sol.iterations = it;
    const RealVector rd = x - G.transpose() * lam;
    const RealVector rp = G * x - s - h;
    const double mu = s.dot(lam) / static_cast<double>(m);
    const double dres = rd.norm() / (1.0 + x.norm());
    const double pres = rp.norm() / (1.0 + hnorm);
    sol.stationarity_residual = dres;
    sol.primal_residual = pres;
    if (dres <= tols.feasibility && pres <= tols.feasibility &&
        mu * m <= tols.gap * (1.0 + x.squaredNorm())) {
      sol.status = SolveStatus::Optimal;
      break;
    }
    const double hl = h.dot(lam);
    if (hl > 0.0 && (G.transpose() * lam).norm() <= tols.feasibility * hl && lam.norm() > 1e6) {
      sol.status = SolveStatus::Infeasible;
      return sol;
    }
    if (it >= tols.max_iterations) {
      sol.status = SolveStatus::MaxIter;
      break;
    }

    const RealVector d = lam.cwiseQuotient(s);
    const RealMatrix K = Id + G.transpose() * d.asDiagonal() * G;
    const Eigen::LLT<RealMatrix> chol(K);
    if (chol.info() != Eigen::Success) {
      sol.status = SolveStatus::MaxIter;
      break;
    }
    auto direction = [&](const RealVector& rc, RealVector& dx, RealVector& ds, RealVector& dl) {
      const RealVector t = (-rc - lam.cwiseProduct(rp)).cwiseQuotient(s);
      dx = chol.solve(RealVector(-rd + G.transpose() * t));
      ds = G * dx + rp;
      dl = (-rc - lam.cwiseProduct(ds)).cwiseQuotient(s);
    };

    RealVector dxa, dsa, dla;
    direction(s.cwiseProduct(lam), dxa, dsa, dla);
    const double aa = std::min({1.0, max_step(s, dsa), max_step(lam, dla)});
    const double mu_aff = (s + aa * dsa).dot(lam + aa * dla) / static_cast<double>(m);
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    RealVector dx, ds, dl;
    const RealVector rc =
        s.cwiseProduct(lam) + dsa.cwiseProduct(dla) - RealVector::Constant(m, sigma * mu);
    direction(rc, dx, ds, dl);
    const double a = std::min(1.0, 0.99 * std::min(max_step(s, ds), max_step(lam, dl)));
    x += a * dx;
    s += a * ds;
    lam += a * dl;
  }

  sol.x = rho * x;
  for (Eigen::Index k = 0; k < m; ++k) sol.multipliers(keep[k]) = rho * lam(k) / norms(keep[k]);
  return sol;
}

}  // namespace risbc
