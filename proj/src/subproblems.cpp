#include "risbc/subproblems.hpp"

#include <cmath>
#include <numbers>

#include "risbc/errors.hpp"

namespace risbc {

SdpProblem beamforming_sdp(const ComplexMatrix& rows) {
  SdpProblem p;
  p.dim = rows.cols();
  p.sense = Sense::Minimize;
  p.objective = HermitianMatrix::identity(p.dim);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    TraceInequality t;
    t.matrix = HermitianMatrix::outer(rows.row(i).adjoint());
    t.rhs = 1.0;
    p.trace_inequalities.push_back(std::move(t));
  }
  return p;
}

ComplexMatrix phase_coupling(const ChannelSet& cs, const ComplexVector& w) {
  if (w.size() != cs.M()) throw InvalidInput("phase_coupling: beamformer length must equal M");
  const ComplexVector Hw = cs.H_br * w;
  ComplexMatrix c(cs.K(), cs.N() + 1);
  for (int i = 0; i < cs.K(); ++i) {
    c.row(i).head(cs.N()) = cs.h_r[i].conjugate().cwiseProduct(Hw).transpose();
    c(i, cs.N()) = cs.h_b[i].dot(w);
  }
  return c;
}

SdpProblem phase_sdp(const ComplexMatrix& coupling, double threshold, PhaseObjective obj) {
  SdpProblem p;
  p.dim = coupling.cols();
  p.sense = Sense::Maximize;
  p.objective = HermitianMatrix(p.dim);
  p.unit_diagonal = true;
  const Eigen::Index K = coupling.rows();
  const Eigen::Index nvar = obj == PhaseObjective::SlackSum ? K : 1;
  p.scalar_signs.assign(nvar, ScalarSign::NonNegative);
  p.scalar_objective.assign(nvar, 1.0);
  for (Eigen::Index i = 0; i < K; ++i) {
    TraceInequality t;
    // |c^T v|^2 = tr(conj(c) conj(c)^H V)
    t.matrix = HermitianMatrix::outer(coupling.row(i).adjoint());
    t.rhs = threshold;
    const std::size_t var = obj == PhaseObjective::SlackSum ? static_cast<std::size_t>(i) : 0;
    t.scalar_terms.push_back({var, -1.0});
    p.trace_inequalities.push_back(std::move(t));
  }
  return p;
}

std::vector<ComplexVector> gaussian_candidates(const HermitianMatrix& X, int n_rand,
                                               RngStream& rng) {
  const auto ed = eig_hermitian(X);
  const RealVector root = ed.values.cwiseMax(0.0).cwiseSqrt();
  std::vector<ComplexVector> out;
  out.reserve(2 * n_rand + 1);
  out.push_back(root(0) * ed.vectors.col(0));
  const ComplexMatrix B = ed.vectors * root.asDiagonal();
  for (int k = 0; k < n_rand; ++k) {
    const ComplexVector r = sample_complex_gaussian(X.dim(), 1.0, rng);
    out.push_back(B * r);
    // Same draw with the modulus removed; exact for equal-weight spectra.
    const ComplexVector u =
        r.unaryExpr([](cplx z) { return z == cplx(0.0) ? cplx(1.0) : z / std::abs(z); });
    out.push_back(B * u);
  }
  return out;
}

PhaseVector phases_from_lift(const ComplexVector& v) {
  const Eigen::Index n = v.size() - 1;
  if (n < 0) throw InvalidInput("phases_from_lift: empty vector");
  const double ref = std::arg(v(n));
  RealVector t(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double a = std::arg(v(k)) - ref;
    a = std::fmod(a, 2.0 * std::numbers::pi);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    t(k) = a;
  }
  return PhaseVector(t);
}

double min_gain(const ComplexMatrix& coupling, const PhaseVector& phi) {
  ComplexVector v(coupling.cols());
  v.head(phi.size()) = phi.coefficients();
  v(phi.size()) = 1.0;
  return (coupling * v).cwiseAbs2().minCoeff();
}

}  // namespace risbc
