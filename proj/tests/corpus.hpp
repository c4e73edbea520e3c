#pragma once

// Small conic problems whose optima are known in closed form.

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "risbc/conic.hpp"

namespace corpus {

using namespace risbc;

struct Outcome {
  bool optimal = false;
  double objective = 0.0;
  double gap = 0.0;
};

struct Case {
  std::string name;
  double expected;
  std::function<Outcome()> run;
};

inline TraceInequality ineq(const ComplexMatrix& a, double rhs, std::vector<ScalarTerm> terms = {},
                            double offset = 0.0) {
  TraceInequality t;
  t.matrix = HermitianMatrix(a);
  t.rhs = rhs;
  t.offset = offset;
  t.scalar_terms = std::move(terms);
  return t;
}

inline ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline Outcome run_sdp(const SdpProblem& p) {
  const SdpSolution s = solve_sdp(p);
  return {s.status == SolveStatus::Optimal, s.objective_value, s.duality_gap};
}

// Gap between 1/2 ||x||^2 and its Lagrange dual, reported for ||x||^2.
inline Outcome run_qp(const LeastNormQp& q) {
  const QpSolution s = solve_least_norm(q);
  const RealVector gtl = q.rows.transpose() * s.multipliers;
  const double dual = q.rhs.dot(s.multipliers) - 0.5 * gtl.squaredNorm();
  return {s.status == SolveStatus::Optimal, s.x.squaredNorm(),
          2.0 * std::abs(0.5 * s.x.squaredNorm() - dual)};
}

inline std::vector<Case> cases() {
  std::vector<Case> out;
  out.push_back({"trace with identity constraint", 1.0, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.objective = HermitianMatrix::identity(2);
                   p.trace_inequalities.push_back(ineq(ComplexMatrix::Identity(2, 2), 1.0));
                   return run_sdp(p);
                 }});
  out.push_back({"mass on the largest constraint eigenvalue", 0.5, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.objective = HermitianMatrix::identity(2);
                   p.trace_inequalities.push_back(ineq(diag2(2.0, 1.0), 1.0));
                   return run_sdp(p);
                 }});
  out.push_back({"unit diagonal forces the trace", 2.0, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.sense = Sense::Maximize;
                   p.objective = HermitianMatrix(2);
                   p.unit_diagonal = true;
                   p.scalar_signs = {ScalarSign::NonNegative};
                   p.scalar_objective = {1.0};
                   p.trace_inequalities.push_back(ineq(ComplexMatrix::Identity(2, 2), 0.0, {{0, -1.0}}));
                   return run_sdp(p);
                 }});
  out.push_back({"two-node cut", 4.0, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.sense = Sense::Maximize;
                   ComplexMatrix l(2, 2);
                   l << 1.0, -1.0, -1.0, 1.0;
                   p.objective = HermitianMatrix(l);
                   p.unit_diagonal = true;
                   return run_sdp(p);
                 }});
  out.push_back({"per-row slacks", 3.0, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.sense = Sense::Maximize;
                   p.objective = HermitianMatrix(2);
                   p.unit_diagonal = true;
                   p.scalar_signs = {ScalarSign::NonNegative, ScalarSign::NonNegative};
                   p.scalar_objective = {1.0, 1.0};
                   p.trace_inequalities.push_back(ineq(diag2(1.0, 0.0), 0.0, {{0, -1.0}}));
                   p.trace_inequalities.push_back(ineq(diag2(0.0, 2.0), 0.0, {{1, -1.0}}));
                   return run_sdp(p);
                 }});
  out.push_back({"complex rank-one constraint", 1.0 / 3.0, [] {
                   SdpProblem p;
                   p.dim = 3;
                   p.objective = HermitianMatrix::identity(3);
                   ComplexVector h(3);
                   h << 1.0, cplx(0, 1), 1.0;
                   p.trace_inequalities.push_back(ineq(h * h.adjoint(), 1.0));
                   return run_sdp(p);
                 }});
  out.push_back({"two orthogonal constraints", 3.0, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.objective = HermitianMatrix::identity(2);
                   p.trace_inequalities.push_back(ineq(diag2(1.0, 0.0), 1.0));
                   p.trace_inequalities.push_back(ineq(diag2(0.0, 1.0), 2.0));
                   return run_sdp(p);
                 }});
  out.push_back({"free scalar epigraph", 2.0, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.objective = HermitianMatrix(2);
                   p.scalar_signs = {ScalarSign::Free};
                   p.scalar_objective = {1.0};
                   p.trace_inequalities.push_back(ineq(-diag2(1.0, 0.0), 0.0, {{0, 1.0}}));
                   p.trace_inequalities.push_back(ineq(diag2(1.0, 0.0), 2.0));
                   return run_sdp(p);
                 }});
  out.push_back({"constant offset", 2.0, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.objective = HermitianMatrix::identity(2);
                   p.trace_inequalities.push_back(ineq(ComplexMatrix::Identity(2, 2), 5.0, {}, 3.0));
                   return run_sdp(p);
                 }});
  out.push_back({"imaginary coupling", 2.0, [] {
                   SdpProblem p;
                   p.dim = 2;
                   p.sense = Sense::Maximize;
                   ComplexMatrix a(2, 2);
                   a << 0.0, cplx(0, 1), cplx(0, -1), 0.0;
                   p.objective = HermitianMatrix(a);
                   p.unit_diagonal = true;
                   return run_sdp(p);
                 }});
  out.push_back({"least norm box corner", 2.0, [] {
                   LeastNormQp q;
                   q.rows = RealMatrix::Identity(2, 2);
                   q.rhs = Eigen::Vector2d(1.0, 1.0);
                   return run_qp(q);
                 }});
  out.push_back({"least norm half-space with inactive row", 4.5, [] {
                   LeastNormQp q;
                   q.rows.resize(2, 3);
                   q.rows << 1.0, 1.0, 0.0, 0.0, 0.0, 1.0;
                   q.rhs = Eigen::Vector2d(3.0, -1.0);
                   return run_qp(q);
                 }});
  return out;
}

}  // namespace corpus
