#pragma once

#include <cstddef>
#include <vector>

#include "risbc/numerics.hpp"

namespace risbc {

enum class Sense { Minimize, Maximize };
enum class ScalarSign { NonNegative, Free };
enum class SolveStatus { Optimal, Infeasible, Unbounded, MaxIter };

const char* to_string(SolveStatus s);

struct ScalarTerm {
  std::size_t var = 0;
  double coeff = 0.0;
};

// tr(matrix X) + offset + sum(coeff * s[var]) >= rhs
struct TraceInequality {
  HermitianMatrix matrix;
  double offset = 0.0;
  double rhs = 0.0;
  std::vector<ScalarTerm> scalar_terms;
};

// Optimize tr(objective X) + scalar_objective . s over X >= 0 (Hermitian PSD)
// and scalars s, subject to the trace inequalities and, optionally, X_jj = 1.
struct SdpProblem {
  Eigen::Index dim = 0;
  Sense sense = Sense::Minimize;
  HermitianMatrix objective;
  std::vector<ScalarSign> scalar_signs;
  std::vector<double> scalar_objective;
  std::vector<TraceInequality> trace_inequalities;
  bool unit_diagonal = false;
};

struct ConicTolerances {
  double gap = 1e-7;          // relative duality gap
  double feasibility = 1e-8;  // relative primal/dual residual
  int max_iterations = 200;
  // Run on the 2n x 2n real embedding instead of complex arithmetic.
  bool real_embedding = false;
};

struct SdpSolution {
  SolveStatus status = SolveStatus::MaxIter;
  HermitianMatrix primal_matrix;
  std::vector<double> scalar_values;
  double objective_value = 0.0;
  double dual_objective = 0.0;
  double duality_gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double kkt_residual = 0.0;  // max of the two residuals above
  int iterations = 0;
  // Complementarity measure per iteration; non-increasing by construction.
  std::vector<double> merit_trace;
};

// [[Re A, -Im A], [Im A, Re A]]; tr(emb(A) emb(X)) = 2 tr(AX).
RealMatrix real_embedding(const HermitianMatrix& a);

// Homogeneous self-dual primal-dual interior point method, HKM search
// direction with Mehrotra predictor-corrector.
SdpSolution solve_sdp(const SdpProblem& problem, const ConicTolerances& tols = {});

// min ||x||^2 s.t. rows * x >= rhs (componentwise).
struct LeastNormQp {
  RealMatrix rows;
  RealVector rhs;
};

struct QpSolution {
  SolveStatus status = SolveStatus::MaxIter;
  RealVector x;
  RealVector multipliers;  // for 1/2 ||x||^2: x = rows^T multipliers
  int iterations = 0;
  double stationarity_residual = 0.0;
  double primal_residual = 0.0;
};

QpSolution solve_least_norm(const LeastNormQp& qp, const ConicTolerances& tols = {1e-10, 1e-10, 200});

}  // namespace risbc
