#include <doctest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "risbc/conic.hpp"

using namespace risbc;

namespace {

HermitianMatrix random_hermitian(int n, std::mt19937_64& gen) {
  std::normal_distribution<double> nd;
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(nd(gen), nd(gen));
  return HermitianMatrix(ComplexMatrix(0.5 * (a + a.adjoint())));
}

}  // namespace

TEST_CASE("closed-form corpus is solved to tight accuracy") {
  for (const auto& c : corpus::cases()) {
    CAPTURE(c.name);
    const corpus::Outcome o = c.run();
    CHECK(o.optimal);
    CHECK(std::abs(o.objective - c.expected) <= 1e-6);
    CHECK(o.gap <= 1e-7);
  }
}

TEST_CASE("real embedding preserves the trace pairing") {
  std::mt19937_64 gen(7);
  for (int n : {1, 2, 5}) {
    const HermitianMatrix a = random_hermitian(n, gen), x = random_hermitian(n, gen);
    const RealMatrix ea = real_embedding(a), ex = real_embedding(x);
    CHECK(ea.rows() == 2 * n);
    CHECK((ea - ea.transpose()).norm() == doctest::Approx(0.0));
    const double lhs = (ea * ex).trace();
    const double rhs = 2.0 * (a.matrix() * x.matrix()).trace().real();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
  ComplexMatrix m(1, 1);
  m(0, 0) = 3.0;
  const RealMatrix e = real_embedding(HermitianMatrix(m));
  CHECK(e(0, 0) == 3.0);
  CHECK(e(1, 1) == 3.0);
  CHECK(e(0, 1) == 0.0);
}

TEST_CASE("both arithmetic paths agree") {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 4;
    SdpProblem p;
    p.dim = n;
    p.objective = HermitianMatrix::identity(n);
    for (int k = 0; k < 3; ++k) {
      ComplexVector g(n);
      for (int j = 0; j < n; ++j) g(j) = cplx(nd(gen), nd(gen));
      p.trace_inequalities.push_back(corpus::ineq(g * g.adjoint(), 1.0));
    }
    const SdpSolution c = solve_sdp(p);
    ConicTolerances rt;
    rt.real_embedding = true;
    const SdpSolution r = solve_sdp(p, rt);
    REQUIRE(c.status == SolveStatus::Optimal);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(c.objective_value == doctest::Approx(r.objective_value).epsilon(1e-6));
    CHECK((c.primal_matrix.matrix() - r.primal_matrix.matrix()).norm() <= 1e-4 * (1.0 + c.objective_value));
  }
}

TEST_CASE("solutions are feasible and the merit trace is monotone") {
  std::mt19937_64 gen(5);
  std::normal_distribution<double> nd;
  const int n = 6;
  SdpProblem p;
  p.dim = n;
  p.sense = Sense::Maximize;
  p.objective = HermitianMatrix(n);
  p.unit_diagonal = true;
  p.scalar_signs = {ScalarSign::Free};
  p.scalar_objective = {1.0};
  for (int k = 0; k < 3; ++k) {
    ComplexVector c(n);
    for (int j = 0; j < n; ++j) c(j) = cplx(nd(gen), nd(gen));
    p.trace_inequalities.push_back(corpus::ineq(c * c.adjoint(), 1.0, {{0, -1.0}}));
  }
  const SdpSolution s = solve_sdp(p);
  REQUIRE(s.status == SolveStatus::Optimal);
  const ComplexMatrix& v = s.primal_matrix.matrix();
  for (int j = 0; j < n; ++j) CHECK(std::abs(v(j, j) - 1.0) <= 1e-6);
  CHECK(eig_hermitian(s.primal_matrix).values.minCoeff() >= -1e-7);
  for (const auto& t : p.trace_inequalities) {
    const double lhs = (t.matrix.matrix() * v).trace().real() - s.scalar_values[0];
    CHECK(lhs >= 1.0 - 1e-6);
  }
  for (size_t k = 1; k < s.merit_trace.size(); ++k) CHECK(s.merit_trace[k] <= s.merit_trace[k - 1]);
  CHECK(s.kkt_residual <= 1e-6);
}

TEST_CASE("infeasible and unbounded problems are reported") {
  SUBCASE("contradicting trace constraints") {
    SdpProblem p;
    p.dim = 2;
    p.objective = HermitianMatrix::identity(2);
    p.trace_inequalities.push_back(corpus::ineq(ComplexMatrix::Identity(2, 2), 2.0));
    p.trace_inequalities.push_back(corpus::ineq(-ComplexMatrix::Identity(2, 2), -1.0));
    CHECK(solve_sdp(p).status == SolveStatus::Infeasible);
  }
  SUBCASE("zero constraint with positive right-hand side") {
    SdpProblem p;
    p.dim = 2;
    p.objective = HermitianMatrix::identity(2);
    p.trace_inequalities.push_back(corpus::ineq(ComplexMatrix::Zero(2, 2), 1.0));
    CHECK(solve_sdp(p).status == SolveStatus::Infeasible);
  }
  SUBCASE("unbounded maximization") {
    SdpProblem p;
    p.dim = 2;
    p.sense = Sense::Maximize;
    p.objective = HermitianMatrix::identity(2);
    p.trace_inequalities.push_back(corpus::ineq(ComplexMatrix::Identity(2, 2), 1.0));
    CHECK(solve_sdp(p).status == SolveStatus::Unbounded);
  }
  SUBCASE("qp with opposing half-spaces") {
    LeastNormQp q;
    q.rows.resize(2, 1);
    q.rows << 1.0, -1.0;
    q.rhs = Eigen::Vector2d(1.0, 1.0);
    CHECK(solve_least_norm(q).status == SolveStatus::Infeasible);
  }
}

TEST_CASE("least-norm qp matches projected dual ascent") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 2 + trial % 3, n = 4;
    RealMatrix g(m, n);
    RealVector h(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) g(i, j) = nd(gen);
      h(i) = nd(gen);
    }
    const QpSolution s = solve_least_norm({g, h});
    REQUIRE(s.status == SolveStatus::Optimal);
    const RealVector ref = oracle::least_norm_dual_ascent(g, h);
    CHECK((s.x - ref).norm() <= 1e-5 * (1.0 + ref.norm()));
    CHECK((g * s.x - h).minCoeff() >= -1e-8);
    CHECK((s.x - g.transpose() * s.multipliers).norm() <= 1e-8 * (1.0 + s.x.norm()));
    CHECK(s.multipliers.minCoeff() >= -1e-12);
  }
}

TEST_CASE("qp scaling keeps huge right-hand sides accurate") {
  LeastNormQp q;
  q.rows = RealMatrix::Identity(2, 2);
  q.rhs = Eigen::Vector2d(1e6, 2e6);
  const QpSolution s = solve_least_norm(q);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.x(0) == doctest::Approx(1e6).epsilon(1e-9));
  CHECK(s.x(1) == doctest::Approx(2e6).epsilon(1e-9));
}

TEST_CASE("malformed problems are rejected") {
  SdpProblem p;
  p.dim = 2;
  p.objective = HermitianMatrix::identity(3);
  CHECK_THROWS(solve_sdp(p));
  LeastNormQp q;
  q.rows = RealMatrix::Identity(2, 2);
  q.rhs = RealVector::Ones(3);
  CHECK_THROWS(solve_least_norm(q));
}
