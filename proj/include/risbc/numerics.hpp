#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace risbc {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Square complex matrix with A = A^H enforced at construction.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(Eigen::Index dim);
  // Throws InvalidInput unless m is square, finite and Hermitian to `tol`
  // relative to its largest entry. The stored copy is exactly symmetrized.
  explicit HermitianMatrix(const ComplexMatrix& m, double tol = 1e-10);

  static HermitianMatrix identity(Eigen::Index dim);
  static HermitianMatrix outer(const ComplexVector& v);
  static HermitianMatrix diagonal(const RealVector& d);

  Eigen::Index dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  double trace() const { return m_.trace().real(); }
  double frobenius_norm() const { return m_.norm(); }

 private:
  ComplexMatrix m_;
};

// Eigenvalues sorted in descending order; columns of `vectors` match.
struct EigenDecomposition {
  RealVector values;
  ComplexMatrix vectors;
};

EigenDecomposition eig_hermitian(const HermitianMatrix& a);

// Deterministic random stream addressed by (seed, stream_id). Distinct ids
// give statistically independent sequences.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  double uniform(double lo, double hi);
  double normal();
  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// Circularly-symmetric CN(0, variance I_n).
ComplexVector sample_complex_gaussian(Eigen::Index n, double variance, RngStream& rng);

double db_to_linear(double x_db);
double linear_to_db(double x);
double dbm_to_watts(double x_dbm);
double watts_to_dbm(double w);

}  // namespace risbc
