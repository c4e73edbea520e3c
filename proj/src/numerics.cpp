#include "risbc/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "risbc/errors.hpp"

namespace risbc {

HermitianMatrix::HermitianMatrix(Eigen::Index dim) : m_(ComplexMatrix::Zero(dim, dim)) {
  if (dim < 0) throw InvalidInput("HermitianMatrix: negative dimension");
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw InvalidInput("HermitianMatrix: matrix is not square");
  if (!m.allFinite()) throw InvalidInput("HermitianMatrix: non-finite entry");
  const double scale = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  const double asym = m.size() ? (m - m.adjoint()).cwiseAbs().maxCoeff() : 0.0;
  if (asym > tol * std::max(scale, 1e-300)) {
    throw InvalidInput("HermitianMatrix: matrix is not Hermitian");
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
  return HermitianMatrix(ComplexMatrix::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::outer(const ComplexVector& v) {
  return HermitianMatrix(v * v.adjoint());
}

HermitianMatrix HermitianMatrix::diagonal(const RealVector& d) {
  return HermitianMatrix(ComplexMatrix(d.cast<cplx>().asDiagonal()));
}

EigenDecomposition eig_hermitian(const HermitianMatrix& a) {
  EigenDecomposition out;
  const Eigen::Index n = a.dim();
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.matrix());
  if (es.info() != Eigen::Success) throw InvalidInput("eig_hermitian: decomposition failed");
  // Eigen returns ascending order.
  out.values = es.eigenvalues().reverse();
  out.vectors = es.eigenvectors().rowwise().reverse();
  return out;
}

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(stream),
                       static_cast<std::uint32_t>(stream >> 32), 0x5249u};
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  auto seq = make_seed_seq(seed, stream_id);
  engine_.seed(seq);
}

double RngStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

double RngStream::normal() { return normal_(engine_); }

ComplexVector sample_complex_gaussian(Eigen::Index n, double variance, RngStream& rng) {
  if (n < 0) throw InvalidInput("sample_complex_gaussian: negative length");
  if (!(variance >= 0.0) || !std::isfinite(variance)) {
    throw InvalidInput("sample_complex_gaussian: variance must be finite and >= 0");
  }
  const double s = std::sqrt(variance / 2.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = rng.normal();
    const double im = rng.normal();
    v(i) = cplx(s * re, s * im);
  }
  return v;
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }
double dbm_to_watts(double x_dbm) { return std::pow(10.0, (x_dbm - 30.0) / 10.0); }
double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

}  // namespace risbc
