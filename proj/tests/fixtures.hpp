#pragma once

#include <vector>

#include "risbc/channel.hpp"
#include "risbc/sdr_opt.hpp"

namespace fixture {

using namespace risbc;

inline ChannelSet make_channel(const ComplexMatrix& H_br, std::vector<ComplexVector> h_r,
                               std::vector<ComplexVector> h_b) {
  ChannelSet cs;
  cs.H_br = H_br;
  cs.h_r = std::move(h_r);
  cs.h_b = std::move(h_b);
  cs.beta2_br = 1.0;
  cs.beta2_r.assign(cs.h_b.size(), 1.0);
  cs.beta2_b.assign(cs.h_b.size(), 1.0);
  cs.me_pos.assign(cs.h_b.size(), Position{0, 0, 0});
  return cs;
}

inline ScenarioConfig small_config(int M, int N, int K, std::uint64_t seed = 1) {
  ScenarioConfig cfg;
  cfg.M = M;
  cfg.N = N;
  cfg.K = K;
  cfg.seed = seed;
  return cfg;
}

inline ComplexMatrix random_unitary(int n, RngStream& rng) {
  ComplexMatrix a(n, n);
  for (int j = 0; j < n; ++j) a.col(j) = sample_complex_gaussian(n, 1.0, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

inline double min_snr(const ComplexMatrix& rows, const ComplexVector& w, double sigma2) {
  return (rows * w).cwiseAbs2().minCoeff() / sigma2;
}

}  // namespace fixture
