#pragma once

#include <vector>

#include "risbc/channel.hpp"

namespace risbc {

struct BoundInputs {
  int M = 1;
  int N = 0;
  int K = 1;
  double gamma = 1.0;   // linear
  double sigma2 = 1.0;  // W
  double beta2_br = 0.0;
  std::vector<double> beta2_r;
  std::vector<double> beta2_b;

  void validate() const;
  static BoundInputs from(const ChannelSet& cs, double gamma, double sigma2);
};

struct SemiAnalyticSearchCfg {
  int levels = 500;
  int random_search_budget = 20000;
  int realizations = 200;
  int grid_max_m = 3;  // exhaustive grid up to this many antennas
};

double analytical_lb_ris(const BoundInputs& b);
double analytical_lb_random_phase(const BoundInputs& b);
double analytical_lb_no_ris(const BoundInputs& b);

// Mean-gain surrogate for one realization of direct-channel phases `psi`
// (K x M) and beam phases `beam_phase` (length M, entry 0 fixed at zero).
double semi_analytic_f(const BoundInputs& b, const ComplexMatrix& los, int i,
                       const RealVector& psi_i, const RealVector& beam_phase);

double semi_analytical_lb_ris(const BoundInputs& b, const SemiAnalyticSearchCfg& cfg,
                              const ComplexMatrix& los, RngStream& rng);

}  // namespace risbc
