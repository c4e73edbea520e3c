#pragma once

#include <vector>

#include "risbc/sdr_opt.hpp"

namespace risbc {

SolveReport mmse_no_ris(const ChannelSet& cs, double gamma, double sigma2, int n_rand,
                        RngStream& rng, const ConicTolerances& tols = {});

double zf_power(const ChannelSet& cs, double gamma, double sigma2);
// Per-ME targets; rows is K x M with the channel h_i^H as row i.
double zf_power(const ComplexMatrix& rows, const RealVector& gamma, const RealVector& sigma2);

SolveReport random_phase_ris(const ChannelSet& cs, double gamma, double sigma2,
                             RngStream& rng, int n_rand = 50,
                             const ConicTolerances& tols = {});

}  // namespace risbc
