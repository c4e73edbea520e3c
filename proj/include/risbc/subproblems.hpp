#pragma once

#include <vector>

#include "risbc/channel.hpp"
#include "risbc/conic.hpp"

namespace risbc {

// min tr X  s.t.  tr(X g_i g_i^H) >= 1 for each row g_i^H of `rows`.
SdpProblem beamforming_sdp(const ComplexMatrix& rows);

// With w fixed, h_i^H(Phi) w = c_i^T [phi; 1] where c_i = [a_i; b_i],
// a_i = diag(h_r,i^H) H_br w and b_i = h_b,i^H w. Row i of the result is c_i^T.
ComplexMatrix phase_coupling(const ChannelSet& cs, const ComplexVector& w);

enum class PhaseObjective { SlackSum, MaxMin };

// Lifted phase subproblem over V = [phi; 1][phi; 1]^H with unit diagonal.
// SlackSum: max sum alpha_i, tr(A_i V) >= alpha_i + threshold, alpha >= 0.
// MaxMin:   max g,           tr(A_i V) >= g + threshold,       g >= 0.
SdpProblem phase_sdp(const ComplexMatrix& coupling, double threshold, PhaseObjective obj);

// Principal eigenvector scaled by sqrt(lambda_max), followed by n_rand draws
// U Lambda^{1/2} r with r ~ CN(0, I), each paired with U Lambda^{1/2} u where
// u_j = r_j / |r_j|.
std::vector<ComplexVector> gaussian_candidates(const HermitianMatrix& X, int n_rand,
                                               RngStream& rng);

// theta_n = arg(v_n) - arg(v_last).
PhaseVector phases_from_lift(const ComplexVector& v);

// min_i |c_i^T [phi; 1]|^2
double min_gain(const ComplexMatrix& coupling, const PhaseVector& phi);

}  // namespace risbc
