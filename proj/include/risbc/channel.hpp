#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "risbc/numerics.hpp"

namespace risbc {

using Position = std::array<double, 3>;

struct ScenarioConfig {
  int M = 10;  // BS antennas
  int N = 20;  // RIS elements
  int K = 1;   // mobile equipments
  double gamma_db = 1.0;
  double sigma2_dbm = -30.0;
  Position bs_pos{0.0, 0.0, 0.0};
  Position ris_pos{0.0, 50.0, 0.0};
  double me_radius = 3.0;
  double alpha_br = 2.0;
  double alpha_rm = 2.8;
  double alpha_bm = 3.5;
  double ref_loss_db = -30.0;  // loss at 1 m
  double epsilon = 1e-4;
  std::uint64_t seed = 1;

  // Throws InvalidInput on non-positive sizes, non-finite values, etc.
  void validate() const;
  double gamma_linear() const { return db_to_linear(gamma_db); }
  double sigma2_watts() const { return dbm_to_watts(sigma2_dbm); }
};

// JSON uses the field names above; unknown keys are rejected.
ScenarioConfig config_from_json(const std::string& text);
std::string config_to_json(const ScenarioConfig& cfg);
ScenarioConfig load_config(const std::string& path);

struct ChannelSet {
  ComplexMatrix H_br;              // N x M, BS -> RIS
  std::vector<ComplexVector> h_r;  // per ME, length N; the channel is h_r^H
  std::vector<ComplexVector> h_b;  // per ME, length M; the channel is h_b^H
  double beta2_br = 0.0;
  std::vector<double> beta2_r;
  std::vector<double> beta2_b;
  std::vector<Position> me_pos;

  int M() const { return static_cast<int>(H_br.cols()); }
  int N() const { return static_cast<int>(H_br.rows()); }
  int K() const { return static_cast<int>(h_b.size()); }
  void validate() const;
};

// Diagonal RIS response, unit modulus entries exp(j theta_n).
class PhaseVector {
 public:
  PhaseVector() = default;
  explicit PhaseVector(RealVector theta);
  static PhaseVector zeros(int n);
  static PhaseVector random(int n, RngStream& rng);

  int size() const { return static_cast<int>(theta_.size()); }
  const RealVector& theta() const { return theta_; }
  ComplexVector coefficients() const;

 private:
  RealVector theta_;
};

// Per-RIS-element departure/arrival angles of the BS-RIS link.
struct LosAngles {
  RealVector phi1;    // azimuth, uniform on [0, 2 pi)
  RealVector theta1;  // elevation, uniform on [0, pi)
};

double path_loss(double distance, double alpha, double ref_loss_db);
double distance(const Position& a, const Position& b);

LosAngles draw_los_angles(int N, RngStream& rng);
// Constant-modulus sqrt(beta2) entries; each row carries its own angle pair,
// which makes the matrix full rank for generic draws. Spacings in wavelengths.
ComplexMatrix los_bs_ris(int M, int N, const LosAngles& angles, double beta2,
                         double bs_spacing = 0.5, double ris_spacing = 0.5);
ComplexVector rayleigh_vector(int len, double beta2, RngStream& rng);
// Uniform over the half-disk of the given radius around `ris`, on the BS side.
Position place_me(const Position& bs, const Position& ris, double radius, RngStream& rng);

// Stream ids used for reproducible paired draws.
std::uint64_t los_stream_id();
std::uint64_t channel_stream_id(std::uint64_t trial);
std::uint64_t method_stream_id(std::uint64_t trial, std::uint64_t method);

// LoS geometry depends on cfg.seed only; ME placement and fading on
// (cfg.seed, trial). Draw order: positions, then h_b, then h_r.
ChannelSet generate_channel(const ScenarioConfig& cfg, std::uint64_t trial);

// Rows h_i^H(Phi) = h_r,i^H Phi H_br + h_b,i^H stacked into a K x M matrix.
ComplexMatrix composite_rows(const ChannelSet& cs, const PhaseVector& phi);
ComplexMatrix direct_rows(const ChannelSet& cs);
// h_i(Phi) as a column vector, i.e. the conjugate of row i above.
ComplexVector composite_channel(const ChannelSet& cs, const PhaseVector& phi, int i);
double snr(const ChannelSet& cs, const PhaseVector& phi, const ComplexVector& w, int i,
           double sigma2);

}  // namespace risbc
