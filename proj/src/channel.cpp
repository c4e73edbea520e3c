#include "risbc/channel.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "risbc/errors.hpp"

namespace risbc {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

bool finite3(const Position& p) {
  return std::isfinite(p[0]) && std::isfinite(p[1]) && std::isfinite(p[2]);
}

}  // namespace

void ScenarioConfig::validate() const {
  require(M >= 1, "config: M must be >= 1");
  require(N >= 0, "config: N must be >= 0");
  require(K >= 1, "config: K must be >= 1");
  require(std::isfinite(gamma_db), "config: gamma_db must be finite");
  require(std::isfinite(sigma2_dbm), "config: sigma2_dbm must be finite");
  require(finite3(bs_pos) && finite3(ris_pos), "config: positions must be finite");
  require(distance(bs_pos, ris_pos) > me_radius, "config: BS must lie outside the ME region");
  require(std::isfinite(me_radius) && me_radius > 0.0, "config: me_radius must be > 0");
  require(alpha_br > 0.0 && alpha_rm > 0.0 && alpha_bm > 0.0,
          "config: path-loss exponents must be > 0");
  require(std::isfinite(ref_loss_db), "config: ref_loss_db must be finite");
  require(std::isfinite(epsilon) && epsilon > 0.0, "config: epsilon must be > 0");
}

ScenarioConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
  require(j.is_object(), "config: top level must be an object");
  ScenarioConfig c;
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "M") c.M = v.get<int>();
      else if (key == "N") c.N = v.get<int>();
      else if (key == "K") c.K = v.get<int>();
      else if (key == "gamma_db") c.gamma_db = v.get<double>();
      else if (key == "sigma2_dbm") c.sigma2_dbm = v.get<double>();
      else if (key == "bs_pos") c.bs_pos = v.get<Position>();
      else if (key == "ris_pos") c.ris_pos = v.get<Position>();
      else if (key == "me_radius") c.me_radius = v.get<double>();
      else if (key == "alpha_br") c.alpha_br = v.get<double>();
      else if (key == "alpha_rm") c.alpha_rm = v.get<double>();
      else if (key == "alpha_bm") c.alpha_bm = v.get<double>();
      else if (key == "ref_loss_db") c.ref_loss_db = v.get<double>();
      else if (key == "epsilon") c.epsilon = v.get<double>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else throw InvalidInput("config: unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

std::string config_to_json(const ScenarioConfig& c) {
  json j = {{"M", c.M},
            {"N", c.N},
            {"K", c.K},
            {"gamma_db", c.gamma_db},
            {"sigma2_dbm", c.sigma2_dbm},
            {"bs_pos", c.bs_pos},
            {"ris_pos", c.ris_pos},
            {"me_radius", c.me_radius},
            {"alpha_br", c.alpha_br},
            {"alpha_rm", c.alpha_rm},
            {"alpha_bm", c.alpha_bm},
            {"ref_loss_db", c.ref_loss_db},
            {"epsilon", c.epsilon},
            {"seed", c.seed}};
  return j.dump(2);
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

void ChannelSet::validate() const {
  const auto k = h_b.size();
  require(h_r.size() == k, "channel: h_r and h_b must have one entry per ME");
  require(beta2_r.size() == k && beta2_b.size() == k, "channel: beta vectors must have length K");
  for (size_t i = 0; i < k; ++i) {
    require(h_b[i].size() == H_br.cols(), "channel: h_b length must equal M");
    require(h_r[i].size() == H_br.rows(), "channel: h_r length must equal N");
  }
}

PhaseVector::PhaseVector(RealVector theta) : theta_(std::move(theta)) {
  require(theta_.allFinite(), "PhaseVector: non-finite phase");
}

PhaseVector PhaseVector::zeros(int n) { return PhaseVector(RealVector::Zero(n)); }

PhaseVector PhaseVector::random(int n, RngStream& rng) {
  RealVector t(n);
  for (int i = 0; i < n; ++i) t(i) = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return PhaseVector(t);
}

ComplexVector PhaseVector::coefficients() const {
  ComplexVector c(theta_.size());
  for (Eigen::Index i = 0; i < theta_.size(); ++i) c(i) = std::polar(1.0, theta_(i));
  return c;
}

double path_loss(double d, double alpha, double ref_loss_db) {
  require(d > 0.0 && std::isfinite(d), "path_loss: distance must be > 0");
  return db_to_linear(ref_loss_db) * std::pow(d, -alpha);
}

double distance(const Position& a, const Position& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

LosAngles draw_los_angles(int N, RngStream& rng) {
  LosAngles a;
  a.phi1.resize(N);
  a.theta1.resize(N);
  for (int n = 0; n < N; ++n) {
    a.phi1(n) = rng.uniform(0.0, 2.0 * std::numbers::pi);
    a.theta1(n) = rng.uniform(0.0, std::numbers::pi);
  }
  return a;
}

ComplexMatrix los_bs_ris(int M, int N, const LosAngles& angles, double beta2, double bs_spacing,
                         double ris_spacing) {
  require(M >= 1 && N >= 0, "los_bs_ris: invalid dimensions");
  require(angles.phi1.size() >= N && angles.theta1.size() >= N, "los_bs_ris: too few angles");
  require(beta2 >= 0.0, "los_bs_ris: beta2 must be >= 0");
  constexpr double two_pi = 2.0 * std::numbers::pi;  // wavelength is the unit of length
  const double amp = std::sqrt(beta2);
  ComplexMatrix H(N, M);
  for (int n = 0; n < N; ++n) {
    const double phi2 = std::numbers::pi + angles.phi1(n);
    const double theta2 = std::numbers::pi - angles.theta1(n);
    const double dep = std::sin(angles.phi1(n)) * std::sin(angles.theta1(n));
    const double arr = std::sin(phi2) * std::sin(theta2);
    for (int m = 0; m < M; ++m) {
      const double ph = two_pi * (bs_spacing * m * dep + ris_spacing * n * arr);
      H(n, m) = std::polar(amp, ph);
    }
  }
  return H;
}

ComplexVector rayleigh_vector(int len, double beta2, RngStream& rng) {
  require(len >= 0, "rayleigh_vector: negative length");
  require(beta2 >= 0.0, "rayleigh_vector: beta2 must be >= 0");
  return sample_complex_gaussian(len, beta2, rng);
}

Position place_me(const Position& bs, const Position& ris, double radius, RngStream& rng) {
  // Unit vector from the RIS toward the BS in the horizontal plane picks the half.
  const double ux = bs[0] - ris[0], uy = bs[1] - ris[1];
  const double un = std::hypot(ux, uy);
  require(un > 0.0, "place_me: BS and RIS share a horizontal position");
  const double ax = ux / un, ay = uy / un;
  const double r = radius * std::sqrt(rng.uniform(0.0, 1.0));
  const double t = rng.uniform(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
  // Local frame: a points into the half-disk, (ay, -ax) is tangential.
  const double along = r * std::cos(t), across = r * std::sin(t);
  return {ris[0] + along * ax + across * ay, ris[1] + along * ay - across * ax, ris[2]};
}

std::uint64_t los_stream_id() { return 0x4c6f53ull << 40; }

std::uint64_t channel_stream_id(std::uint64_t trial) { return (1ull << 62) | trial; }

std::uint64_t method_stream_id(std::uint64_t trial, std::uint64_t method) {
  return (2ull << 62) | (method << 40) | trial;
}

ChannelSet generate_channel(const ScenarioConfig& cfg, std::uint64_t trial) {
  cfg.validate();
  ChannelSet cs;
  RngStream los_rng(cfg.seed, los_stream_id());
  cs.beta2_br = path_loss(distance(cfg.bs_pos, cfg.ris_pos), cfg.alpha_br, cfg.ref_loss_db);
  cs.H_br = los_bs_ris(cfg.M, cfg.N, draw_los_angles(cfg.N, los_rng), cs.beta2_br);

  RngStream rng(cfg.seed, channel_stream_id(trial));
  for (int i = 0; i < cfg.K; ++i) {
    cs.me_pos.push_back(place_me(cfg.bs_pos, cfg.ris_pos, cfg.me_radius, rng));
  }
  for (int i = 0; i < cfg.K; ++i) {
    cs.beta2_r.push_back(path_loss(distance(cs.me_pos[i], cfg.ris_pos), cfg.alpha_rm,
                                   cfg.ref_loss_db));
    cs.beta2_b.push_back(path_loss(distance(cs.me_pos[i], cfg.bs_pos), cfg.alpha_bm,
                                   cfg.ref_loss_db));
  }
  for (int i = 0; i < cfg.K; ++i) cs.h_b.push_back(rayleigh_vector(cfg.M, cs.beta2_b[i], rng));
  for (int i = 0; i < cfg.K; ++i) cs.h_r.push_back(rayleigh_vector(cfg.N, cs.beta2_r[i], rng));
  return cs;
}

ComplexMatrix composite_rows(const ChannelSet& cs, const PhaseVector& phi) {
  require(phi.size() == cs.N(), "composite_rows: phase vector length must equal N");
  const ComplexVector c = phi.coefficients();
  ComplexMatrix rows(cs.K(), cs.M());
  for (int i = 0; i < cs.K(); ++i) {
    const ComplexVector t = cs.h_r[i].conjugate().cwiseProduct(c);
    rows.row(i) = t.transpose() * cs.H_br + cs.h_b[i].adjoint();
  }
  return rows;
}

ComplexMatrix direct_rows(const ChannelSet& cs) {
  ComplexMatrix rows(cs.K(), cs.M());
  for (int i = 0; i < cs.K(); ++i) rows.row(i) = cs.h_b[i].adjoint();
  return rows;
}

ComplexVector composite_channel(const ChannelSet& cs, const PhaseVector& phi, int i) {
  require(i >= 0 && i < cs.K(), "composite_channel: ME index out of range");
  require(phi.size() == cs.N(), "composite_channel: phase vector length must equal N");
  const ComplexVector t = cs.h_r[i].conjugate().cwiseProduct(phi.coefficients());
  return (t.transpose() * cs.H_br).adjoint() + cs.h_b[i];
}

double snr(const ChannelSet& cs, const PhaseVector& phi, const ComplexVector& w, int i,
           double sigma2) {
  require(i >= 0 && i < cs.K(), "snr: ME index out of range");
  require(w.size() == cs.M(), "snr: beamformer length must equal M");
  require(sigma2 > 0.0, "snr: sigma2 must be > 0");
  const ComplexVector c = phi.coefficients();
  const ComplexVector t = cs.h_r[i].conjugate().cwiseProduct(c);
  const cplx g = (t.transpose() * cs.H_br * w).value() + cs.h_b[i].dot(w);
  return std::norm(g) / sigma2;
}

}  // namespace risbc
