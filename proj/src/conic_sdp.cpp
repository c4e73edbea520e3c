#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "risbc/conic.hpp"
#include "risbc/errors.hpp"

namespace risbc {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unbounded: return "unbounded";
    case SolveStatus::MaxIter: return "max_iter";
  }
  return "unknown";
}

RealMatrix real_embedding(const HermitianMatrix& a) {
  const Eigen::Index n = a.dim();
  RealMatrix out(2 * n, 2 * n);
  const RealMatrix re = a.matrix().real();
  const RealMatrix im = a.matrix().imag();
  out.topLeftCorner(n, n) = re;
  out.topRightCorner(n, n) = -im;
  out.bottomLeftCorner(n, n) = im;
  out.bottomRightCorner(n, n) = re;
  return out;
}

namespace {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
double inner(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  return std::real(a.cwiseProduct(b.conjugate()).sum());
}

template <class Scalar>
Mat<Scalar> herm(const Mat<Scalar>& t) {
  return 0.5 * (t + t.adjoint());
}

// Standard form: min <C,X> + c.x  s.t.  A(X) + Alp x = b,  X psd, x >= 0.
// Each row of A is a weighted sum of rank-one terms w f f^H; unit vectors
// are kept implicit.
template <class Scalar>
struct StandardForm {
  int n = 0;
  int m = 0;
  int p = 0;
  Mat<Scalar> C;
  RealVector c;
  std::vector<int> unit_idx;
  std::vector<double> unit_w;
  std::vector<int> unit_row;
  Mat<Scalar> U;
  std::vector<double> dense_w;
  std::vector<int> dense_row;
  RealMatrix Alp;
  RealVector b;

  RealVector apply(const Mat<Scalar>& X, const RealVector& x) const {
    RealVector out = Alp * x;
    for (size_t a = 0; a < unit_idx.size(); ++a) {
      out(unit_row[a]) += unit_w[a] * std::real(X(unit_idx[a], unit_idx[a]));
    }
    if (U.cols() > 0) {
      const Mat<Scalar> XU = X * U;
      for (Eigen::Index a = 0; a < U.cols(); ++a) {
        out(dense_row[a]) += dense_w[a] * std::real(U.col(a).dot(XU.col(a)));
      }
    }
    return out;
  }

  Mat<Scalar> adjoint_mat(const RealVector& y) const {
    Mat<Scalar> Z = Mat<Scalar>::Zero(n, n);
    for (size_t a = 0; a < unit_idx.size(); ++a) {
      Z(unit_idx[a], unit_idx[a]) += unit_w[a] * y(unit_row[a]);
    }
    if (U.cols() > 0) {
      RealVector s(U.cols());
      for (Eigen::Index a = 0; a < U.cols(); ++a) s(a) = dense_w[a] * y(dense_row[a]);
      Z.noalias() += U * s.asDiagonal() * U.adjoint();
    }
    return Z;
  }
};

struct RowBuilder {
  std::vector<std::pair<int, double>> units;
  std::vector<std::pair<ComplexVector, double>> dense;
  std::vector<std::pair<int, double>> lp;
  double b = 0.0;
};

// Problem data common to both arithmetic paths, before scaling.
struct Lifted {
  int dim = 0;
  int p = 0;
  ComplexMatrix C;
  RealVector c;
  std::vector<RowBuilder> rows;
  // scalar var -> (lp index, lp index of negative part or -1)
  std::vector<std::pair<int, int>> scalar_map;
  bool trivially_infeasible = false;
};

Lifted lift(const SdpProblem& pr) {
  Lifted L;
  L.dim = static_cast<int>(pr.dim);
  const double sgn = pr.sense == Sense::Minimize ? 1.0 : -1.0;
  if (pr.objective.dim() == pr.dim) {
    L.C = sgn * pr.objective.matrix();
  } else if (pr.objective.dim() == 0) {
    L.C = ComplexMatrix::Zero(pr.dim, pr.dim);
  } else {
    throw InvalidInput("solve_sdp: objective dimension mismatch");
  }
  const size_t ns = pr.scalar_signs.size();
  if (!pr.scalar_objective.empty() && pr.scalar_objective.size() != ns) {
    throw InvalidInput("solve_sdp: scalar objective size mismatch");
  }
  std::vector<double> lpc;
  for (size_t k = 0; k < ns; ++k) {
    const double ck = pr.scalar_objective.empty() ? 0.0 : sgn * pr.scalar_objective[k];
    const int pos = static_cast<int>(lpc.size());
    lpc.push_back(ck);
    int neg = -1;
    if (pr.scalar_signs[k] == ScalarSign::Free) {
      neg = static_cast<int>(lpc.size());
      lpc.push_back(-ck);
    }
    L.scalar_map.emplace_back(pos, neg);
  }
  if (pr.unit_diagonal) {
    for (int j = 0; j < L.dim; ++j) {
      RowBuilder r;
      r.units.emplace_back(j, 1.0);
      r.b = 1.0;
      L.rows.push_back(std::move(r));
    }
  }
  for (const auto& ti : pr.trace_inequalities) {
    if (ti.matrix.dim() != pr.dim) throw InvalidInput("solve_sdp: constraint dimension mismatch");
    if (!std::isfinite(ti.rhs) || !std::isfinite(ti.offset)) {
      throw InvalidInput("solve_sdp: non-finite right-hand side");
    }
    RowBuilder r;
    r.b = ti.rhs - ti.offset;
    const double fro = ti.matrix.frobenius_norm();
    if (fro > 0.0) {
      const auto ed = eig_hermitian(ti.matrix);
      const double lmax = ed.values.cwiseAbs().maxCoeff();
      for (Eigen::Index k = 0; k < ed.values.size(); ++k) {
        if (std::abs(ed.values(k)) > 1e-13 * lmax) {
          r.dense.emplace_back(ed.vectors.col(k), ed.values(k));
        }
      }
    }
    for (const auto& st : ti.scalar_terms) {
      if (st.var >= ns) throw InvalidInput("solve_sdp: scalar term index out of range");
      const auto [pos, neg] = L.scalar_map[st.var];
      r.lp.emplace_back(pos, st.coeff);
      if (neg >= 0) r.lp.emplace_back(neg, -st.coeff);
    }
    bool has_lp = false;
    for (const auto& t : r.lp) has_lp = has_lp || t.second != 0.0;
    if (r.dense.empty() && !has_lp) {
      // 0 >= b: satisfied rows are dropped, violated rows make the problem infeasible.
      if (r.b > 1e-12 * (1.0 + std::abs(ti.rhs))) L.trivially_infeasible = true;
      continue;
    }
    const int slack = static_cast<int>(lpc.size());
    lpc.push_back(0.0);
    r.lp.emplace_back(slack, -1.0);
    L.rows.push_back(std::move(r));
  }
  L.p = static_cast<int>(lpc.size());
  L.c = Eigen::Map<RealVector>(lpc.data(), L.p);
  return L;
}

template <class Scalar>
StandardForm<Scalar> to_standard(const Lifted& L);

template <>
StandardForm<cplx> to_standard<cplx>(const Lifted& L) {
  StandardForm<cplx> s;
  s.n = L.dim;
  s.m = static_cast<int>(L.rows.size());
  s.p = L.p;
  s.C = L.C;
  s.c = L.c;
  s.Alp = RealMatrix::Zero(s.m, s.p);
  s.b.resize(s.m);
  std::vector<ComplexVector> cols;
  for (int j = 0; j < s.m; ++j) {
    const auto& r = L.rows[j];
    for (const auto& [i, w] : r.units) {
      s.unit_idx.push_back(i);
      s.unit_w.push_back(w);
      s.unit_row.push_back(j);
    }
    for (const auto& [v, w] : r.dense) {
      cols.push_back(v);
      s.dense_w.push_back(w);
      s.dense_row.push_back(j);
    }
    for (const auto& [k, a] : r.lp) s.Alp(j, k) += a;
    s.b(j) = r.b;
  }
  s.U.resize(s.n, static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) s.U.col(k) = cols[k];
  return s;
}

template <>
StandardForm<double> to_standard<double>(const Lifted& L) {
  StandardForm<double> s;
  const int n = L.dim;
  s.n = 2 * n;
  s.m = static_cast<int>(L.rows.size());
  s.p = L.p;
  s.C = 0.5 * real_embedding(HermitianMatrix(L.C));
  s.c = L.c;
  s.Alp = RealMatrix::Zero(s.m, s.p);
  s.b.resize(s.m);
  std::vector<RealVector> cols;
  for (int j = 0; j < s.m; ++j) {
    const auto& r = L.rows[j];
    for (const auto& [i, w] : r.units) {
      for (int off : {0, n}) {
        s.unit_idx.push_back(i + off);
        s.unit_w.push_back(0.5 * w);
        s.unit_row.push_back(j);
      }
    }
    for (const auto& [v, w] : r.dense) {
      RealVector u1(2 * n), u2(2 * n);
      u1 << v.real(), v.imag();
      u2 << -v.imag(), v.real();
      cols.push_back(u1);
      cols.push_back(u2);
      for (int t = 0; t < 2; ++t) {
        s.dense_w.push_back(0.5 * w);
        s.dense_row.push_back(j);
      }
    }
    for (const auto& [k, a] : r.lp) s.Alp(j, k) += a;
    s.b(j) = r.b;
  }
  s.U.resize(s.n, static_cast<Eigen::Index>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) s.U.col(k) = cols[k];
  return s;
}

ComplexMatrix to_complex(const Mat<cplx>& X, int) { return X; }

ComplexMatrix to_complex(const Mat<double>& X, int n) {
  const RealMatrix re = 0.5 * (X.topLeftCorner(n, n) + X.bottomRightCorner(n, n));
  const RealMatrix im = 0.5 * (X.bottomLeftCorner(n, n) - X.topRightCorner(n, n));
  ComplexMatrix out(n, n);
  out.real() = re;
  out.imag() = im;
  return 0.5 * (out + out.adjoint());
}

// Row norms, primal scale and objective scale.
struct Scaling {
  RealVector row;
  double rho = 1.0;
  double omega = 1.0;
};

template <class Scalar>
Scaling scale(StandardForm<Scalar>& s) {
  Scaling sc;
  sc.row = RealVector::Zero(s.m);
  // Frobenius norm of each row's matrix from the Gram of its factors.
  std::vector<std::vector<std::pair<Vec<Scalar>, double>>> per_row(s.m);
  for (size_t a = 0; a < s.unit_idx.size(); ++a) {
    Vec<Scalar> e = Vec<Scalar>::Zero(s.n);
    e(s.unit_idx[a]) = Scalar(1.0);
    per_row[s.unit_row[a]].emplace_back(e, s.unit_w[a]);
  }
  for (Eigen::Index a = 0; a < s.U.cols(); ++a) {
    per_row[s.dense_row[a]].emplace_back(s.U.col(a), s.dense_w[a]);
  }
  for (int j = 0; j < s.m; ++j) {
    double fro2 = 0.0;
    const auto& f = per_row[j];
    for (const auto& [ua, wa] : f) {
      for (const auto& [ub, wb] : f) fro2 += wa * wb * std::norm(ua.dot(ub));
    }
    fro2 += s.Alp.row(j).squaredNorm();
    sc.row(j) = fro2 > 0.0 ? std::sqrt(fro2) : 1.0;
  }
  for (size_t a = 0; a < s.unit_idx.size(); ++a) s.unit_w[a] /= sc.row(s.unit_row[a]);
  for (size_t a = 0; a < s.dense_w.size(); ++a) s.dense_w[a] /= sc.row(s.dense_row[a]);
  for (int j = 0; j < s.m; ++j) {
    s.Alp.row(j) /= sc.row(j);
    s.b(j) /= sc.row(j);
  }
  const double bmax = s.m ? s.b.cwiseAbs().maxCoeff() : 0.0;
  sc.rho = bmax > 0.0 ? bmax : 1.0;
  s.b /= sc.rho;
  const double cn = std::sqrt(s.C.squaredNorm() + s.c.squaredNorm());
  sc.omega = cn > 0.0 ? cn : 1.0;
  s.C /= sc.omega;
  s.c /= sc.omega;
  return sc;
}

template <class Scalar>
double max_step_psd(const Eigen::LLT<Mat<Scalar>>& chol, const Mat<Scalar>& d) {
  const auto L = chol.matrixL();
  Mat<Scalar> t = L.solve(d);
  Mat<Scalar> t2 = L.solve(Mat<Scalar>(t.adjoint()));
  Eigen::SelfAdjointEigenSolver<Mat<Scalar>> es(herm<Scalar>(t2), Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  return lmin < 0.0 ? -1.0 / lmin : std::numeric_limits<double>::infinity();
}

double max_step_vec(const RealVector& v, const RealVector& dv) {
  double a = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (dv(i) < 0.0) a = std::min(a, -v(i) / dv(i));
  }
  return a;
}

double max_step_scalar(double v, double dv) {
  return dv < 0.0 ? -v / dv : std::numeric_limits<double>::infinity();
}

template <class Scalar>
struct Direction {
  Mat<Scalar> dX, dS;
  RealVector dx, dz, dy;
  double dtau = 0.0;
  double dkappa = 0.0;
};

template <class Scalar>
SdpSolution run_hsd(const Lifted& L, const ConicTolerances& tols, Sense sense) {
  StandardForm<Scalar> s = to_standard<Scalar>(L);
  const Scaling sc = scale(s);
  const int n = s.n, m = s.m, p = s.p;
  const double nu = static_cast<double>(n + p);

  Mat<Scalar> X = Mat<Scalar>::Identity(n, n);
  Mat<Scalar> S = Mat<Scalar>::Identity(n, n);
  RealVector x = RealVector::Ones(p), z = RealVector::Ones(p), y = RealVector::Zero(m);
  double tau = 1.0, kappa = 1.0;

  const double bnorm = s.b.norm();
  const double cnorm = std::sqrt(s.C.squaredNorm() + s.c.squaredNorm());
  const double scale_obj = sc.omega * sc.rho;

  SdpSolution sol;
  const Mat<Scalar> I = Mat<Scalar>::Identity(n, n);
  int stall = 0;

  auto finish = [&](SolveStatus st, double pobj, double dobj, double pres, double dres) {
    sol.status = st;
    const double sgn = sense == Sense::Minimize ? 1.0 : -1.0;
    const double t = st == SolveStatus::Optimal || st == SolveStatus::MaxIter ? tau : 1.0;
    sol.primal_matrix = HermitianMatrix(to_complex(Mat<Scalar>(X * (sc.rho / t)), L.dim), 1e-6);
    sol.scalar_values.clear();
    for (const auto& [pos, neg] : L.scalar_map) {
      double v = x(pos);
      if (neg >= 0) v -= x(neg);
      sol.scalar_values.push_back(v * sc.rho / t);
    }
    sol.objective_value = sgn * pobj * scale_obj;
    sol.dual_objective = sgn * dobj * scale_obj;
    sol.duality_gap = std::abs(pobj - dobj) * scale_obj;
    sol.primal_residual = pres;
    sol.dual_residual = dres;
    sol.kkt_residual = std::max(pres, dres);
    return sol;
  };

  for (int it = 0;; ++it) {
    sol.iterations = it;
    const RealVector rp = s.b * tau - s.apply(X, x);
    const Mat<Scalar> ATy = s.adjoint_mat(y);
    const RealVector ATy_lp = s.Alp.transpose() * y;
    const Mat<Scalar> Rd = ATy + S - s.C * tau;
    const RealVector rdl = ATy_lp + z - s.c * tau;
    const double cx = inner<Scalar>(s.C, X) + s.c.dot(x);
    const double by = s.b.dot(y);
    const double rg = cx - by + kappa;
    const double mu = (std::real(X.cwiseProduct(S.conjugate()).sum()) + x.dot(z) + tau * kappa) /
                      (nu + 1.0);
    sol.merit_trace.push_back(mu);

    const double pres = rp.norm() / tau / (1.0 + bnorm);
    const double dres = std::sqrt(Rd.squaredNorm() + rdl.squaredNorm()) / tau / (1.0 + cnorm);
    const double pobj = cx / tau;
    const double dobj = by / tau;
    const double gap = std::abs(pobj - dobj);
    const bool gap_ok = gap <= tols.gap * (1.0 + std::abs(pobj)) &&
                        gap * scale_obj <= tols.gap * (1.0 + std::abs(pobj) * scale_obj);
    if (pres <= tols.feasibility && dres <= tols.feasibility && gap_ok) {
      return finish(SolveStatus::Optimal, pobj, dobj, pres, dres);
    }
    if (kappa > tau) {
      if (by > 0.0) {
        const double cert = std::sqrt((ATy + S).squaredNorm() + (ATy_lp + z).squaredNorm());
        if (cert <= tols.feasibility * by) {
          return finish(SolveStatus::Infeasible, pobj, dobj, pres, dres);
        }
      }
      if (cx < 0.0) {
        const double cert = s.apply(X, x).norm();
        if (cert <= tols.feasibility * (-cx)) {
          return finish(SolveStatus::Unbounded, pobj, dobj, pres, dres);
        }
      }
    }
    if (it >= tols.max_iterations || stall >= 5) {
      return finish(SolveStatus::MaxIter, pobj, dobj, pres, dres);
    }

    Eigen::LLT<Mat<Scalar>> cholX(X), cholS(S);
    if (cholX.info() != Eigen::Success || cholS.info() != Eigen::Success) {
      return finish(SolveStatus::MaxIter, pobj, dobj, pres, dres);
    }
    const Mat<Scalar> Sinv = cholS.solve(I);
    auto D = [&](const Mat<Scalar>& M) { return herm<Scalar>(Mat<Scalar>(X * M * Sinv)); };
    const RealVector dlp = x.cwiseQuotient(z);

    // Schur complement: M_kl = <A_k, D(A_l)>.
    const int Ru = static_cast<int>(s.unit_idx.size());
    const int Rd_ = static_cast<int>(s.U.cols());
    const int R = Ru + Rd_;
    Mat<Scalar> GX(R, R), GS(R, R);
    for (int a = 0; a < Ru; ++a) {
      for (int b = 0; b < Ru; ++b) {
        GX(a, b) = X(s.unit_idx[a], s.unit_idx[b]);
        GS(a, b) = Sinv(s.unit_idx[a], s.unit_idx[b]);
      }
    }
    if (Rd_ > 0) {
      const Mat<Scalar> XU = X * s.U, SU = Sinv * s.U;
      for (int a = 0; a < Ru; ++a) {
        for (int b = 0; b < Rd_; ++b) {
          GX(a, Ru + b) = XU(s.unit_idx[a], b);
          GS(a, Ru + b) = SU(s.unit_idx[a], b);
          GX(Ru + b, a) = Eigen::numext::conj(GX(a, Ru + b));
          GS(Ru + b, a) = Eigen::numext::conj(GS(a, Ru + b));
        }
      }
      GX.bottomRightCorner(Rd_, Rd_) = s.U.adjoint() * XU;
      GS.bottomRightCorner(Rd_, Rd_) = s.U.adjoint() * SU;
    }
    std::vector<int> owner(R);
    std::vector<double> wt(R);
    for (int a = 0; a < Ru; ++a) {
      owner[a] = s.unit_row[a];
      wt[a] = s.unit_w[a];
    }
    for (int a = 0; a < Rd_; ++a) {
      owner[Ru + a] = s.dense_row[a];
      wt[Ru + a] = s.dense_w[a];
    }
    RealMatrix Msc = s.Alp * dlp.asDiagonal() * s.Alp.transpose();
    for (int a = 0; a < R; ++a) {
      for (int b = 0; b < R; ++b) {
        Msc(owner[a], owner[b]) +=
            wt[a] * wt[b] * std::real(GX(a, b) * Eigen::numext::conj(GS(a, b)));
      }
    }
    Msc = 0.5 * (Msc + Msc.transpose()).eval();
    Eigen::LDLT<RealMatrix> schur(Msc);
    if (schur.info() != Eigen::Success) {
      return finish(SolveStatus::MaxIter, pobj, dobj, pres, dres);
    }

    const Mat<Scalar> DC = D(s.C);
    const RealVector Dc = dlp.cwiseProduct(s.c);
    const RealVector ADc = s.apply(DC, Dc);
    const double cDc = inner<Scalar>(s.C, DC) + s.c.dot(Dc);
    const RealVector q = schur.solve(RealVector(ADc + s.b));
    const Mat<Scalar> DRd = D(Rd);
    const RealVector Drdl = dlp.cwiseProduct(rdl);
    const RealVector ADc_b = ADc - s.b;
    const double qden = ADc_b.dot(q) - cDc - kappa / tau;

    auto solve_dir = [&](const Mat<Scalar>& Rc, const RealVector& Rl, double rtk, double eta) {
      Direction<Scalar> d;
      const Mat<Scalar> Rp = Rc + eta * DRd;
      const RealVector Rpl = Rl + eta * Drdl;
      const RealVector r1 = eta * rp - s.apply(Rp, Rpl);
      const double r2 = -eta * rg - (inner<Scalar>(s.C, Rp) + s.c.dot(Rpl)) - rtk / tau;
      const RealVector pv = schur.solve(r1);
      d.dtau = (r2 - ADc_b.dot(pv)) / qden;
      d.dy = pv + d.dtau * q;
      d.dS = -eta * Rd - s.adjoint_mat(d.dy) + s.C * d.dtau;
      d.dz = -eta * rdl - s.Alp.transpose() * d.dy + s.c * d.dtau;
      d.dX = Rc - D(d.dS);
      d.dx = Rl - dlp.cwiseProduct(d.dz);
      d.dkappa = (rtk - kappa * d.dtau) / tau;
      return d;
    };
    auto step_max = [&](const Direction<Scalar>& d) {
      double a = max_step_psd<Scalar>(cholX, d.dX);
      a = std::min(a, max_step_psd<Scalar>(cholS, d.dS));
      a = std::min(a, max_step_vec(x, d.dx));
      a = std::min(a, max_step_vec(z, d.dz));
      a = std::min(a, max_step_scalar(tau, d.dtau));
      a = std::min(a, max_step_scalar(kappa, d.dkappa));
      return a;
    };
    // mu(alpha) is quadratic in alpha.
    auto mu_at = [&](const Direction<Scalar>& d, double a) {
      const double c1 = inner<Scalar>(d.dX, S) + inner<Scalar>(X, d.dS) + d.dx.dot(z) +
                        x.dot(d.dz) + d.dtau * kappa + tau * d.dkappa;
      const double c2 = inner<Scalar>(d.dX, d.dS) + d.dx.dot(d.dz) + d.dtau * d.dkappa;
      return mu + (a * c1 + a * a * c2) / (nu + 1.0);
    };

    const Direction<Scalar> pred =
        solve_dir(Mat<Scalar>(-X), RealVector(-x), -tau * kappa, 1.0);
    const double a_aff = std::min(1.0, step_max(pred));
    const double mu_aff = std::max(mu_at(pred, a_aff), 0.0);
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);
    const Mat<Scalar> Rc = sigma * mu * Sinv - X - herm<Scalar>(Mat<Scalar>(pred.dX * pred.dS * Sinv));
    const RealVector Rl = (sigma * mu) * z.cwiseInverse() - x -
                          pred.dx.cwiseProduct(pred.dz).cwiseQuotient(z);
    const double rtk = sigma * mu - tau * kappa - pred.dtau * pred.dkappa;
    const Direction<Scalar> corr = solve_dir(Rc, Rl, rtk, 1.0 - sigma);

    double alpha = std::min(1.0, 0.98 * step_max(corr));
    for (int bt = 0; bt < 40 && mu_at(corr, alpha) > mu; ++bt) alpha *= 0.7;
    if (mu_at(corr, alpha) > mu) alpha = 0.0;
    stall = alpha < 1e-10 ? stall + 1 : 0;

    X = herm<Scalar>(Mat<Scalar>(X + alpha * corr.dX));
    S = herm<Scalar>(Mat<Scalar>(S + alpha * corr.dS));
    x += alpha * corr.dx;
    z += alpha * corr.dz;
    y += alpha * corr.dy;
    tau += alpha * corr.dtau;
    kappa += alpha * corr.dkappa;
  }
}

}  // namespace

SdpSolution solve_sdp(const SdpProblem& problem, const ConicTolerances& tols) {
  if (problem.dim < 1) throw InvalidInput("solve_sdp: dimension must be >= 1");
  const Lifted L = lift(problem);
  if (L.trivially_infeasible) {
    SdpSolution sol;
    sol.status = SolveStatus::Infeasible;
    sol.primal_matrix = HermitianMatrix(problem.dim);
    sol.scalar_values.assign(problem.scalar_signs.size(), 0.0);
    return sol;
  }
  return tols.real_embedding ? run_hsd<double>(L, tols, problem.sense)
                             : run_hsd<cplx>(L, tols, problem.sense);
}

}  // namespace risbc
