#include "irs/sdr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "irs/errors.hpp"

namespace irs {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXd;

/// Largest step in [0, 1] keeping X + t D positive definite, shortened by 0.95.
double max_step(const MatrixXcd& x, const MatrixXcd& d) {
  Eigen::LLT<MatrixXcd> llt(x);
  const MatrixXcd l_inv_d = llt.matrixL().solve(d);
  const MatrixXcd s = llt.matrixL().solve(l_inv_d.adjoint()).adjoint();
  const MatrixXcd herm = 0.5 * (s + s.adjoint());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(herm, Eigen::EigenvaluesOnly);
  const double most_negative = -eig.eigenvalues().minCoeff();
  if (most_negative <= 0.0) return 1.0;
  return std::min(1.0, 0.95 / most_negative);
}

}  // namespace

SdrProblem build_sdr(const ChannelRealization& ch, const PowerConfig& powers) {
  powers.validate();
  const int m = ch.sizes.total;
  if (static_cast<int>(ch.cent_irs_to_ap.size()) != m) throw ConfigError("centralized links not populated");
  SdrProblem p;
  p.noise = powers.noise;
  p.q1.resize(m);
  p.q2.resize(m);
  for (int i = 0; i < m; ++i) {
    p.q1[i] = std::conj(ch.cent_irs_to_ap[i] * ch.cent_user_to_irs[0][i]);
    p.q2[i] = std::conj(ch.cent_irs_to_ap[i] * ch.cent_user_to_irs[1][i]);
  }
  const double p1 = powers.user1;
  const double p2 = powers.user2;
  p.v = p1 * ch.direct[0] * p.q1 + p2 * ch.direct[1] * p.q2;
  p.Q = MatrixXcd::Zero(m + 1, m + 1);
  p.Q.topLeftCorner(m, m) = p1 * p.q1 * p.q1.adjoint() + p2 * p.q2 * p.q2.adjoint();
  p.Q.topRightCorner(m, 1) = p.v;
  p.Q.bottomLeftCorner(1, m) = p.v.adjoint();
  p.constant = p1 * std::norm(ch.direct[0]) + p2 * std::norm(ch.direct[1]);
  return p;
}

double sdr_objective(const SdrProblem& prob, std::span<const Complex> phi) {
  if (static_cast<Eigen::Index>(phi.size()) != prob.q1.size()) throw ConfigError("phase count mismatch");
  const Eigen::Map<const Eigen::VectorXcd> x(phi.data(), static_cast<Eigen::Index>(phi.size()));
  const auto m = prob.q1.size();
  const Complex lin = prob.v.dot(x);   // v^H phi
  const Complex quad = x.dot(prob.Q.topLeftCorner(m, m) * x);
  return prob.constant + 2.0 * lin.real() + quad.real();
}

SdrSolution solve_sdr(const SdrProblem& prob, double tol, int max_iterations) {
  const Eigen::Index n = prob.Q.rows();
  SdrSolution sol;
  sol.W = MatrixXcd::Identity(n, n);
  const double scale = n > 0 ? prob.Q.cwiseAbs().maxCoeff() : 0.0;
  if (!(scale > 0.0)) {
    sol.value = sol.primal_value = prob.constant;
    sol.converged = true;
    return sol;
  }
  const MatrixXcd q = prob.Q / scale;
  const double offset = std::abs(prob.constant) / scale;

  MatrixXcd& w = sol.W;
  VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) y[i] = q.row(i).cwiseAbs().sum() + 1.0;
  MatrixXcd z = MatrixXcd(y.cast<Complex>().asDiagonal()) - q;

  double dual = y.sum();
  double primal = (q * w).trace().real();
  for (int it = 0; it < max_iterations; ++it) {
    dual = y.sum();
    primal = (q * w).trace().real();
    sol.iterations = it;
    if (dual - primal <= tol * (offset + std::abs(dual)) + 1e-15) {
      sol.converged = true;
      break;
    }
    const MatrixXcd z_inv = Eigen::LLT<MatrixXcd>(z).solve(MatrixXcd::Identity(n, n));
    const double mu = 0.1 * (w * z).trace().real() / static_cast<double>(n);

    const Eigen::MatrixXd schur = w.cwiseProduct(z_inv.conjugate()).real();
    const VectorXd rhs = mu * z_inv.diagonal().real() - w.diagonal().real();
    const VectorXd dy = schur.ldlt().solve(rhs);
    const MatrixXcd dz = dy.cast<Complex>().asDiagonal();
    MatrixXcd dw = mu * z_inv - w - w * dz * z_inv;
    dw = 0.5 * (dw + dw.adjoint()).eval();

    const double step_p = max_step(w, dw);
    const double step_d = max_step(z, dz);
    w += step_p * dw;
    w.diagonal().setOnes();
    y += step_d * dy;
    z = MatrixXcd(y.cast<Complex>().asDiagonal()) - q;
    sol.iterations = it + 1;
  }
  dual = y.sum();
  primal = (q * w).trace().real();
  sol.value = prob.constant + scale * dual;
  sol.primal_value = prob.constant + scale * primal;
  sol.gap = sol.value - sol.primal_value;
  return sol;
}

double sum_rate_upper_bound(const ChannelRealization& ch, const PowerConfig& powers, double tol) {
  const auto sol = solve_sdr(build_sdr(ch, powers), tol);
  return std::log1p(std::max(0.0, sol.value) / powers.noise) / std::numbers::ln2;
}

}  // namespace irs
