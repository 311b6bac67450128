#pragma once

#include <span>

#include <Eigen/Dense>

#include "irs/channel.hpp"

namespace irs {

/// max over unit-modulus phi of P_1|h_1|^2 + P_2|h_2|^2, lifted to
/// constant + w^H Q w with w = [phi; t], |t| = 1.
struct SdrProblem {
  Eigen::VectorXcd q1;   // q_k = conj(g^c .* h_k^c), so q_k^H phi = sum g h phi
  Eigen::VectorXcd q2;
  Eigen::VectorXcd v;    // P_1 h_bar_1 q_1 + P_2 h_bar_2 q_2
  Eigen::MatrixXcd Q;    // [[P_1 q_1 q_1^H + P_2 q_2 q_2^H, v], [v^H, 0]]
  double constant = 0.0; // P_1 |h_bar_1|^2 + P_2 |h_bar_2|^2
  double noise = 1.0;
};

struct SdrSolution {
  double value = 0.0;        // constant + dual objective: a certified upper bound
  double primal_value = 0.0; // constant + tr(Q W)
  double gap = 0.0;          // value - primal_value
  Eigen::MatrixXcd W;
  int iterations = 0;
  bool converged = false;
};

SdrProblem build_sdr(const ChannelRealization& ch, const PowerConfig& powers);

/// constant + 2 Re{v^H phi} + phi^H R phi for explicit coefficients.
double sdr_objective(const SdrProblem& prob, std::span<const Complex> phi);

/// Primal-dual interior point (HKM direction) for
///   max tr(QW)  s.t. diag(W) = 1, W psd,
/// stopped when the duality gap is below tol relative to 1 + |dual|. The
/// dual iterate stays strictly feasible, so `value` bounds the optimum even
/// when `converged` is false.
SdrSolution solve_sdr(const SdrProblem& prob, double tol = 1e-7, int max_iterations = 500);

/// log2(1 + s*/sigma^2).
double sum_rate_upper_bound(const ChannelRealization& ch, const PowerConfig& powers, double tol = 1e-7);

}  // namespace irs
