#ifndef GROVERWALK_CHEBYSHEV_HPP
#define GROVERWALK_CHEBYSHEV_HPP

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "groverwalk/graph.hpp"

namespace groverwalk {

// T_m(P) e_u by the three-term recurrence x_m = 2 P x_{m-1} - x_{m-2}.
inline Eigen::VectorXd chebyshev_vector(const Eigen::MatrixXd& p, int u, long m) {
  if (u < 0 || u >= p.rows()) throw std::invalid_argument("chebyshev_vector: vertex out of range");
  if (m < 0) throw std::invalid_argument("chebyshev_vector: order must be >= 0");
  Eigen::VectorXd prev = Eigen::VectorXd::Unit(p.rows(), u);
  if (m == 0) return prev;
  Eigen::VectorXd cur = p * prev;
  for (long k = 2; k <= m; ++k) {
    Eigen::VectorXd next = 2.0 * (p * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// |e_v^T T_m(P) e_u|, the m-step vertex-to-vertex transfer amplitude.
inline double transfer_fidelity(const Eigen::MatrixXd& p, int u, int v, long m) {
  if (v < 0 || v >= p.rows()) throw std::invalid_argument("transfer_fidelity: vertex out of range");
  return std::abs(chebyshev_vector(p, u, m)(v));
}

struct FidelityTrace {
  int u = 0;
  int v = 0;
  long tau_max = 0;
  double max_fidelity = 0.0;
  long argmax = 0;                // earliest step attaining the maximum
  std::vector<double> samples;    // fidelity at tau = 0..tau_max when retained
};

inline FidelityTrace fidelity_sweep(const Eigen::MatrixXd& p, int u, int v, long tau_max,
                                    bool retain_samples = false) {
  if (u < 0 || u >= p.rows() || v < 0 || v >= p.rows())
    throw std::invalid_argument("fidelity_sweep: vertex out of range");
  if (tau_max < 0) throw std::invalid_argument("fidelity_sweep: tau_max must be >= 0");
  FidelityTrace trace;
  trace.u = u;
  trace.v = v;
  trace.tau_max = tau_max;
  if (retain_samples) trace.samples.reserve(tau_max + 1);

  Eigen::VectorXd prev = Eigen::VectorXd::Unit(p.rows(), u);
  Eigen::VectorXd cur;
  for (long tau = 0; tau <= tau_max; ++tau) {
    if (tau == 1) {
      cur = p * prev;
    } else if (tau >= 2) {
      Eigen::VectorXd next = 2.0 * (p * cur) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    const double f = std::abs(tau == 0 ? prev(v) : cur(v));
    if (retain_samples) trace.samples.push_back(f);
    if (tau == 0 || f > trace.max_fidelity) {
      trace.max_fidelity = f;
      trace.argmax = tau;
    }
  }
  return trace;
}

// U^tau applied to the uniform incoming state of vertex u (the column
// N^T e_u), i.e. the raw arc-space evolution.
inline Eigen::VectorXd evolve_state(const WalkMatrices& w, int u, long tau) {
  if (u < 0 || u >= w.N.rows()) throw std::invalid_argument("evolve_state: vertex out of range");
  if (tau < 0) throw std::invalid_argument("evolve_state: tau must be >= 0");
  Eigen::VectorXd x = w.N.transpose().col(u);
  for (long t = 0; t < tau; ++t) x = w.U * x;
  return x;
}

// Max-norm residual of N U^m N^T = T_m(P) over m = 0..m_max.  This is the
// identity that lets the vertex-space recurrence stand in for the full
// arc-space walk.
inline double verify_intertwine(const Graph& g, long m_max) {
  if (m_max < 0) throw std::invalid_argument("verify_intertwine: m_max must be >= 0");
  const WalkMatrices w = walk_matrices(g);
  const Eigen::MatrixXd p = discriminant(g).P;
  const int n = g.vertex_count();

  Eigen::MatrixXd um_nt = w.N.transpose();               // U^m N^T, m starting at 0
  Eigen::MatrixXd t_prev = Eigen::MatrixXd::Identity(n, n);  // T_{m-1}(P)
  Eigen::MatrixXd t_cur = p;                             // T_m(P)
  double worst = (w.N * um_nt - t_prev).cwiseAbs().maxCoeff();
  for (long m = 1; m <= m_max; ++m) {
    um_nt = w.U * um_nt;
    worst = std::max(worst, (w.N * um_nt - t_cur).cwiseAbs().maxCoeff());
    Eigen::MatrixXd t_next = 2.0 * (p * t_cur) - t_prev;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return worst;
}

// Smallest tau in [1, tau_bound] with U^tau = I (max-norm within tol).
inline std::optional<long> detect_period(const Eigen::MatrixXd& u_step, long tau_bound = 10000,
                                         double tol = 1e-9) {
  if (tau_bound < 1) throw std::invalid_argument("detect_period: tau_bound must be >= 1");
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(u_step.rows(), u_step.cols());
  Eigen::MatrixXd power = u_step;
  for (long tau = 1; tau <= tau_bound; ++tau) {
    if ((power - eye).cwiseAbs().maxCoeff() < tol) return tau;
    if (tau < tau_bound) power = u_step * power;
  }
  return std::nullopt;
}

inline std::optional<long> detect_period(const Graph& g, long tau_bound = 10000,
                                         double tol = 1e-9) {
  return detect_period(walk_matrices(g).U, tau_bound, tol);
}

enum class PstOutcome { Found, AbsentWithinPeriod, Inconclusive };

struct PstVerdict {
  PstOutcome outcome = PstOutcome::Inconclusive;
  long tau = 0;                  // first hit when Found
  std::optional<long> period;
  double best_fidelity = 0.0;
  long searched_up_to = 0;
};

inline constexpr double kPstHitThreshold = 1.0 - 1e-9;

// Perfect state transfer test.  When the walk is periodic the scan over one
// period is exhaustive: fidelities repeat, so a miss is a definitive no.
inline PstVerdict pst_check(const Graph& g, int u, int v, long tau_bound = 10000) {
  if (u == v) throw std::invalid_argument("pst_check: vertices must differ");
  const Eigen::MatrixXd p = discriminant(g).P;
  PstVerdict verdict;
  verdict.period = detect_period(g, tau_bound);
  const long horizon = verdict.period ? *verdict.period : tau_bound;
  verdict.searched_up_to = horizon;

  Eigen::VectorXd prev = Eigen::VectorXd::Unit(p.rows(), u);
  Eigen::VectorXd cur = p * prev;
  for (long tau = 1; tau <= horizon; ++tau) {
    if (tau >= 2) {
      Eigen::VectorXd next = 2.0 * (p * cur) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    const double f = std::abs(cur(v));
    if (f > verdict.best_fidelity) verdict.best_fidelity = f;
    if (f >= kPstHitThreshold) {
      verdict.outcome = PstOutcome::Found;
      verdict.tau = tau;
      return verdict;
    }
  }
  verdict.outcome = verdict.period ? PstOutcome::AbsentWithinPeriod : PstOutcome::Inconclusive;
  return verdict;
}

}  // namespace groverwalk

#endif  // GROVERWALK_CHEBYSHEV_HPP
