#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "groverwalk/chebyshev.hpp"
#include "groverwalk/graph.hpp"

using namespace groverwalk;

TEST_CASE("chebyshev vectors follow the polynomial definition") {
  const Eigen::MatrixXd p = discriminant(Graph::cycle(5)).P;
  const int n = 5;
  REQUIRE((chebyshev_vector(p, 0, 0) - Eigen::VectorXd::Unit(n, 0)).norm() < 1e-15);
  REQUIRE((chebyshev_vector(p, 0, 1) - p.col(0)).norm() < 1e-15);
  const Eigen::MatrixXd t2 = 2.0 * p * p - Eigen::MatrixXd::Identity(n, n);
  REQUIRE((chebyshev_vector(p, 2, 2) - t2.col(2)).norm() < 1e-14);
  const Eigen::MatrixXd t3 = 2.0 * p * t2 - p;
  REQUIRE((chebyshev_vector(p, 1, 3) - t3.col(1)).norm() < 1e-14);

  REQUIRE_THROWS_AS(chebyshev_vector(p, -1, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(chebyshev_vector(p, 5, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(chebyshev_vector(p, 0, -1), std::invalid_argument);
}

TEST_CASE("fidelities never exceed one") {
  for (const Graph& g : {Graph::cycle(6), Graph::petersen(), Graph::path(4)}) {
    const Eigen::MatrixXd p = discriminant(g).P;
    for (long m = 0; m <= 40; ++m)
      for (int v = 0; v < g.vertex_count(); ++v)
        REQUIRE(transfer_fidelity(p, 0, v, m) <= 1.0 + 1e-12);
  }
}

TEST_CASE("fidelity sweep bookkeeping") {
  const Eigen::MatrixXd p = discriminant(Graph::cycle(4)).P;
  const FidelityTrace trace = fidelity_sweep(p, 0, 2, 10, /*retain_samples=*/true);
  REQUIRE(trace.samples.size() == 11);
  REQUIRE(trace.samples[0] == 0.0);                     // stays at the source
  REQUIRE(std::abs(trace.samples[2] - 1.0) < 1e-12);    // perfect hit at tau = 2
  REQUIRE(trace.max_fidelity == trace.samples[trace.argmax]);
  for (double f : trace.samples) REQUIRE(f <= trace.max_fidelity);
  // Earliest argmax wins.
  REQUIRE(trace.argmax == 2);

  const FidelityTrace empty = fidelity_sweep(p, 0, 2, 0);
  REQUIRE(empty.max_fidelity == 0.0);
  REQUIRE(empty.samples.empty());  // samples only on request

  REQUIRE_THROWS_AS(fidelity_sweep(p, 0, 2, -1), std::invalid_argument);
  REQUIRE_THROWS_AS(fidelity_sweep(p, 0, 7, 5), std::invalid_argument);
}

TEST_CASE("arc evolution preserves norm and matches the recurrence") {
  const Graph g = Graph::petersen();
  const WalkMatrices w = walk_matrices(g);
  const Eigen::MatrixXd p = discriminant(g).P;
  for (long tau : {0L, 1L, 5L, 12L}) {
    const Eigen::VectorXd state = evolve_state(w, 3, tau);
    REQUIRE(std::abs(state.norm() - 1.0) < 1e-12);
    const Eigen::VectorXd projected = w.N * state;
    const Eigen::VectorXd direct = chebyshev_vector(p, 3, tau);
    REQUIRE((projected - direct).cwiseAbs().maxCoeff() < 1e-12);
  }
  REQUIRE_THROWS_AS(evolve_state(w, 10, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(evolve_state(w, 0, -2), std::invalid_argument);
}

TEST_CASE("intertwining residual stays tiny") {
  REQUIRE(verify_intertwine(Graph::cycle(6), 64) < 1e-10);
  REQUIRE(verify_intertwine(Graph::complete(5), 64) < 1e-10);
  REQUIRE(verify_intertwine(Graph::petersen(), 64) < 1e-10);
  REQUIRE_THROWS_AS(verify_intertwine(Graph::cycle(3), -1), std::invalid_argument);
}

TEST_CASE("period detection on cycles") {
  for (int n = 3; n <= 8; ++n) {
    const auto period = detect_period(Graph::cycle(n));
    REQUIRE(period.has_value());
    REQUIRE(*period == n);
  }
  // A tight bound below the true period yields nothing.
  REQUIRE_FALSE(detect_period(Graph::cycle(8), 7).has_value());
}

TEST_CASE("perfect transfer scan on known cases") {
  const PstVerdict c4 = pst_check(Graph::cycle(4), 0, 2);
  REQUIRE(c4.outcome == PstOutcome::Found);
  REQUIRE(c4.tau == 2);
  REQUIRE(c4.best_fidelity >= 1.0 - 1e-9);

  const PstVerdict c6 = pst_check(Graph::cycle(6), 0, 3);
  REQUIRE(c6.outcome == PstOutcome::Found);
  REQUIRE(c6.tau == 3);

  // The 3-vertex path swaps its two leaves in two steps.
  const PstVerdict p3 = pst_check(Graph::path(3), 0, 2);
  REQUIRE(p3.outcome == PstOutcome::Found);
  REQUIRE(p3.tau == 2);

  const PstVerdict c5 = pst_check(Graph::cycle(5), 0, 2);
  REQUIRE(c5.outcome == PstOutcome::AbsentWithinPeriod);
  REQUIRE(c5.period.has_value());
  REQUIRE(*c5.period == 5);
  REQUIRE(c5.best_fidelity < 1.0 - 1e-9);

  REQUIRE_THROWS_AS(pst_check(Graph::cycle(5), 2, 2), std::invalid_argument);
}

TEST_CASE("hit threshold is pinned") {
  REQUIRE(kPstHitThreshold == 1.0 - 1e-9);
}
