#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "groverwalk/cayley.hpp"
#include "groverwalk/graph.hpp"
#include "groverwalk/unitary_cayley.hpp"

using namespace groverwalk;

TEST_CASE("abelian group arithmetic and indexing") {
  const AbelianGroup z12({12});
  CHECK(z12.order() == 12);
  CHECK(z12.exponent() == 12);
  CHECK(z12.element_order({6}) == 2);
  CHECK(z12.element_order({4}) == 3);
  CHECK(z12.element_order({1}) == 12);
  CHECK(z12.element_order({0}) == 1);

  const AbelianGroup z2z4({2, 4});
  CHECK(z2z4.order() == 8);
  CHECK(z2z4.exponent() == 4);
  CHECK(z2z4.element_order({1, 0}) == 2);
  CHECK(z2z4.element_order({0, 1}) == 4);
  CHECK(z2z4.element_order({1, 2}) == 2);
  CHECK(z2z4.element_order({1, 1}) == 4);

  for (long long idx = 0; idx < z2z4.order(); ++idx)
    CHECK(z2z4.index_of(z2z4.element(idx)) == idx);

  CHECK(z2z4.add({1, 3}, {1, 2}) == AbelianGroup::Elem{0, 1});
  CHECK(z2z4.neg({1, 3}) == AbelianGroup::Elem{1, 1});
  CHECK(z2z4.sub({0, 1}, {1, 3}) == AbelianGroup::Elem{1, 2});

  REQUIRE_THROWS_AS(AbelianGroup({}), std::invalid_argument);
  REQUIRE_THROWS_AS(AbelianGroup({3, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(z12.validate({0, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(z12.validate({12}), std::invalid_argument);
  REQUIRE_THROWS_AS(z12.element(12), std::invalid_argument);
}

TEST_CASE("characters are orthogonal and match their exact phases") {
  const AbelianGroup g({6});
  for (long long a = 0; a < 6; ++a) {
    for (long long c = 0; c < 6; ++c) {
      std::complex<double> s = 0.0;
      for (long long b = 0; b < 6; ++b)
        s += character_value(g, g.element(a), g.element(b)) *
             std::conj(character_value(g, g.element(c), g.element(b)));
      CHECK(std::abs(s - (a == c ? 6.0 : 0.0)) < 1e-12);
    }
  }

  const AbelianGroup h({2, 6});
  for (long long a = 0; a < h.order(); ++a) {
    for (long long b = 0; b < h.order(); ++b) {
      const auto ea = h.element(a);
      const auto eb = h.element(b);
      const long long t = character_phase(h, ea, eb);
      CHECK(t >= 0);
      CHECK(t < h.exponent());
      const auto predicted =
          std::polar(1.0, 2.0 * M_PI * static_cast<double>(t) / h.exponent());
      CHECK(std::abs(predicted - character_value(h, ea, eb)) < 1e-12);
    }
  }
}

TEST_CASE("connection sets are validated") {
  const AbelianGroup z5({5});
  REQUIRE_THROWS_AS(validate_connection_set(z5, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(validate_connection_set(z5, {{1}, {1}, {4}}), std::invalid_argument);
  REQUIRE_THROWS_AS(validate_connection_set(z5, {{0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(validate_connection_set(z5, {{1}}), std::invalid_argument);  // missing -1

  const AbelianGroup z4({4});
  // {2} is symmetric but only reaches the even residues.
  REQUIRE_THROWS_AS(validate_connection_set(z4, {{2}}), std::invalid_argument);
  REQUIRE_NOTHROW(validate_connection_set(z4, {{1}, {3}}));
}

TEST_CASE("circulant construction matches the plain cycle") {
  const CayleyGraph cg = make_circulant(6, {-1, 1});  // negatives normalize mod n
  const Graph cycle = Graph::cycle(6);
  CHECK((cg.graph.adjacency() - cycle.adjacency()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(cg.connection.size() == 2);

  // 13 folds onto 1 mod 12, so the set degenerates.
  REQUIRE_THROWS_AS(make_circulant(12, {1, 13}), std::invalid_argument);
}

TEST_CASE("product family carries its closed-form spectrum") {
  const CayleyGraph cg = make_product_family(2, 2);
  REQUIRE(cg.exact_mu.has_value());
  const std::vector<Rational> expected = {Rational(1), Rational(0), Rational(-1), Rational(0)};
  CHECK(*cg.exact_mu == expected);
  CHECK(cg.graph.vertex_count() == 4);
  CHECK(cg.graph.edge_count() == 4);  // the 4-cycle in disguise

  // Closed form against the numeric discriminant spectrum.
  const CayleyGraph big = make_product_family(4, 3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(discriminant(big.graph).P);
  std::vector<double> exact;
  for (const auto& mu : *big.exact_mu) exact.push_back(to_double(mu));
  std::sort(exact.begin(), exact.end());
  for (int i = 0; i < static_cast<int>(exact.size()); ++i)
    CHECK(std::abs(solver.eigenvalues()(i) - exact[i]) < 1e-10);

  REQUIRE_THROWS_AS(make_product_family(1, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(make_product_family(3, 1), std::invalid_argument);
}

TEST_CASE("cayley eigenvalues and eigenvectors") {
  const CayleyGraph c5 = make_circulant(5, {1, 4});
  for (long long a = 0; a < 5; ++a) {
    const double expected = std::cos(2.0 * M_PI * static_cast<double>(a) / 5.0);
    CHECK(std::abs(cayley_eigenvalue(c5, a) - expected) < 1e-12);
    const CosineSum cs = eigenvalue_cosine_sum(c5, a);
    CHECK(cs.scale == 2);
    CHECK(cs.denom == 5);
    double from_sum = 0.0;
    for (long long t : cs.numerators) from_sum += std::cos(2.0 * M_PI * t / cs.denom);
    CHECK(std::abs(from_sum / cs.scale - expected) < 1e-12);
  }

  const CayleyGraph c7 = make_circulant(7, {1, 6, 2, 5});
  const Eigen::MatrixXd p = discriminant(c7.graph).P;
  for (long long a = 0; a < 7; ++a) {
    const Eigen::VectorXcd psi = cayley_eigenvector(c7, a);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
    CHECK((p * psi - cayley_eigenvalue(c7, a) * psi).norm() < 1e-12);
  }
}

TEST_CASE("order-two elements enumerate involutions") {
  CHECK(order_two_elements(AbelianGroup({12})) ==
        std::vector<AbelianGroup::Elem>{{6}});
  CHECK(order_two_elements(AbelianGroup({3})).empty());

  const auto invols = order_two_elements(AbelianGroup({2, 6}));
  REQUIRE(invols.size() == 3);
  CHECK(std::count(invols.begin(), invols.end(), AbelianGroup::Elem{0, 3}) == 1);
  CHECK(std::count(invols.begin(), invols.end(), AbelianGroup::Elem{1, 0}) == 1);
  CHECK(std::count(invols.begin(), invols.end(), AbelianGroup::Elem{1, 3}) == 1);
}

TEST_CASE("sign partition splits the dual group by parity") {
  const AbelianGroup z8({8});
  const SignPartition sp = sign_partition(z8, {4});
  CHECK(sp.gamma0 == std::vector<long long>{0, 2, 4, 6});
  CHECK(sp.gamma1 == std::vector<long long>{1, 3, 5, 7});

  REQUIRE_THROWS_AS(sign_partition(z8, {2}), std::invalid_argument);  // order 4
  REQUIRE_THROWS_AS(sign_partition(z8, {0}), std::invalid_argument);  // identity
}

TEST_CASE("angle slots classify the closed-form spectrum") {
  const CayleyGraph g8 = make_unitary(8);
  const auto slots = cayley_angle_slots(g8);
  REQUIRE(slots.size() == 8);
  CHECK(slots[0].kind == AngleKind::RationalPi);
  CHECK(slots[0].pi_num == 0);
  CHECK(slots[4].kind == AngleKind::RationalPi);
  CHECK(slots[4].pi_num == 1);
  CHECK(slots[4].pi_den == 1);
  for (int j : {1, 2, 3, 5, 6, 7}) {
    CHECK(slots[j].kind == AngleKind::RationalPi);
    CHECK(slots[j].pi_num == 1);
    CHECK(slots[j].pi_den == 2);
  }
}

TEST_CASE("group-element state transfer check") {
  SECTION("parity violation with the canonical witness") {
    const PgstVerdict v = pgst_check(make_unitary(8), 0, 4);
    CHECK(v.outcome == PgstOutcome::No);
    CHECK(v.mode == LatticeMode::Exact);
    CHECK(v.certificate.type == CertificateType::ParityViolation);
    CHECK(v.certificate.relation ==
          std::vector<long long>{0, 1, 3, 0, 0, 0, 0, 0});
    CHECK(reverify_certificate(v));
  }

  SECTION("transfer across the half-way point of Z_12") {
    const PgstVerdict v = pgst_check(make_unitary(12), 0, 6);
    CHECK(v.outcome == PgstOutcome::Yes);
    CHECK(v.mode == LatticeMode::Exact);
    CHECK(v.certificate.type == CertificateType::LatticeAllEven);
    CHECK(reverify_certificate(v));
  }

  SECTION("difference of the wrong order is rejected outright") {
    const PgstVerdict v = pgst_check(make_circulant(9, {1, 8}), 0, 3);
    CHECK(v.outcome == PgstOutcome::No);
    CHECK(v.certificate.type == CertificateType::OrderObstruction);
    CHECK(v.certificate.element_order == 3);
    CHECK(v.certificate.witness_element == AbelianGroup::Elem{3});
  }

  SECTION("argument validation") {
    const CayleyGraph cg = make_circulant(6, {1, 5});
    REQUIRE_THROWS_AS(pgst_check(cg, 2, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(pgst_check(cg, 0, 6), std::invalid_argument);
    REQUIRE_THROWS_AS(pgst_check(cg, -1, 2), std::invalid_argument);
  }
}
