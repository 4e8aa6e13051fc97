#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "groverwalk/graph.hpp"
#include "groverwalk/unitary_cayley.hpp"

using namespace groverwalk;

TEST_CASE("unitary connection set lists the units") {
  CHECK(unitary_connection_set(12) == std::vector<int>{1, 5, 7, 11});
  CHECK(unitary_connection_set(2) == std::vector<int>{1});
  CHECK(unitary_connection_set(7) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(static_cast<long long>(unitary_connection_set(100).size()) == totient(100));
  REQUIRE_THROWS_AS(unitary_connection_set(1), std::invalid_argument);
}

TEST_CASE("unitary spectrum closed form") {
  const std::vector<Rational> expected = {Rational(1),     Rational(1, 2), Rational(-1, 2),
                                          Rational(-1),    Rational(-1, 2), Rational(1, 2)};
  CHECK(unitary_spectrum(6) == expected);
  REQUIRE_THROWS_AS(unitary_spectrum(1), std::invalid_argument);

  // The closed form must agree with the numeric discriminant spectrum.
  for (int n : {5, 8, 10, 15}) {
    const CayleyGraph cg = make_unitary(n);
    REQUIRE(cg.exact_mu.has_value());
    std::vector<double> exact;
    for (const auto& mu : *cg.exact_mu) exact.push_back(to_double(mu));
    std::sort(exact.begin(), exact.end());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(discriminant(cg.graph).P);
    for (int i = 0; i < n; ++i) CHECK(std::abs(solver.eigenvalues()(i) - exact[i]) < 1e-10);
  }
}

TEST_CASE("zero pairs straddling the parity classes") {
  for (int n : {8, 16, 18, 24, 54}) {
    const auto pair = zero_pair_obstruction(n);
    REQUIRE(pair.has_value());
    const auto mu = unitary_spectrum(n);
    CHECK(pair->first % 2 == 1);
    CHECK(pair->second % 2 == 0);
    CHECK(mu[pair->first] == Rational(0));
    CHECK(mu[pair->second] == Rational(0));
  }
  for (int n : {2, 4, 6, 10, 12, 20, 30}) CHECK_FALSE(zero_pair_obstruction(n).has_value());
}

TEST_CASE("state transfer classification for unitary graphs") {
  const std::set<int> expect_pgst = {2, 4, 6, 10, 12, 14, 20, 22, 26, 28, 30};
  for (int n = 2; n <= 30; ++n) {
    const UnitaryPgstResult r = unitary_decide_pgst(n);
    CHECK(r.n == n);
    CHECK(r.pgst == (expect_pgst.count(n) > 0));
    if (r.pgst) {
      REQUIRE(r.partner.has_value());
      CHECK(*r.partner == n / 2);
    } else {
      CHECK_FALSE(r.partner.has_value());
    }
  }
  REQUIRE_THROWS_AS(unitary_decide_pgst(1), std::invalid_argument);

  // A zero pair across the parity classes always blocks transfer.
  for (int n = 2; n <= 40; ++n)
    if (zero_pair_obstruction(n)) CHECK_FALSE(unitary_decide_pgst(n).pgst);
}

TEST_CASE("closed form agrees with the group-element pipeline") {
  for (int n : {4, 6, 8, 10}) {
    const PgstVerdict v = pgst_check(make_unitary(n), 0, n / 2);
    const bool expect = unitary_decide_pgst(n).pgst;
    CHECK(v.outcome == (expect ? PgstOutcome::Yes : PgstOutcome::No));
  }
}

TEST_CASE("perfect transfer happens for exactly four orders") {
  const std::set<int> expect_pst = {2, 4, 6, 12};
  for (int n = 2; n <= 30; ++n) CHECK(unitary_decide_pst(n) == (expect_pst.count(n) > 0));
  REQUIRE_THROWS_AS(unitary_decide_pst(0), std::invalid_argument);
  // Perfect transfer is a special case of pretty good transfer.
  for (int n = 2; n <= 100; ++n)
    if (unitary_decide_pst(n)) CHECK(unitary_decide_pgst(n).pgst);
}
