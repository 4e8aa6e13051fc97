#ifndef GROVERWALK_UNITARY_CAYLEY_HPP
#define GROVERWALK_UNITARY_CAYLEY_HPP

#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "groverwalk/cayley.hpp"
#include "groverwalk/number_theory.hpp"
#include "groverwalk/rational.hpp"

namespace groverwalk {

// Units mod n, the connection set of the unitary Cayley graph on Z_n.
inline std::vector<int> unitary_connection_set(int n) {
  if (n < 2) throw std::invalid_argument("unitary connection set: n must be >= 2");
  std::vector<int> s;
  for (int k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) s.push_back(k);
  return s;
}

// Discriminant eigenvalues mu_j = c(j, n) / phi(n) = mobius(t)/phi(t) with
// t = n/gcd(n, j), indexed by j = 0..n-1.
inline std::vector<Rational> unitary_spectrum(int n) {
  if (n < 2) throw std::invalid_argument("unitary spectrum: n must be >= 2");
  const long long phi = totient(n);
  std::vector<Rational> mu;
  mu.reserve(n);
  for (int j = 0; j < n; ++j) mu.emplace_back(ramanujan_sum(j, n), phi);
  return mu;
}

inline CayleyGraph make_unitary(int n) {
  CayleyGraph cg = make_circulant(n, unitary_connection_set(n));
  cg.exact_mu = unitary_spectrum(n);
  return cg;
}

// Smallest odd index a and even index b with mu_a = mu_b = 0.  Such a pair
// straddles the sign classes of the antipodal pair (0, n/2) and forces the
// parity test to fail, so it certifies the absence of state transfer.
inline std::optional<std::pair<int, int>> zero_pair_obstruction(int n) {
  const auto mu = unitary_spectrum(n);
  std::optional<int> odd, even;
  for (int j = 1; j < n; ++j) {
    if (mu[j] != Rational(0)) continue;
    if (j % 2 == 1 && !odd) odd = j;
    if (j % 2 == 0 && !even) even = j;
  }
  if (odd && even) return std::make_pair(*odd, *even);
  return std::nullopt;
}

struct UnitaryPgstResult {
  int n = 0;
  bool pgst = false;
  // The only possible partner of vertex 0; present exactly when pgst holds.
  std::optional<int> partner;
};

// Closed form: state transfer exists on the unitary Cayley graph of Z_n
// exactly when n = 2m or n = 4m with m odd and squarefree, always between
// antipodal vertices.
inline UnitaryPgstResult unitary_decide_pgst(int n) {
  if (n < 2) throw std::invalid_argument("unitary_decide_pgst: n must be >= 2");
  UnitaryPgstResult r;
  r.n = n;
  int alpha = 0;
  long long m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++alpha;
  }
  r.pgst = (alpha == 1 || alpha == 2) && is_squarefree(m);
  if (r.pgst) r.partner = n / 2;
  return r;
}

// Perfect transfer at a single exact step happens only for these four.
inline bool unitary_decide_pst(int n) {
  if (n < 2) throw std::invalid_argument("unitary_decide_pst: n must be >= 2");
  return n == 2 || n == 4 || n == 6 || n == 12;
}

}  // namespace groverwalk

#endif  // GROVERWALK_UNITARY_CAYLEY_HPP
