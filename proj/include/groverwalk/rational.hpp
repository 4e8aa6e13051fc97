#ifndef GROVERWALK_RATIONAL_HPP
#define GROVERWALK_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace groverwalk {

using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

// Best rational approximation with denominator <= max_den, by continued
// fractions.  Returns nothing when even the best candidate misses by more
// than tol; used to recognize eigenvalues that are exactly rational but
// arrive through floating-point decompositions.
inline std::optional<Rational> snap_to_rational(double x, long long max_den = 128,
                                                double tol = 1e-9) {
  if (!(max_den >= 1)) throw std::invalid_argument("snap_to_rational: max_den must be >= 1");
  if (!std::isfinite(x)) return std::nullopt;

  // Convergents p/q of the continued fraction of x.
  long long p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
  long long p1 = static_cast<long long>(std::floor(x)), q1 = 1;
  double frac = x - std::floor(x);
  long long best_p = p1, best_q = 1;
  for (int it = 0; it < 64 && q1 <= max_den; ++it) {
    best_p = p1;
    best_q = q1;
    if (frac < 1e-15) break;
    frac = 1.0 / frac;
    const double af = std::floor(frac);
    if (af > 4e18) break;
    const long long a = static_cast<long long>(af);
    frac -= af;
    const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;  // overflow or past the bound
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  const double err = std::abs(x - static_cast<double>(best_p) / static_cast<double>(best_q));
  if (err <= tol) return Rational(best_p, best_q);
  return std::nullopt;
}

}  // namespace groverwalk

#endif  // GROVERWALK_RATIONAL_HPP
