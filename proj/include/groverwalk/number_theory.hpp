#ifndef GROVERWALK_NUMBER_THEORY_HPP
#define GROVERWALK_NUMBER_THEORY_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace groverwalk {

// Trial-division factorization, (prime, exponent) pairs with primes increasing.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int mobius(long long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
  int sign = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
    (void)p;
  }
  return sign;
}

inline long long totient(long long n) {
  if (n < 1) throw std::invalid_argument("totient: n must be >= 1");
  long long phi = n;
  for (const auto& [p, e] : factorize(n)) {
    phi -= phi / p;
    (void)e;
  }
  return phi;
}

inline bool is_squarefree(long long n) { return mobius(n) != 0; }

inline std::vector<long long> divisors(long long n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<long long> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    long long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Ramanujan sum c(j, n), arithmetic form: mu(t) * phi(n) / phi(t) with
// t = n / gcd(n, j).  This is the production evaluation; the cosine sum
// below exists as an independent oracle.
inline long long ramanujan_sum(long long j, long long n) {
  if (n < 1) throw std::invalid_argument("ramanujan_sum: n must be >= 1");
  if (j < 0) j = ((j % n) + n) % n;
  const long long t = n / std::gcd(n, j);
  const int mu = mobius(t);
  if (mu == 0) return 0;
  return mu * (totient(n) / totient(t));
}

// c(j, n) = sum over units k mod n of cos(2*pi*j*k/n).
inline double ramanujan_sum_trig(long long j, long long n) {
  if (n < 1) throw std::invalid_argument("ramanujan_sum_trig: n must be >= 1");
  const double w = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n);
  double s = 0.0;
  for (long long k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) s += std::cos(w * static_cast<double>(k));
  }
  return s;
}

// Indices 0..n-1 partitioned by t = n / gcd(n, j); class t has size phi(t).
struct GcdClassTable {
  long long n = 0;
  std::map<long long, std::vector<long long>> classes;  // divisor t -> sorted j
};

inline GcdClassTable gcd_classes(long long n) {
  if (n < 1) throw std::invalid_argument("gcd_classes: n must be >= 1");
  GcdClassTable table;
  table.n = n;
  for (long long j = 0; j < n; ++j) {
    table.classes[n / std::gcd(n, j)].push_back(j);
  }
  return table;
}

// Largest squarefree divisor with the same prime support parity, i.e. the
// product of primes appearing to an odd power.
inline long long squarefree_part(long long n) {
  if (n < 1) throw std::invalid_argument("squarefree_part: n must be >= 1");
  long long sf = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2) sf *= p;
  }
  return sf;
}

}  // namespace groverwalk

#endif  // GROVERWALK_NUMBER_THEORY_HPP
