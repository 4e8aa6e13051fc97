#ifndef GROVERWALK_DETAIL_LLL_HPP
#define GROVERWALK_DETAIL_LLL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace groverwalk::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::mpfr_float;

// Sets the working decimal precision for newly created BigFloat values and
// restores the previous one on scope exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10);
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// All-integer LLL reduction (delta = 3/4) of the row basis, in place.
// Gram-Schmidt data is carried as the integers d_i and lambda_{i,j} with
// mu_{i,j} = lambda_{i,j}/d_j, so no rounding enters the bookkeeping.
inline void lll_reduce(std::vector<std::vector<BigInt>>& b) {
  const int n = static_cast<int>(b.size());
  if (n == 0) return;
  const std::size_t m = b[0].size();
  for (const auto& row : b)
    if (row.size() != m) throw std::invalid_argument("lll_reduce: ragged basis");

  auto dot = [&](int i, int j) {
    BigInt s = 0;
    for (std::size_t c = 0; c < m; ++c) s += b[i][c] * b[j][c];
    return s;
  };

  // 1-based indexing to match the usual statement of the algorithm.
  std::vector<BigInt> d(n + 1);
  std::vector<std::vector<BigInt>> lam(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
  d[0] = 1;

  auto floordiv = [](const BigInt& a, const BigInt& bb) {
    BigInt q = a / bb, r = a % bb;
    if (r != 0 && ((r < 0) != (bb < 0))) --q;
    return q;
  };

  auto redi = [&](int k, int l) {
    if (2 * abs(lam[k][l]) <= d[l]) return;
    const BigInt q = floordiv(2 * lam[k][l] + d[l], 2 * d[l]);  // nearest integer to lam/d
    for (std::size_t c = 0; c < m; ++c) b[k - 1][c] -= q * b[l - 1][c];
    lam[k][l] -= q * d[l];
    for (int i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
  };

  int kmax = 1;
  d[1] = dot(0, 0);
  int k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 1; j <= k; ++j) {
        BigInt u = dot(k - 1, j - 1);
        for (int i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (d[k] == 0) throw std::invalid_argument("lll_reduce: dependent input rows");
        }
      }
    }
    for (;;) {
      redi(k, k - 1);
      if (4 * d[k] * d[k - 2] < 3 * d[k - 1] * d[k - 1] - 4 * lam[k][k - 1] * lam[k][k - 1]) {
        // Lovasz test failed: swap rows k-1 and k, patch the integer GS data.
        std::swap(b[k - 1], b[k - 2]);
        for (int j = 1; j <= k - 2; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        const BigInt lbar = lam[k][k - 1];
        const BigInt bnew = (d[k - 2] * d[k] + lbar * lbar) / d[k - 1];
        for (int i = k + 1; i <= kmax; ++i) {
          const BigInt t = lam[i][k];
          lam[i][k] = (d[k] * lam[i][k - 1] - lbar * t) / d[k - 1];
          lam[i][k - 1] = (bnew * t + lbar * lam[i][k]) / d[k];
        }
        d[k - 1] = bnew;
        k = std::max(2, k - 1);
      } else {
        for (int l = k - 2; l >= 1; --l) redi(k, l);
        ++k;
        break;
      }
    }
  }
}

// Integer combinations ell with ell . xs close to a multiple of the modulus.
// The classic embedding: rows (e_i | round(K x_i)) plus (0 | round(K modulus))
// are LLL-reduced; rows whose scaled column nearly cancels are candidate
// relations.  Completeness is not guaranteed, which is why callers treat the
// result as one-sided evidence.
inline std::vector<std::vector<long long>> relation_candidates(
    const std::vector<BigFloat>& xs, const BigFloat& modulus, int digits,
    long long coeff_bound) {
  const int dim = static_cast<int>(xs.size());
  if (dim == 0) return {};

  BigFloat scale = pow(BigFloat(10), digits);
  auto scaled = [&](const BigFloat& x) {
    BigFloat t = x * scale;
    return BigInt(t.convert_to<BigInt>());
  };

  std::vector<std::vector<BigInt>> rows(dim + 1, std::vector<BigInt>(dim + 1, BigInt(0)));
  for (int i = 0; i < dim; ++i) {
    rows[i][i] = 1;
    rows[i][dim] = scaled(xs[i]);
  }
  rows[dim][dim] = scaled(modulus);
  lll_reduce(rows);

  // Residual threshold 10^(digits/2): true relations land far below it,
  // generic non-relations far above.
  BigInt residual_cap = 1;
  for (int i = 0; i < digits / 2; ++i) residual_cap *= 10;

  std::vector<std::vector<long long>> out;
  for (const auto& row : rows) {
    if (abs(row[dim]) > residual_cap) continue;
    bool nonzero = false, bounded = true;
    for (int i = 0; i < dim; ++i) {
      if (row[i] != 0) nonzero = true;
      if (abs(row[i]) > coeff_bound) bounded = false;
    }
    if (!nonzero || !bounded) continue;
    std::vector<long long> ell(dim);
    for (int i = 0; i < dim; ++i) ell[i] = row[i].convert_to<long long>();
    // Normalize the sign so the first nonzero coefficient is positive.
    for (int i = 0; i < dim; ++i) {
      if (ell[i] == 0) continue;
      if (ell[i] < 0)
        for (auto& x : ell) x = -x;
      break;
    }
    out.push_back(std::move(ell));
  }
  return out;
}

}  // namespace groverwalk::detail

#endif  // GROVERWALK_DETAIL_LLL_HPP
