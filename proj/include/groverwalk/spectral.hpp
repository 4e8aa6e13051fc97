#ifndef GROVERWALK_SPECTRAL_HPP
#define GROVERWALK_SPECTRAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace groverwalk {

// Distinct eigenvalues (descending) with orthogonal spectral projectors.
// Numerically close eigenvalues are merged into one cluster; merging is
// refused when a chain of near ties spreads wider than the tolerance,
// since then no grouping is defensible.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;           // distinct, descending
  std::vector<int> multiplicities;
  std::vector<Eigen::MatrixXd> projectors;   // same order as eigenvalues
  double group_tol = 0.0;
  double min_gap = 0.0;  // smallest gap between adjacent distinct eigenvalues
};

inline SpectralDecomposition decompose(const Eigen::MatrixXd& p, double group_tol = 1e-9) {
  if (p.rows() != p.cols()) throw std::invalid_argument("decompose: matrix not square");
  if ((p - p.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("decompose: matrix not symmetric");
  if (group_tol <= 0) throw std::invalid_argument("decompose: group_tol must be positive");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p);
  if (solver.info() != Eigen::Success) throw std::runtime_error("decompose: eigensolver failed");
  const Eigen::VectorXd vals = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd vecs = solver.eigenvectors();
  const int n = static_cast<int>(vals.size());

  SpectralDecomposition dec;
  dec.group_tol = group_tol;
  int lo = 0;
  std::vector<std::pair<int, int>> clusters;  // [lo, hi) index ranges
  for (int i = 1; i <= n; ++i) {
    if (i == n || vals(i) - vals(i - 1) > group_tol) {
      if (vals(i - 1) - vals(lo) > group_tol)
        throw std::runtime_error("decompose: eigenvalue cluster wider than group_tol; "
                                 "grouping ambiguous at this tolerance");
      clusters.emplace_back(lo, i);
      lo = i;
    }
  }
  // Descending output order.
  for (auto it = clusters.rbegin(); it != clusters.rend(); ++it) {
    const auto [a, b] = *it;
    const Eigen::MatrixXd block = vecs.middleCols(a, b - a);
    dec.eigenvalues.push_back(vals.segment(a, b - a).mean());
    dec.multiplicities.push_back(b - a);
    dec.projectors.push_back(block * block.transpose());
  }
  dec.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < dec.eigenvalues.size(); ++i) {
    dec.min_gap = std::min(dec.min_gap, dec.eigenvalues[i - 1] - dec.eigenvalues[i]);
  }
  return dec;
}

// Indices (into dec.eigenvalues) whose projector sees vertex u.
inline std::vector<int> eigenvalue_support(const SpectralDecomposition& dec, int u,
                                           double tol = 1e-8) {
  if (!dec.projectors.empty() && (u < 0 || u >= dec.projectors.front().cols()))
    throw std::invalid_argument("eigenvalue_support: vertex out of range");
  std::vector<int> out;
  for (std::size_t i = 0; i < dec.projectors.size(); ++i) {
    if (dec.projectors[i].col(u).norm() > tol) out.push_back(static_cast<int>(i));
  }
  return out;
}

// Outcome of testing E_mu e_u = +- E_mu e_v across the spectrum.  Valid
// means supports agree and every shared projector column pair matches up
// to a global sign; that sign splits the support into plus and minus.
struct SupportPartition {
  bool valid = false;
  enum class Failure { None, SupportMismatch, SignMismatch } failure = Failure::None;
  std::vector<int> support;  // indices into dec.eigenvalues, u and v alike
  std::vector<int> plus;
  std::vector<int> minus;
  int violating = -1;        // eigenvalue index on failure
};

inline SupportPartition sign_pattern(const SpectralDecomposition& dec, int u, int v,
                                     double tol = 1e-8) {
  if (u == v) throw std::invalid_argument("sign_pattern: vertices must differ");
  if (!dec.projectors.empty()) {
    const auto n = dec.projectors.front().cols();
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("sign_pattern: vertex out of range");
  }
  SupportPartition sp;
  for (std::size_t i = 0; i < dec.projectors.size(); ++i) {
    const Eigen::VectorXd cu = dec.projectors[i].col(u);
    const Eigen::VectorXd cv = dec.projectors[i].col(v);
    const bool in_u = cu.norm() > tol;
    const bool in_v = cv.norm() > tol;
    if (!in_u && !in_v) continue;
    if (in_u != in_v) {
      sp.failure = SupportPartition::Failure::SupportMismatch;
      sp.violating = static_cast<int>(i);
      return sp;
    }
    sp.support.push_back(static_cast<int>(i));
    if ((cu - cv).norm() <= tol) {
      sp.plus.push_back(static_cast<int>(i));
    } else if ((cu + cv).norm() <= tol) {
      sp.minus.push_back(static_cast<int>(i));
    } else {
      sp.failure = SupportPartition::Failure::SignMismatch;
      sp.violating = static_cast<int>(i);
      return sp;
    }
  }
  sp.valid = true;
  return sp;
}

}  // namespace groverwalk

#endif  // GROVERWALK_SPECTRAL_HPP
