#ifndef GROVERWALK_RELATIONS_HPP
#define GROVERWALK_RELATIONS_HPP

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "groverwalk/detail/lll.hpp"
#include "groverwalk/number_theory.hpp"
#include "groverwalk/rational.hpp"
#include "groverwalk/spectral.hpp"

namespace groverwalk {

// How an eigenvalue's arccos relates to pi.  RationalPi covers exactly the
// five rational cosines whose angle is a rational multiple of pi (Niven);
// StructuredIrrational covers mu = +-1/d, d >= 3, whose angles admit the
// linear-independence arguments the exact lattice path relies on.
enum class AngleKind { RationalPi, StructuredIrrational, Unclassified };
enum class IrrationalFamily { None, InverseLinear, InverseTotient };

// value = (1/scale) * sum_i cos(2 pi numerators[i] / denom); lets character
// sums be recomputed at arbitrary precision.
struct CosineSum {
  long long scale = 1;
  long long denom = 1;
  std::vector<long long> numerators;
};

struct AngleClass {
  double mu = 0.0;
  std::optional<Rational> mu_exact;
  AngleKind kind = AngleKind::Unclassified;
  int pi_num = 0;
  int pi_den = 1;  // RationalPi: theta = (pi_num/pi_den) * pi
  IrrationalFamily family = IrrationalFamily::None;
  long long base_den = 0;  // StructuredIrrational: mu = sign / base_den
  int sign = 0;
  std::optional<CosineSum> trig;

  // Angle of record for certificates.  Prefers the classified value: the raw
  // acos of a numeric eigenvalue loses half its digits near +-1 (square-root
  // singularity), which would poison re-verification of exact relations.
  double theta() const {
    if (kind == AngleKind::RationalPi) return static_cast<double>(pi_num) * M_PI / pi_den;
    if (mu_exact) return std::acos(std::clamp(to_double(*mu_exact), -1.0, 1.0));
    return std::acos(std::clamp(mu, -1.0, 1.0));
  }
};

struct SnapOptions {
  long long max_den = 128;
  double tol = 1e-9;
};

inline AngleClass classify_angle(const Rational& mu) {
  if (mu < Rational(-1) || mu > Rational(1))
    throw std::invalid_argument("classify_angle: eigenvalue outside [-1, 1]");
  AngleClass c;
  c.mu_exact = mu;
  c.mu = to_double(mu);
  const auto rational_pi = [&c](int num, int den) {
    c.kind = AngleKind::RationalPi;
    c.pi_num = num;
    c.pi_den = den;
  };
  if (mu == Rational(1)) {
    rational_pi(0, 1);
  } else if (mu == Rational(1, 2)) {
    rational_pi(1, 3);
  } else if (mu == Rational(0)) {
    rational_pi(1, 2);
  } else if (mu == Rational(-1, 2)) {
    rational_pi(2, 3);
  } else if (mu == Rational(-1)) {
    rational_pi(1, 1);
  } else if (std::abs(mu.numerator()) == 1 && mu.denominator() >= 3) {
    // Any other rational cosine has an angle that is no rational multiple
    // of pi, so RationalPi is impossible here by the Niven classification.
    c.kind = AngleKind::StructuredIrrational;
    c.sign = mu.numerator() > 0 ? 1 : -1;
    c.base_den = mu.denominator();
    c.family = c.sign < 0 ? IrrationalFamily::InverseLinear : IrrationalFamily::InverseTotient;
  } else {
    c.kind = AngleKind::Unclassified;
  }
  return c;
}

inline AngleClass classify_angle(double mu, const SnapOptions& snap = {}) {
  if (!(mu >= -1.0 - 1e-9 && mu <= 1.0 + 1e-9))
    throw std::invalid_argument("classify_angle: eigenvalue outside [-1, 1]");
  const auto exact = snap_to_rational(std::clamp(mu, -1.0, 1.0), snap.max_den, snap.tol);
  if (exact) {
    AngleClass c = classify_angle(*exact);
    c.mu = mu;  // keep the observed value; the snapped rational is the claim
    return c;
  }
  AngleClass c;
  c.mu = mu;
  c.kind = AngleKind::Unclassified;
  return c;
}

struct RelationOptions {
  int precision_digits = 200;     // working precision of the heuristic search
  long long coeff_bound = 1000000;
  double support_tol = 1e-8;
  SnapOptions snap;
};

enum class LatticeMode { Exact, Heuristic };

// Integer vectors ell with sum_i ell_i * arccos(mu_i) = 0 (mod 2 pi).
// In Exact mode `basis` generates every such vector; in Heuristic mode it
// only lists relations that were found and survived re-verification at
// doubled precision, so absence of a vector proves nothing.
struct RelationLattice {
  std::vector<AngleClass> angles;
  std::vector<std::vector<long long>> basis;
  LatticeMode mode = LatticeMode::Heuristic;
  int precision_digits = 0;
  long long coeff_bound = 0;
  int dropped_candidates = 0;  // failed verification at doubled precision
  std::vector<std::string> notes;
};

namespace detail {

// Kernel basis of { y : sum c_i y_i == 0 (mod modulus) }, modulus >= 1.
// Computed as the integer nullspace of the row (c_1 .. c_k, modulus)
// projected onto the first k coordinates; the projection is a bijection on
// the nullspace, so a basis stays a basis.
inline std::vector<std::vector<long long>> congruence_kernel(const std::vector<long long>& c,
                                                             long long modulus) {
  const int k = static_cast<int>(c.size());
  std::vector<long long> w(c);
  w.push_back(modulus);
  const int m = k + 1;

  std::vector<std::vector<long long>> null_basis;
  std::vector<long long> chain;  // combo with w . chain = running gcd
  long long g = 0;
  for (int i = 0; i < m; ++i) {
    if (w[i] == 0) {
      std::vector<long long> e(m, 0);
      e[i] = 1;
      null_basis.push_back(std::move(e));
      continue;
    }
    if (g == 0) {
      chain.assign(m, 0);
      chain[i] = 1;
      g = std::abs(w[i]);
      if (w[i] < 0) chain[i] = -1;
      continue;
    }
    // x*g + y*w[i] = g2
    long long x = 1, y = 0, a = g, b = w[i];
    {
      long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
      while (b != 0) {
        const long long q = a / b;
        std::tie(a, b) = std::make_pair(b, a - q * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
      }
      if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
      x = x0;
      y = y0;
    }
    const long long g2 = a;
    std::vector<long long> v(m, 0);
    for (int t = 0; t < m; ++t) v[t] = (w[i] / g2) * chain[t];
    v[i] -= g / g2;
    null_basis.push_back(std::move(v));
    for (int t = 0; t < m; ++t) chain[t] = x * chain[t];
    chain[i] += y;
    g = g2;
  }

  std::vector<std::vector<long long>> out;
  for (auto& v : null_basis) {
    v.pop_back();  // drop the modulus multiplier coordinate
    bool flip = false;
    for (long long t : v) {
      if (t != 0) { flip = t < 0; break; }
    }
    if (flip)
      for (auto& t : v) t = -t;
    out.push_back(std::move(v));
  }
  return out;
}

// Class/variable view of an exact angle list.
struct ExactStructure {
  struct Class {
    Rational mu{0};
    std::vector<int> slots;  // ascending
  };
  std::vector<Class> classes;              // first-occurrence order
  std::vector<int> class_of_slot;
  // congruence variables
  struct Var {
    std::vector<int> rep_slots;  // one rep (RationalPi) or two (folded +-1/d pair)
    long long coeff = 0;         // multiplied by L/pi_den already
  };
  std::vector<Var> vars;
  long long modulus = 2;
  std::vector<int> forced_zero_classes;  // one-sided irrational classes
};

inline ExactStructure build_exact_structure(const std::vector<AngleClass>& slots) {
  ExactStructure st;
  st.class_of_slot.assign(slots.size(), -1);
  std::map<std::pair<long long, long long>, int> index;
  for (int s = 0; s < static_cast<int>(slots.size()); ++s) {
    const Rational mu = *slots[s].mu_exact;
    const auto key = std::make_pair(mu.numerator(), mu.denominator());
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, static_cast<int>(st.classes.size())).first;
      st.classes.push_back({mu, {}});
    }
    st.classes[it->second].slots.push_back(s);
    st.class_of_slot[s] = it->second;
  }

  long long big_l = 1;
  for (const auto& cls : st.classes) {
    const AngleClass& a = slots[cls.slots.front()];
    if (a.kind == AngleKind::RationalPi) big_l = std::lcm(big_l, static_cast<long long>(a.pi_den));
  }
  st.modulus = 2 * big_l;

  std::map<long long, std::pair<int, int>> irr;  // base_den -> (plus class, minus class)
  for (int c = 0; c < static_cast<int>(st.classes.size()); ++c) {
    const AngleClass& a = slots[st.classes[c].slots.front()];
    if (a.kind == AngleKind::RationalPi) {
      ExactStructure::Var var;
      var.rep_slots = {st.classes[c].slots.front()};
      var.coeff = (big_l / a.pi_den) * a.pi_num;
      st.vars.push_back(std::move(var));
    } else {
      auto& entry = irr.try_emplace(a.base_den, -1, -1).first->second;
      (a.sign > 0 ? entry.first : entry.second) = c;
    }
  }
  for (const auto& [d, pm] : irr) {
    (void)d;
    if (pm.first >= 0 && pm.second >= 0) {
      // arccos(-1/d) = pi - arccos(1/d): a tied pair contributes one pi per
      // unit of the shared coefficient, and the irrational parts cancel.
      ExactStructure::Var var;
      var.rep_slots = {st.classes[pm.first].slots.front(), st.classes[pm.second].slots.front()};
      var.coeff = big_l;
      st.vars.push_back(std::move(var));
    } else {
      st.forced_zero_classes.push_back(pm.first >= 0 ? pm.first : pm.second);
    }
  }
  return st;
}

inline bool exact_member(const ExactStructure& st, const std::vector<long long>& ell) {
  std::vector<long long> totals(st.classes.size(), 0);
  for (std::size_t s = 0; s < ell.size(); ++s) totals[st.class_of_slot[s]] += ell[s];
  for (int c : st.forced_zero_classes)
    if (totals[c] != 0) return false;
  long long acc = 0;
  for (const auto& var : st.vars) {
    if (var.rep_slots.size() == 2) {
      const long long t0 = totals[st.class_of_slot[var.rep_slots[0]]];
      const long long t1 = totals[st.class_of_slot[var.rep_slots[1]]];
      if (t0 != t1) return false;
      acc += var.coeff * t0;
    } else {
      acc += var.coeff * totals[st.class_of_slot[var.rep_slots[0]]];
    }
  }
  return ((acc % st.modulus) + st.modulus) % st.modulus == 0;
}

inline detail::BigFloat high_precision_theta(const AngleClass& a) {
  using detail::BigFloat;
  if (a.mu_exact) {
    const BigFloat num(a.mu_exact->numerator());
    const BigFloat den(a.mu_exact->denominator());
    return acos(num / den);
  }
  if (a.trig) {
    const BigFloat two_pi = 2 * boost::math::constants::pi<BigFloat>();
    BigFloat s = 0;
    for (long long t : a.trig->numerators)
      s += cos(two_pi * BigFloat(t) / BigFloat(a.trig->denom));
    BigFloat mu = s / BigFloat(a.trig->scale);
    if (mu > 1) mu = 1;
    if (mu < -1) mu = -1;
    return acos(mu);
  }
  return acos(BigFloat(a.mu));
}

inline int source_digits(const AngleClass& a) {
  return (a.mu_exact || a.trig) ? INT_MAX : 15;
}

}  // namespace detail

// Residual of the angle-sum condition in double arithmetic: distance from
// sum_i ell_i theta_i to the nearest multiple of 2 pi.
inline double relation_residual(const std::vector<double>& thetas,
                                const std::vector<long long>& ell) {
  if (thetas.size() != ell.size())
    throw std::invalid_argument("relation_residual: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < ell.size(); ++i) s += static_cast<double>(ell[i]) * thetas[i];
  const double two_pi = 2.0 * M_PI;
  const double k = std::round(s / two_pi);
  return std::abs(s - k * two_pi);
}

inline RelationLattice relation_basis(std::vector<AngleClass> slots,
                                      const RelationOptions& opts = {}) {
  if (opts.precision_digits < 15)
    throw std::invalid_argument("relation_basis: precision must be at least 15 digits");
  RelationLattice lat;
  lat.precision_digits = opts.precision_digits;
  lat.coeff_bound = opts.coeff_bound;

  bool exact_ok = !slots.empty();
  for (const auto& a : slots)
    if (a.kind == AngleKind::Unclassified) exact_ok = false;
  if (exact_ok) {
    // The independence lemmas apply to distinct bases 1/d only when the
    // tangents sqrt(d^2-1) live in pairwise different square-free classes.
    std::set<long long> bases;
    for (const auto& a : slots)
      if (a.kind == AngleKind::StructuredIrrational) bases.insert(a.base_den);
    std::set<long long> parts;
    for (long long d : bases) {
      if (!parts.insert(squarefree_part(d * d - 1)).second) {
        exact_ok = false;
        lat.notes.push_back("irrational bases share a square-free tangent class; "
                            "independence argument out of scope, using heuristic search");
        break;
      }
    }
  }

  if (exact_ok) {
    lat.mode = LatticeMode::Exact;
    const auto st = detail::build_exact_structure(slots);
    // Equal angles in different slots are trivially related.
    for (const auto& cls : st.classes) {
      for (std::size_t j = 1; j < cls.slots.size(); ++j) {
        std::vector<long long> v(slots.size(), 0);
        v[cls.slots[j]] = 1;
        v[cls.slots.front()] = -1;
        lat.basis.push_back(std::move(v));
      }
    }
    std::vector<long long> coeffs;
    for (const auto& var : st.vars) coeffs.push_back(var.coeff);
    for (const auto& y : detail::congruence_kernel(coeffs, st.modulus)) {
      std::vector<long long> v(slots.size(), 0);
      bool nonzero = false;
      for (std::size_t i = 0; i < y.size(); ++i) {
        for (int rep : st.vars[i].rep_slots) v[rep] = y[i];
        if (y[i] != 0) nonzero = true;
      }
      if (nonzero) lat.basis.push_back(std::move(v));
    }
    // Keep basis vectors primitive within the lattice.
    for (auto& v : lat.basis) {
      long long g = 0;
      for (long long t : v) g = std::gcd(g, std::abs(t));
      if (g > 1) {
        std::vector<long long> reduced(v);
        for (auto& t : reduced) t /= g;
        if (detail::exact_member(st, reduced)) v = std::move(reduced);
      }
    }
  } else {
    lat.mode = LatticeMode::Heuristic;
    const int p = opts.precision_digits;
    std::vector<std::vector<long long>> candidates;
    {
      detail::PrecisionGuard guard(static_cast<unsigned>(p + 20));
      std::vector<detail::BigFloat> thetas;
      for (const auto& a : slots) thetas.push_back(detail::high_precision_theta(a));
      const detail::BigFloat two_pi = 2 * boost::math::constants::pi<detail::BigFloat>();
      candidates = detail::relation_candidates(thetas, two_pi, p, opts.coeff_bound);
    }
    // Re-verify every candidate at doubled precision before trusting it.
    detail::PrecisionGuard guard(static_cast<unsigned>(2 * p + 20));
    std::vector<detail::BigFloat> thetas;
    int sources = INT_MAX;
    for (const auto& a : slots) {
      thetas.push_back(detail::high_precision_theta(a));
      sources = std::min(sources, detail::source_digits(a));
    }
    const detail::BigFloat two_pi = 2 * boost::math::constants::pi<detail::BigFloat>();
    std::set<std::vector<long long>> seen;
    for (const auto& ell : candidates) {
      if (!seen.insert(ell).second) continue;
      detail::BigFloat s = 0;
      long long norm1 = 0;
      int relation_digits = 2 * p;
      for (std::size_t i = 0; i < ell.size(); ++i) {
        if (ell[i] == 0) continue;
        s += detail::BigFloat(ell[i]) * thetas[i];
        norm1 += std::abs(ell[i]);
        relation_digits = std::min(relation_digits, detail::source_digits(slots[i]));
      }
      const detail::BigFloat k = round(s / two_pi);
      const detail::BigFloat residual = abs(s - k * two_pi);
      detail::BigFloat tol = pow(detail::BigFloat(10), -(relation_digits - 6));
      tol *= std::max<long long>(1, norm1);
      if (residual <= tol) {
        lat.basis.push_back(ell);
      } else {
        ++lat.dropped_candidates;
      }
    }
    if (lat.dropped_candidates > 0)
      lat.notes.push_back("candidate relation(s) failed doubled-precision verification");
  }
  lat.angles = std::move(slots);
  return lat;
}

enum class PgstOutcome { Yes, No, Unknown };
enum class CertificateType {
  LatticeAllEven,        // Yes: every generator has even minus-parity
  ParityViolation,       // No: a relation with odd minus-parity
  CospectralityFailure,  // No: projector columns disagree beyond sign
  OrderObstruction,      // No: candidate difference element has order != 2
  SearchBounds           // Unknown: heuristic search exhausted its budget
};

struct PgstCertificate {
  CertificateType type = CertificateType::SearchBounds;
  std::vector<std::vector<long long>> basis;  // LatticeAllEven
  std::vector<long long> relation;            // ParityViolation
  std::vector<double> angles;
  std::vector<int> minus_weights;
  double eigenvalue = 0.0;  // CospectralityFailure
  std::vector<int> witness_element;
  long long element_order = 0;
  std::string detail;
};

struct PgstVerdict {
  PgstOutcome outcome = PgstOutcome::Unknown;
  LatticeMode mode = LatticeMode::Exact;
  int precision_digits = 0;
  long long coeff_bound = 0;
  PgstCertificate certificate;
  std::vector<std::string> caveats;
};

// Evaluates the parity functional (sum of minus-side coefficients mod 2) on
// the lattice generators.  The functional is additive, so vanishing on a
// generating set settles the whole lattice; that is what justifies Yes in
// exact mode.  In heuristic mode an odd generator still yields a sound No,
// but an all-even outcome is only Unknown.
inline PgstVerdict parity_verdict(const RelationLattice& lat, const std::vector<int>& minus_weights) {
  if (minus_weights.size() != lat.angles.size())
    throw std::invalid_argument("parity_verdict: weight vector size mismatch");
  for (int w : minus_weights)
    if (w != 0 && w != 1) throw std::invalid_argument("parity_verdict: weights must be 0/1");

  PgstVerdict v;
  v.mode = lat.mode;
  v.precision_digits = lat.precision_digits;
  v.coeff_bound = lat.coeff_bound;
  v.caveats = lat.notes;
  v.certificate.minus_weights = minus_weights;
  for (const auto& a : lat.angles) v.certificate.angles.push_back(a.theta());

  for (const auto& ell : lat.basis) {
    long long parity = 0;
    for (std::size_t i = 0; i < ell.size(); ++i) parity += minus_weights[i] * ell[i];
    if (((parity % 2) + 2) % 2 == 0) continue;

    v.outcome = PgstOutcome::No;
    v.certificate.type = CertificateType::ParityViolation;
    v.certificate.relation = ell;
    if (lat.mode == LatticeMode::Exact) {
      // When two slots share the eigenvalue 0 across the parity split, the
      // difference vector can be presented as the (1, 3) witness: both
      // coefficients positive, angle sum 1*(pi/2) + 3*(pi/2) = 2 pi.
      int pos = -1, neg = -1, others = 0;
      for (std::size_t i = 0; i < ell.size(); ++i) {
        if (ell[i] == 1 && pos < 0) pos = static_cast<int>(i);
        else if (ell[i] == -1 && neg < 0) neg = static_cast<int>(i);
        else if (ell[i] != 0) ++others;
      }
      if (others == 0 && pos >= 0 && neg >= 0) {
        const AngleClass& pa = lat.angles[pos];
        const AngleClass& na = lat.angles[neg];
        if (pa.kind == AngleKind::RationalPi && pa.pi_num == 1 && pa.pi_den == 2 &&
            na.kind == AngleKind::RationalPi && na.pi_num == 1 && na.pi_den == 2) {
          const int odd = minus_weights[pos] ? pos : neg;
          const int even = minus_weights[pos] ? neg : pos;
          std::vector<long long> witness(ell.size(), 0);
          witness[odd] = 1;
          witness[even] = 3;
          v.certificate.relation = std::move(witness);
          v.certificate.detail = "two eigenvalue-zero slots split across the sign classes";
        }
      }
    }
    return v;
  }

  if (lat.mode == LatticeMode::Exact) {
    v.outcome = PgstOutcome::Yes;
    v.certificate.type = CertificateType::LatticeAllEven;
    v.certificate.basis = lat.basis;
  } else {
    v.outcome = PgstOutcome::Unknown;
    v.certificate.type = CertificateType::SearchBounds;
    v.certificate.detail = "no parity-violating relation found within the search budget; "
                           "heuristic mode cannot certify completeness";
  }
  return v;
}

// Re-check a relation-type certificate from its own payload: the angle sum
// must vanish mod 2 pi and the minus-parity must match the claim.
inline bool reverify_certificate(const PgstVerdict& v) {
  const auto parity_of = [&](const std::vector<long long>& ell) {
    long long p = 0;
    for (std::size_t i = 0; i < ell.size(); ++i) p += v.certificate.minus_weights[i] * ell[i];
    return ((p % 2) + 2) % 2;
  };
  const auto residual_ok = [&](const std::vector<long long>& ell) {
    long long norm1 = 0;
    for (long long t : ell) norm1 += std::abs(t);
    return relation_residual(v.certificate.angles, ell) <=
           1e-8 * static_cast<double>(std::max<long long>(1, norm1));
  };
  switch (v.certificate.type) {
    case CertificateType::ParityViolation:
      return residual_ok(v.certificate.relation) && parity_of(v.certificate.relation) == 1;
    case CertificateType::LatticeAllEven:
      for (const auto& ell : v.certificate.basis)
        if (!residual_ok(ell) || parity_of(ell) != 0) return false;
      return true;
    default:
      return false;
  }
}

// Full spectral pipeline: strong cospectrality first, then the angle
// lattice parity test over the shared support.
inline PgstVerdict decide_pgst_generic(const SpectralDecomposition& dec, int u, int v,
                                       const RelationOptions& opts = {}) {
  const SupportPartition sp = sign_pattern(dec, u, v, opts.support_tol);
  PgstVerdict verdict;
  verdict.precision_digits = opts.precision_digits;
  verdict.coeff_bound = opts.coeff_bound;
  if (dec.min_gap < 10.0 * dec.group_tol)
    verdict.caveats.push_back("smallest eigenvalue gap is within 10x of group_tol; "
                              "clustering may be fragile");

  if (!sp.valid) {
    verdict.outcome = PgstOutcome::No;
    verdict.mode = LatticeMode::Exact;
    verdict.certificate.type = CertificateType::CospectralityFailure;
    verdict.certificate.eigenvalue = dec.eigenvalues[sp.violating];
    verdict.certificate.detail =
        sp.failure == SupportPartition::Failure::SupportMismatch
            ? "eigenvalue support differs between the two vertices"
            : "projector columns are not equal up to a global sign";
    return verdict;
  }

  std::vector<AngleClass> slots;
  std::vector<int> weights;
  std::set<int> minus_set(sp.minus.begin(), sp.minus.end());
  for (int idx : sp.support) {
    slots.push_back(classify_angle(dec.eigenvalues[idx], opts.snap));
    weights.push_back(minus_set.count(idx) ? 1 : 0);
  }
  const RelationLattice lat = relation_basis(std::move(slots), opts);
  PgstVerdict out = parity_verdict(lat, weights);
  out.caveats.insert(out.caveats.end(), verdict.caveats.begin(), verdict.caveats.end());
  return out;
}

}  // namespace groverwalk

#endif  // GROVERWALK_RELATIONS_HPP
