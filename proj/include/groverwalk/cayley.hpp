#ifndef GROVERWALK_CAYLEY_HPP
#define GROVERWALK_CAYLEY_HPP

#include <complex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "groverwalk/graph.hpp"
#include "groverwalk/relations.hpp"

namespace groverwalk {

// Finite abelian group Z_{f1} x ... x Z_{fk} with elements enumerated in
// lexicographic tuple order (first coordinate most significant).
struct AbelianGroup {
  std::vector<int> factors;

  using Elem = std::vector<int>;

  explicit AbelianGroup(std::vector<int> f) : factors(std::move(f)) {
    if (factors.empty()) throw std::invalid_argument("abelian group: no factors");
    for (int n : factors)
      if (n < 2) throw std::invalid_argument("abelian group: factors must be >= 2");
  }

  int rank() const { return static_cast<int>(factors.size()); }

  long long order() const {
    long long n = 1;
    for (int f : factors) n *= f;
    return n;
  }

  long long exponent() const {
    long long e = 1;
    for (int f : factors) e = std::lcm(e, static_cast<long long>(f));
    return e;
  }

  Elem zero() const { return Elem(factors.size(), 0); }

  void validate(const Elem& a) const {
    if (a.size() != factors.size()) throw std::invalid_argument("group element: rank mismatch");
    for (std::size_t r = 0; r < a.size(); ++r)
      if (a[r] < 0 || a[r] >= factors[r])
        throw std::invalid_argument("group element: coordinate out of range");
  }

  Elem add(const Elem& a, const Elem& b) const {
    validate(a);
    validate(b);
    Elem c(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) c[r] = (a[r] + b[r]) % factors[r];
    return c;
  }

  Elem neg(const Elem& a) const {
    validate(a);
    Elem c(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) c[r] = (factors[r] - a[r]) % factors[r];
    return c;
  }

  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

  long long index_of(const Elem& a) const {
    validate(a);
    long long idx = 0;
    for (std::size_t r = 0; r < a.size(); ++r) idx = idx * factors[r] + a[r];
    return idx;
  }

  Elem element(long long idx) const {
    if (idx < 0 || idx >= order()) throw std::invalid_argument("group element: index out of range");
    Elem a(factors.size());
    for (int r = rank() - 1; r >= 0; --r) {
      a[r] = static_cast<int>(idx % factors[r]);
      idx /= factors[r];
    }
    return a;
  }

  long long element_order(const Elem& a) const {
    validate(a);
    long long ord = 1;
    for (std::size_t r = 0; r < a.size(); ++r) {
      const long long f = factors[r];
      ord = std::lcm(ord, f / std::gcd(f, static_cast<long long>(a[r])));
    }
    return ord;
  }
};

// chi_a(b) = exp(2 pi i sum_r a_r b_r / n_r)
inline std::complex<double> character_value(const AbelianGroup& g, const AbelianGroup::Elem& a,
                                            const AbelianGroup::Elem& b) {
  g.validate(a);
  g.validate(b);
  double phase = 0.0;
  for (int r = 0; r < g.rank(); ++r)
    phase += static_cast<double>(a[r]) * static_cast<double>(b[r]) / g.factors[r];
  return std::polar(1.0, 2.0 * M_PI * phase);
}

// Exact character phase as a residue t mod N (exponent of the group):
// chi_a(b) = exp(2 pi i t / N).
inline long long character_phase(const AbelianGroup& g, const AbelianGroup::Elem& a,
                                 const AbelianGroup::Elem& b) {
  const long long n = g.exponent();
  long long t = 0;
  for (int r = 0; r < g.rank(); ++r) {
    t = (t + static_cast<long long>(a[r]) * b[r] % g.factors[r] * (n / g.factors[r])) % n;
  }
  return t;
}

// Validated symmetric generating set (no identity, s in S implies -s in S,
// and S generates the whole group so the Cayley graph is connected).
inline void validate_connection_set(const AbelianGroup& g,
                                    const std::vector<AbelianGroup::Elem>& conn) {
  if (conn.empty()) throw std::invalid_argument("connection set: empty");
  std::set<std::vector<int>> s(conn.begin(), conn.end());
  if (s.size() != conn.size()) throw std::invalid_argument("connection set: duplicate element");
  for (const auto& e : conn) {
    g.validate(e);
    if (e == g.zero()) throw std::invalid_argument("connection set: contains the identity");
    if (!s.count(g.neg(e))) throw std::invalid_argument("connection set: not symmetric");
  }
  // breadth-first closure from 0 under adding connection elements
  std::vector<char> seen(g.order(), 0);
  std::vector<long long> stack{0};
  seen[0] = 1;
  long long count = 1;
  while (!stack.empty()) {
    const long long idx = stack.back();
    stack.pop_back();
    const auto cur = g.element(idx);
    for (const auto& e : conn) {
      const long long nxt = g.index_of(g.add(cur, e));
      if (!seen[nxt]) {
        seen[nxt] = 1;
        ++count;
        stack.push_back(nxt);
      }
    }
  }
  if (count != g.order()) throw std::invalid_argument("connection set: does not generate the group");
}

struct CayleyGraph {
  AbelianGroup group;
  std::vector<AbelianGroup::Elem> connection;
  Graph graph;
  // Closed-form eigenvalues indexed by group element, when the construction
  // provides them (unitary and product-family graphs).
  std::optional<std::vector<Rational>> exact_mu;
};

inline CayleyGraph make_cayley(AbelianGroup g, std::vector<AbelianGroup::Elem> conn) {
  validate_connection_set(g, conn);
  std::vector<std::pair<int, int>> edges;
  const long long n = g.order();
  for (long long i = 0; i < n; ++i) {
    const auto gi = g.element(i);
    for (const auto& s : conn) {
      const long long j = g.index_of(g.add(gi, s));
      if (i < j) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  Graph graph = Graph::from_edges(static_cast<int>(n), std::move(edges));
  return CayleyGraph{std::move(g), std::move(conn), std::move(graph), std::nullopt};
}

inline CayleyGraph make_circulant(int n, const std::vector<int>& conn) {
  AbelianGroup g({n});
  std::vector<AbelianGroup::Elem> elems;
  for (int c : conn) elems.push_back({((c % n) + n) % n});
  return make_cayley(std::move(g), std::move(elems));
}

// Cay(Z_n x Z_m, (Z_n \ {0}) x Z_m): every non-first-coordinate-zero pair.
// The spectrum collapses to {1, 1/(1-n), 0}.
inline CayleyGraph make_product_family(int n, int m) {
  if (n < 2 || m < 2) throw std::invalid_argument("product family: n and m must be >= 2");
  AbelianGroup g({n, m});
  std::vector<AbelianGroup::Elem> conn;
  for (int x = 1; x < n; ++x)
    for (int y = 0; y < m; ++y) conn.push_back({x, y});
  CayleyGraph cg = make_cayley(std::move(g), std::move(conn));
  std::vector<Rational> mu(cg.group.order(), Rational(0));
  for (long long idx = 0; idx < cg.group.order(); ++idx) {
    const auto e = cg.group.element(idx);
    if (e[1] != 0) {
      mu[idx] = Rational(0);
    } else if (e[0] != 0) {
      mu[idx] = Rational(1, 1 - static_cast<long long>(n));
    } else {
      mu[idx] = Rational(1);
    }
  }
  cg.exact_mu = std::move(mu);
  return cg;
}

// (1/|S|) sum over S of chi_a, as an exactly recomputable cosine sum.
inline CosineSum eigenvalue_cosine_sum(const CayleyGraph& cg, long long a_idx) {
  const auto a = cg.group.element(a_idx);
  CosineSum cs;
  cs.scale = static_cast<long long>(cg.connection.size());
  cs.denom = cg.group.exponent();
  for (const auto& s : cg.connection) cs.numerators.push_back(character_phase(cg.group, a, s));
  return cs;
}

inline double cayley_eigenvalue(const CayleyGraph& cg, long long a_idx) {
  if (cg.exact_mu) return to_double((*cg.exact_mu)[a_idx]);
  const auto a = cg.group.element(a_idx);
  double re = 0.0, im = 0.0;
  for (const auto& s : cg.connection) {
    const auto z = character_value(cg.group, a, s);
    re += z.real();
    im += z.imag();
  }
  const double scale = static_cast<double>(cg.connection.size());
  if (std::abs(im) / scale > 1e-12)
    throw std::runtime_error("cayley_eigenvalue: nonzero imaginary part; connection set asymmetric?");
  return re / scale;
}

// Normalized character column (1/sqrt(n)) chi_a(g), an eigenvector of the
// discriminant for the eigenvalue above.
inline Eigen::VectorXcd cayley_eigenvector(const CayleyGraph& cg, long long a_idx) {
  const auto a = cg.group.element(a_idx);
  const long long n = cg.group.order();
  Eigen::VectorXcd psi(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (long long gidx = 0; gidx < n; ++gidx)
    psi(gidx) = norm * character_value(cg.group, a, cg.group.element(gidx));
  return psi;
}

inline std::vector<AbelianGroup::Elem> order_two_elements(const AbelianGroup& g) {
  std::vector<AbelianGroup::Elem> out;
  for (long long idx = 1; idx < g.order(); ++idx) {
    const auto e = g.element(idx);
    if (g.element_order(e) == 2) out.push_back(e);
  }
  return out;
}

// For an order-2 element w every character is +-1 on w; split the dual
// group accordingly.  gamma0 collects chi_a(w) = +1, gamma1 the rest.
struct SignPartition {
  AbelianGroup::Elem w;
  std::vector<long long> gamma0;
  std::vector<long long> gamma1;
};

inline SignPartition sign_partition(const AbelianGroup& g, const AbelianGroup::Elem& w) {
  if (g.element_order(w) != 2)
    throw std::invalid_argument("sign_partition: element must have order 2");
  SignPartition sp;
  sp.w = w;
  const long long n = g.exponent();
  for (long long a = 0; a < g.order(); ++a) {
    const long long t = character_phase(g, g.element(a), w);
    if (t == 0) {
      sp.gamma0.push_back(a);
    } else if (2 * t == n) {
      sp.gamma1.push_back(a);
    } else {
      throw std::logic_error("sign_partition: character not +-1 on an order-2 element");
    }
  }
  return sp;
}

// Angle slot for every group element, exact when the construction knows its
// spectrum, otherwise numeric with the cosine sum attached so heuristic
// verification is not limited to double precision.  Numeric snaps are
// confirmed against the cosine sum at 60 digits before being trusted.
inline std::vector<AngleClass> cayley_angle_slots(const CayleyGraph& cg,
                                                  const RelationOptions& opts = {}) {
  const long long n = cg.group.order();
  std::vector<AngleClass> slots;
  slots.reserve(n);
  for (long long a = 0; a < n; ++a) {
    AngleClass slot;
    if (cg.exact_mu) {
      slot = classify_angle((*cg.exact_mu)[a]);
    } else {
      slot = classify_angle(cayley_eigenvalue(cg, a), opts.snap);
      slot.trig = eigenvalue_cosine_sum(cg, a);
      if (slot.mu_exact) {
        detail::PrecisionGuard guard(60);
        detail::BigFloat exact_val =
            detail::BigFloat(slot.mu_exact->numerator()) / detail::BigFloat(slot.mu_exact->denominator());
        const detail::BigFloat two_pi = 2 * boost::math::constants::pi<detail::BigFloat>();
        detail::BigFloat s = 0;
        for (long long t : slot.trig->numerators)
          s += cos(two_pi * detail::BigFloat(t) / detail::BigFloat(slot.trig->denom));
        s /= detail::BigFloat(slot.trig->scale);
        if (abs(s - exact_val) > pow(detail::BigFloat(10), -40)) {
          // The snap was a near miss, not the true eigenvalue.
          slot.mu_exact.reset();
          slot.kind = AngleKind::Unclassified;
          slot.family = IrrationalFamily::None;
          slot.base_den = 0;
          slot.sign = 0;
        }
      }
    }
    slots.push_back(std::move(slot));
  }
  return slots;
}

// State-transfer test between group elements via character data: the only
// viable target difference has order 2, and then the verdict reduces to the
// parity test over the element-indexed angle multiset.
inline PgstVerdict pgst_check(const CayleyGraph& cg, long long u, long long v,
                              const RelationOptions& opts = {}) {
  const long long n = cg.group.order();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("pgst_check: vertex out of range");
  if (u == v) throw std::invalid_argument("pgst_check: vertices must differ");

  const auto w = cg.group.sub(cg.group.element(v), cg.group.element(u));
  const long long ord = cg.group.element_order(w);
  PgstVerdict verdict;
  verdict.precision_digits = opts.precision_digits;
  verdict.coeff_bound = opts.coeff_bound;
  if (ord != 2) {
    verdict.outcome = PgstOutcome::No;
    verdict.mode = LatticeMode::Exact;
    verdict.certificate.type = CertificateType::OrderObstruction;
    verdict.certificate.witness_element = w;
    verdict.certificate.element_order = ord;
    verdict.certificate.detail = "difference of the two vertices must have order 2";
    return verdict;
  }

  const SignPartition sp = sign_partition(cg.group, w);
  std::vector<int> weights(n, 0);
  for (long long a : sp.gamma1) weights[a] = 1;

  const RelationLattice lat = relation_basis(cayley_angle_slots(cg, opts), opts);
  return parity_verdict(lat, weights);
}

}  // namespace groverwalk

#endif  // GROVERWALK_CAYLEY_HPP
