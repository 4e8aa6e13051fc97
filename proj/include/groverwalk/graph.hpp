#ifndef GROVERWALK_GRAPH_HPP
#define GROVERWALK_GRAPH_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace groverwalk {

// Simple undirected graph on vertices 0..n-1.  Self loops and duplicate
// edges are rejected at construction; isolated vertices are allowed here
// and rejected where walk matrices are built (degree 0 has no coin).
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("graph: vertex count must be >= 1");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("graph: vertex index out of range");
      if (u == v) throw std::invalid_argument("graph: self loop rejected");
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second)
        throw std::invalid_argument("graph: duplicate edge rejected");
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
  }

  static Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle generator: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return from_edges(n, e);
  }

  static Graph complete(int n) {
    if (n < 2) throw std::invalid_argument("complete generator: n must be >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(n, e);
  }

  static Graph path(int n) {
    if (n < 2) throw std::invalid_argument("path generator: n must be >= 2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
  }

  // Outer 5-cycle 0..4, inner 5-vertex pentagram 5..9, spokes i -- i+5.
  static Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
      e.emplace_back(i, i + 5);
    }
    return from_edges(10, e);
  }

  // Lines of "u v", 0-indexed; '#' starts a comment, blank lines skipped.
  static Graph parse_edge_list(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      long long u, v;
      if (!(ls >> u)) continue;  // blank or comment-only line
      std::string trailing;
      if (!(ls >> v) || (ls >> trailing)) {
        throw std::invalid_argument("edge list: malformed line " + std::to_string(lineno));
      }
      if (u < 0 || v < 0)
        throw std::invalid_argument("edge list: negative vertex on line " + std::to_string(lineno));
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
    }
    if (max_vertex < 0) throw std::invalid_argument("edge list: no edges found");
    return from_edges(max_vertex + 1, std::move(edges));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const { return adj_.at(u); }
  int degree(int u) const { return static_cast<int>(adj_.at(u).size()); }

  int min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int u = 1; u < n_; ++u) d = std::min(d, degree(u));
    return d;
  }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
  }

  bool is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj_[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == n_;
  }

  Eigen::MatrixXd adjacency() const {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
    for (auto [u, v] : edges_) {
      a(u, v) = 1.0;
      a(v, u) = 1.0;
    }
    return a;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj_;
};

struct Arc {
  int origin = 0;
  int terminus = 0;
};

// Directed arcs of a graph, both orientations of every edge, ordered
// lexicographically by (origin, terminus) so indices are reproducible.
class ArcSpace {
 public:
  explicit ArcSpace(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v : g.neighbors(u)) arcs_.push_back({u, v});
    for (int a = 0; a < static_cast<int>(arcs_.size()); ++a)
      index_[{arcs_[a].origin, arcs_[a].terminus}] = a;
  }

  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int a) const { return arcs_.at(a); }

  int index_of(int origin, int terminus) const {
    const auto it = index_.find({origin, terminus});
    if (it == index_.end()) throw std::invalid_argument("arc_space: no such arc");
    return it->second;
  }

  // The reversed arc; a fixed-point-free involution.
  int inverse(int a) const {
    const Arc& x = arc(a);
    return index_of(x.terminus, x.origin);
  }

 private:
  std::vector<Arc> arcs_;
  std::map<std::pair<int, int>, int> index_;
};

// Arc-space walk operators: shift R swaps each arc with its reverse, the
// boundary N averages arcs into their terminus with weight 1/sqrt(deg),
// C = 2 N^T N - I reflects about incoming uniform states, and U = R C is
// one step of the walk.
struct WalkMatrices {
  ArcSpace arcs;
  Eigen::MatrixXd R;  // arc x arc
  Eigen::MatrixXd N;  // vertex x arc
  Eigen::MatrixXd C;  // arc x arc
  Eigen::MatrixXd U;  // arc x arc
};

inline constexpr int kMaxDenseArcs = 4096;

inline WalkMatrices walk_matrices(const Graph& g) {
  if (g.min_degree() < 1)
    throw std::invalid_argument("walk_matrices: isolated vertex has no coin");
  ArcSpace arcs(g);
  const int m = arcs.arc_count();
  const int n = g.vertex_count();
  if (m > kMaxDenseArcs)
    throw std::invalid_argument("walk_matrices: arc count exceeds dense-storage limit");

  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(m, m);
  for (int a = 0; a < m; ++a) r(a, arcs.inverse(a)) = 1.0;

  Eigen::MatrixXd nn = Eigen::MatrixXd::Zero(n, m);
  for (int a = 0; a < m; ++a) {
    const int t = arcs.arc(a).terminus;
    nn(t, a) = 1.0 / std::sqrt(static_cast<double>(g.degree(t)));
  }

  Eigen::MatrixXd c = 2.0 * nn.transpose() * nn - Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd u = r * c;
  return WalkMatrices{std::move(arcs), std::move(r), std::move(nn), std::move(c), std::move(u)};
}

// Degree-normalized adjacency D^{-1/2} A D^{-1/2}, the vertex-space shadow
// of the walk (equals N R N^T; the tests cross-check that identity).
struct Discriminant {
  Eigen::MatrixXd P;
  Eigen::VectorXd degrees;
};

inline Discriminant discriminant(const Graph& g) {
  if (g.min_degree() < 1)
    throw std::invalid_argument("discriminant: isolated vertex has degree 0");
  const int n = g.vertex_count();
  Discriminant d;
  d.degrees.resize(n);
  for (int u = 0; u < n; ++u) d.degrees(u) = static_cast<double>(g.degree(u));
  d.P = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    const double w = 1.0 / std::sqrt(d.degrees(u) * d.degrees(v));
    d.P(u, v) = w;
    d.P(v, u) = w;
  }
  return d;
}

struct AutomorphismCheck {
  bool is_automorphism = false;
  double commute_residual = 0.0;  // max-norm of M P - P M for the permutation matrix M
};

inline AutomorphismCheck verify_automorphism(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("verify_automorphism: permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (int x : perm) {
    if (x < 0 || x >= n || hit[x]) throw std::invalid_argument("verify_automorphism: not a permutation");
    hit[x] = 1;
  }
  bool ok = true;
  for (auto [u, v] : g.edges()) {
    if (!g.has_edge(perm[u], perm[v])) {
      ok = false;
      break;
    }
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) m(perm[u], u) = 1.0;
  const Eigen::MatrixXd p = discriminant(g).P;
  const double residual = (m * p - p * m).cwiseAbs().maxCoeff();
  return AutomorphismCheck{ok, residual};
}

}  // namespace groverwalk

#endif  // GROVERWALK_GRAPH_HPP
