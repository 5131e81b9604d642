#include "chipfire/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace chipfire {

void Digraph::add_undirected(std::size_t u, std::size_t v, std::uint64_t multiplicity) {
  edges.push_back({u, v, multiplicity});
  edges.push_back({v, u, multiplicity});
}

IntMatrix reduced_graph_laplacian(const Digraph& g) {
  const std::size_t n = g.vertex_count;
  if (n < 2) throw Error(ErrorCode::InvalidInput, "graph needs at least two vertices");
  if (g.sink >= n) throw Error(ErrorCode::InvalidInput, "sink out of range");

  IntMatrix full(n, n);
  for (const auto& e : g.edges) {
    if (e.from >= n || e.to >= n) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
    if (e.from == e.to) throw Error(ErrorCode::InvalidInput, "self-loop at vertex " + std::to_string(e.from));
    if (e.multiplicity == 0) throw Error(ErrorCode::InvalidInput, "edge multiplicity must be >= 1");
    const BigInt mult(static_cast<unsigned long>(e.multiplicity));
    full(e.from, e.from) += mult;
    full(e.from, e.to) -= mult;
  }

  IntMatrix reduced(n - 1, n - 1);
  for (std::size_t i = 0, ri = 0; i < n; ++i) {
    if (i == g.sink) continue;
    for (std::size_t j = 0, rj = 0; j < n; ++j) {
      if (j == g.sink) continue;
      reduced(ri, rj++) = full(i, j);
    }
    ++ri;
  }

  if (!check_m_matrix(reduced).is_m_matrix) {
    throw Error(ErrorCode::DisconnectedFromSink, "some vertex has no directed path to the sink");
  }
  return reduced;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

Edge normalized(Edge e) {
  if (e[0] > e[1]) std::swap(e[0], e[1]);
  return e;
}

}  // namespace

CombinatorialLaplacian reduced_combinatorial_laplacian(const SimplicialComplex2D& c) {
  if (c.facets.empty()) throw Error(ErrorCode::EmptyComplex, "complex has no facets");

  std::set<Triangle> facets;
  std::set<Edge> skeleton;
  std::set<Vertex> vertices;
  for (Triangle t : c.facets) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw Error(ErrorCode::InvalidInput, "degenerate facet");
    if (!facets.insert(t).second) throw Error(ErrorCode::InvalidInput, "duplicate facet");
    skeleton.insert({t[0], t[1]});
    skeleton.insert({t[0], t[2]});
    skeleton.insert({t[1], t[2]});
    vertices.insert(t.begin(), t.end());
  }

  // The sink tree must be acyclic, use skeleton edges only, and touch every vertex.
  std::map<Vertex, std::size_t> vertex_index;
  for (Vertex v : vertices) vertex_index.emplace(v, vertex_index.size());
  DisjointSets components(vertices.size());
  std::set<Edge> tree;
  for (Edge e : c.sink_tree) {
    e = normalized(e);
    if (!skeleton.contains(e)) {
      throw Error(ErrorCode::NotASpanningTree,
                  "edge " + std::to_string(e[0]) + std::to_string(e[1]) + " is not in the 1-skeleton");
    }
    if (!tree.insert(e).second || !components.unite(vertex_index[e[0]], vertex_index[e[1]])) {
      throw Error(ErrorCode::NotASpanningTree, "sink tree contains a cycle");
    }
  }
  if (tree.size() + 1 != vertices.size()) {
    throw Error(ErrorCode::NotASpanningTree, "sink tree does not span every vertex");
  }

  CombinatorialLaplacian out;
  std::map<Edge, std::size_t> row_of;
  for (const Edge& e : skeleton) {
    if (tree.contains(e)) continue;
    row_of.emplace(e, out.edges.size());
    out.edges.push_back(e);
  }

  IntMatrix boundary(out.edges.size(), facets.size());
  std::size_t col = 0;
  for (const Triangle& t : facets) {
    const std::array<std::pair<Edge, int>, 3> faces{{
        {{t[1], t[2]}, +1},
        {{t[0], t[2]}, -1},
        {{t[0], t[1]}, +1},
    }};
    for (const auto& [edge, sign] : faces) {
      if (auto it = row_of.find(edge); it != row_of.end()) boundary(it->second, col) = sign;
    }
    ++col;
  }

  out.matrix = boundary * boundary.transpose();
  return out;
}

LatticePointSet fundamental_parallelepiped_points(const IntMatrix& l, const BigInt& det_cap) {
  if (!l.is_square()) throw Error(ErrorCode::NonSquare, "L must be square");
  const BigInt d = det(l);
  if (d == 0) throw Error(ErrorCode::SingularMatrix, "det L = 0");
  if (abs(d) > det_cap) {
    throw Error(ErrorCode::DeterminantExceedsCap,
                "|det L| = " + BigInt(abs(d)).get_str() + " exceeds cap " + det_cap.get_str());
  }
  const std::size_t n = l.rows();
  const RatMatrix l_inv = rat_inverse(to_rational(l));

  // Bounding box of the vertices L b, b in {0,1}^n: per coordinate, the
  // sum of negative entries to the sum of positive entries of that row.
  IntVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (l(i, j) < 0) lo[i] += l(i, j);
      else hi[i] += l(i, j);
    }
  BigInt volume = 1;
  for (std::size_t i = 0; i < n; ++i) volume *= hi[i] - lo[i] + 1;
  if (volume > kDefaultBoxCap) {
    throw Error(ErrorCode::BoxTooLarge, "bounding box of the parallelepiped has " + volume.get_str() + " points");
  }

  LatticePointSet out;
  IntVector p = lo;
  for (;;) {
    const RatVector coords = l_inv * to_rational(p);
    const bool inside = std::all_of(coords.begin(), coords.end(),
                                    [](const Rational& c) { return c.sign() >= 0 && c < Rational(1); });
    if (inside) out.points.push_back(p);

    std::size_t k = n;
    while (k-- > 0) {
      if (p[k] < hi[k]) {
        p[k] += 1;
        break;
      }
      p[k] = lo[k];
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

Pairing classical_pairing(const IntMatrix& l) {
  if (!check_m_matrix(l).is_m_matrix) throw Error(ErrorCode::NotAnMMatrix, "L is not an M-matrix");
  return make_pairing(l, l);
}

Pairing identity_pairing(const IntMatrix& l) {
  return make_pairing(l, IntMatrix::identity(l.rows()));
}

}  // namespace chipfire
