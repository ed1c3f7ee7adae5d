#include "surfcx/toruscomplex.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <queue>
#include <thread>

namespace surfcx::torus {

using exactlin::content;
using exactlin::det;

std::strong_ordering ProjVector::operator<=>(const ProjVector& other) const {
  if (coords_.size() != other.coords_.size()) return coords_.size() <=> other.coords_.size();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] < other.coords_[i]) return std::strong_ordering::less;
    if (coords_[i] > other.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

ProjVector canonicalize(std::span<const Integer> v) {
  if (v.size() < 2) throw InvalidInput("vertex vectors need at least two coordinates");
  const Integer c = content(v);
  if (c == 0) throw InvalidInput("zero vector is not a vertex");
  if (c != 1) throw InvalidInput("vector " + exactlin::join(v) + " has content " + c.str());
  IntVector coords(v.begin(), v.end());
  const auto first = std::find_if(coords.begin(), coords.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0)
    for (auto& x : coords) x = -x;
  return ProjVector(std::move(coords));
}

namespace {

IntMatrix matrix_of(std::span<const ProjVector> vs) {
  std::vector<IntVector> cols;
  cols.reserve(vs.size());
  for (const auto& v : vs) cols.push_back(v.vector());
  return IntMatrix::from_columns(cols);
}

void require_distinct(std::span<const ProjVector> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) throw InvalidInput("repeated vertex " + vs[i].to_string());
}

void require_dimension(std::span<const ProjVector> vs, std::size_t n) {
  for (const auto& v : vs)
    if (v.dimension() != n)
      throw InvalidInput("vertex " + v.to_string() + " does not have length " + std::to_string(n));
}

Integer pair_minors_gcd(const ProjVector& a, const ProjVector& b) {
  const std::vector<IntVector> cols{a.vector(), b.vector()};
  return exactlin::minors_gcd(IntMatrix::from_columns(cols), 2);
}

}  // namespace

SimplexCheck finegold_simplex_check(std::span<const ProjVector> vs, std::size_t n) {
  if (n < 2) throw InvalidInput("dimension must be at least 2");
  if (vs.size() < 2 || vs.size() > n + 1)
    throw InvalidInput("a simplex of C(T^" + std::to_string(n) + ") has 2 to " +
                       std::to_string(n + 1) + " vertices");
  require_dimension(vs, n);
  require_distinct(vs);

  SimplexCheck out;
  if (vs.size() <= n) {
    std::vector<std::size_t> members(vs.size());
    std::iota(members.begin(), members.end(), std::size_t{0});
    const Integer g = exactlin::minors_gcd(matrix_of(vs), vs.size());
    out.spans = g == 1;
    out.witnesses.push_back({std::move(members), g});
    return out;
  }

  // n + 1 vertices: every facet (omit one vertex) must be an (n-1)-simplex,
  // i.e. have |det| = 1.
  out.spans = true;
  for (std::size_t skip = 0; skip < vs.size(); ++skip) {
    std::vector<std::size_t> members;
    std::vector<ProjVector> facet;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (i != skip) {
        members.push_back(i);
        facet.push_back(vs[i]);
      }
    Integer g = abs(det(matrix_of(facet)));
    out.spans = out.spans && g == 1;
    out.witnesses.push_back({std::move(members), std::move(g)});
  }
  return out;
}

bool is_finegold_simplex(std::span<const ProjVector> vs, std::size_t n) {
  return finegold_simplex_check(vs, n).spans;
}

SimplexCheck surface_simplex_check(std::span<const ProjVector> vs) {
  if (vs.empty()) throw InvalidInput("empty vertex list");
  const std::size_t n = vs.front().dimension();
  if (n != 2 && n != 3)
    throw InvalidInput("surface-complex simplices are defined for T^2 and T^3 only");
  if (vs.size() < 2) throw InvalidInput("a simplex needs at least two vertices");
  require_dimension(vs, n);
  require_distinct(vs);

  SimplexCheck out;
  out.spans = true;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Integer g = pair_minors_gcd(vs[i], vs[j]);
      out.spans = out.spans && g == 1;
      out.witnesses.push_back({{i, j}, std::move(g)});
    }
  return out;
}

Integer intersection_components(const ProjVector& a, const ProjVector& b) {
  if (a.dimension() != 3 || b.dimension() != 3)
    throw InvalidInput("intersection components are defined in T^3");
  if (a == b) throw InvalidInput("vertices must be distinct");
  return content(exactlin::cross(a.coords(), b.coords()));
}

bool s1_edge(const ProjVector& a, const ProjVector& b) {
  return intersection_components(a, b) == 1;
}

namespace {

const exactlin::UnimodularCompletion& z_axis_completion() {
  static const exactlin::UnimodularCompletion c = exactlin::complete_with_inverse(
      IntVector{0, 0, 1});
  return c;
}

// det[a b w] = w . (a x b), so a Bezout vector for the cross product closes
// the pair to determinant one.
IntMatrix edge_witness(const ProjVector& a, const ProjVector& b) {
  const IntVector w = exactlin::bezout_vector(exactlin::cross(a.coords(), b.coords()));
  const std::vector<IntVector> cols{a.vector(), b.vector(), w};
  return IntMatrix::from_columns(cols);
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// Moves b to (0,0,1) with transform = Z * B^-1, where B and Z complete b and
// (0,0,1) respectively (transform = I when b is already (0,0,1)), writes the
// image of a as (p, q, r) and routes through (x, y, 0).
PathCertificate two_hop_path(const ProjVector& a, const ProjVector& b) {
  const auto& z = z_axis_completion();
  const auto bc = exactlin::complete_with_inverse(b.coords());
  const IntMatrix transform = z.matrix * bc.inverse;
  const IntMatrix back = bc.matrix * z.inverse;

  const IntVector image = transform * a.coords();
  const Integer& p = image[0];
  const Integer& q = image[1];
  const Integer& r = image[2];

  // p*y - q*x = g; the general solution moves (x, y) by (p/g, q/g).
  const auto [g, s, t] = exactlin::xgcd(p, q);
  if (g == 0) throw CertificateError("image of a lies on the axis of b");
  Integer x = -t;
  Integer y = s;
  const Integer step_x = p / g;
  if (step_x != 0) {
    const Integer target = floor_mod(x, abs(step_x));
    const Integer k = (target - x) / step_x;
    x = target;
    y += k * (q / g);
  }
  const auto [g1, alpha, beta] = exactlin::xgcd(g, r);
  const auto [g2, gamma, delta] = exactlin::xgcd(x, y);
  if (g1 != 1 || g2 != 1) throw CertificateError("path construction lost primitivity");

  // det(first) = alpha*g + beta*r = 1 and det(second) = gamma*x + delta*y = 1.
  const IntMatrix first{{p, x, -beta * delta}, {q, y, beta * gamma}, {r, 0, alpha}};
  const IntMatrix second{{x, 0, delta}, {y, 0, -gamma}, {0, 1, 0}};
  const IntVector mid = back * IntVector{x, y, 0};

  PathCertificate path;
  path.waypoints = {a, canonicalize(mid), b};
  path.witnesses = {back * first, back * second};
  path.transform = transform;
  return path;
}

void require_path_ends(const ProjVector& a, const ProjVector& b) {
  if (a.dimension() != 3 || b.dimension() != 3)
    throw InvalidInput("paths are built in S_1(T^3)");
  if (a == b) throw InvalidInput("vertices must be distinct");
}

}  // namespace

PathCertificate connect_path(const ProjVector& a, const ProjVector& b) {
  require_path_ends(a, b);
  PathCertificate path;
  if (s1_edge(a, b)) {
    path.waypoints = {a, b};
    path.witnesses = {edge_witness(a, b)};
    path.transform = IntMatrix::identity(3);
  } else {
    path = two_hop_path(a, b);
  }
  if (!verify_path(path)) throw CertificateError("path certificate failed verification");
  return path;
}

PathCertificate axis_path(const ProjVector& a, const ProjVector& b) {
  require_path_ends(a, b);
  PathCertificate path = two_hop_path(a, b);
  if (!verify_path(path)) throw CertificateError("path certificate failed verification");
  return path;
}

bool verify_path(const PathCertificate& path) {
  const std::size_t edges = path.edge_count();
  if (edges < 1 || edges > 2 || path.witnesses.size() != edges) return false;
  if (path.transform.rows() != 3 || path.transform.cols() != 3) return false;
  if (det(path.transform) != 1) return false;
  const auto same_class = [](const IntVector& col, const ProjVector& v) {
    if (col.size() != v.dimension()) return false;
    const bool plus = std::equal(col.begin(), col.end(), v.coords().begin());
    const bool minus = std::equal(col.begin(), col.end(), v.coords().begin(),
                                  [](const Integer& c, const Integer& x) { return c == -x; });
    return plus || minus;
  };
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& w = path.witnesses[i];
    if (w.rows() != 3 || w.cols() != 3 || det(w) != 1) return false;
    if (!same_class(w.column(0), path.waypoints[i])) return false;
    if (!same_class(w.column(1), path.waypoints[i + 1])) return false;
    if (path.waypoints[i] == path.waypoints[i + 1]) return false;
    if (!s1_edge(path.waypoints[i], path.waypoints[i + 1])) return false;
  }
  return true;
}

std::vector<ProjVector> enumerate_vertices(std::size_t n, long long height) {
  if (height < 1) throw InvalidInput("height must be at least 1");
  if (n < 2) throw InvalidInput("dimension must be at least 2");
  if (height > kMaxGraphHeight) throw InvalidInput("height too large to enumerate");

  std::vector<ProjVector> out;
  std::vector<long long> cur(n, -height);
  // Odometer over [-height, height]^n in lexicographic order.
  while (true) {
    const auto first = std::find_if(cur.begin(), cur.end(), [](long long x) { return x != 0; });
    if (first != cur.end() && *first > 0) {
      long long g = 0;
      for (long long x : cur) g = std::gcd(g, x);
      if (g == 1) {
        IntVector v(cur.begin(), cur.end());
        out.push_back(canonicalize(v));
      }
    }
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == height) {
      cur[i - 1] = -height;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::FinegoldSkeleton: return "finegold-skeleton";
    case GraphKind::SurfaceComplexS1: return "surface-complex-s1";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "finegold" || name == "finegold-skeleton") return GraphKind::FinegoldSkeleton;
  if (name == "surface" || name == "surface-complex-s1") return GraphKind::SurfaceComplexS1;
  return std::nullopt;
}

ComplexGraph::ComplexGraph(GraphKind kind, std::size_t dimension, long long height,
                           std::vector<ProjVector> vertices,
                           std::vector<std::pair<std::size_t, std::size_t>> edges)
    : kind_(kind),
      dimension_(dimension),
      height_(height),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      adjacency_(vertices_.size()) {
  for (const auto& [i, j] : edges_) {
    if (i >= j || j >= vertices_.size()) throw InvalidInput("malformed edge list");
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::optional<std::size_t> ComplexGraph::index_of(const ProjVector& v) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

namespace {

// gcd of the 2x2 minors of the n x 2 matrix (a b), in 64-bit arithmetic.
// Safe while every coordinate is at most kMaxGraphHeight in magnitude.
bool unimodular_pair(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      g = std::gcd(g, a[i] * b[j] - a[j] * b[i]);
      if (g == 1) return true;
    }
  return false;
}

}  // namespace

ComplexGraph build_graph(GraphKind kind, long long height, std::size_t dimension) {
  if (kind == GraphKind::SurfaceComplexS1 && dimension != 2 && dimension != 3)
    throw InvalidInput("surface-complex graphs are defined for T^2 and T^3 only");
  auto vertices = enumerate_vertices(dimension, height);

  std::vector<std::vector<std::int64_t>> small;
  small.reserve(vertices.size());
  for (const auto& v : vertices) {
    std::vector<std::int64_t> c;
    for (const auto& x : v.coords()) c.push_back(static_cast<std::int64_t>(x));
    small.push_back(std::move(c));
  }

  const std::size_t count = vertices.size();
  std::vector<std::vector<std::size_t>> upper(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;)
      for (std::size_t j = i + 1; j < count; ++j)
        if (unimodular_pair(small[i], small[j])) upper[i].push_back(j);
  };
  const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j : upper[i]) edges.emplace_back(i, j);
  return ComplexGraph(kind, dimension, height, std::move(vertices), std::move(edges));
}

namespace {

std::vector<std::size_t> bfs_from(const ComplexGraph& g, std::size_t source) {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.vertices().size(), unseen);
  std::queue<std::size_t> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t w : g.neighbors(u))
      if (dist[w] == unseen) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> bfs_distance(const ComplexGraph& g, const ProjVector& a,
                                        const ProjVector& b) {
  const auto ia = g.index_of(a);
  const auto ib = g.index_of(b);
  if (!ia) throw InvalidInput("vertex " + a.to_string() + " is not in the truncation");
  if (!ib) throw InvalidInput("vertex " + b.to_string() + " is not in the truncation");
  const auto dist = bfs_from(g, *ia);
  if (dist[*ib] == static_cast<std::size_t>(-1)) return std::nullopt;
  return dist[*ib];
}

TruncationDiameter truncation_diameter(const ComplexGraph& g) {
  TruncationDiameter out;
  const std::size_t n = g.vertices().size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto dist = bfs_from(g, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[j] == static_cast<std::size_t>(-1)) {
        out.connected = false;
        continue;
      }
      if (dist[j] > out.diameter) {
        out.diameter = dist[j];
        out.pair = {i, j};
      }
    }
  }
  return out;
}

std::vector<ProjVector> farey_neighbors(const ProjVector& v, long long height) {
  if (v.dimension() != 2) throw InvalidInput("Farey neighbours need a length-2 vertex");
  std::vector<ProjVector> out;
  for (auto& w : enumerate_vertices(2, height)) {
    const Integer d = v[0] * w[1] - v[1] * w[0];
    if (d == 1 || d == -1) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace surfcx::torus
