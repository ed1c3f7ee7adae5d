#pragma once

// Finegold's unoriented torus complex C(T^n) and the graph S_1(T^3) of
// essential tori in the 3-torus that meet in a single curve.
//
// Vertices are primitive integer vectors up to sign. Two vertices of
// S_1(T^3) are adjacent iff the 3x2 matrix of representatives extends to an
// element of SL(3,Z), i.e. iff the cross product is primitive. For n = 2 the
// same test is the Farey graph.

#include "surfcx/exactlin.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surfcx::torus {

using exactlin::IntMatrix;
using exactlin::IntVector;

/// A primitive integer vector normalised so its first nonzero coordinate is
/// positive. Only constructible through canonicalize().
class ProjVector {
public:
  std::span<const Integer> coords() const noexcept { return coords_; }
  const IntVector& vector() const noexcept { return coords_; }
  std::size_t dimension() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  /// Lexicographic on the integer coordinates (shorter vectors first).
  std::strong_ordering operator<=>(const ProjVector& other) const;
  bool operator==(const ProjVector& other) const = default;

  std::string to_string() const { return exactlin::join(coords_); }

private:
  friend ProjVector canonicalize(std::span<const Integer> v);
  explicit ProjVector(IntVector coords) : coords_(std::move(coords)) {}
  IntVector coords_;
};

/// Throws InvalidInput for the zero vector, for content > 1, and for
/// length < 2. Never rescales.
ProjVector canonicalize(std::span<const Integer> v);

struct MinorWitness {
  std::vector<std::size_t> members;  // indices into the tested vertex list
  Integer minors_gcd;
};

struct SimplexCheck {
  bool spans = false;
  std::vector<MinorWitness> witnesses;
};

/// Simplex test in C(T^n). For k+1 <= n vertices one witness (the gcd of the
/// maximal minors of the n x (k+1) matrix); for n+1 vertices one witness per
/// facet. Throws on size out of [2, n+1], wrong lengths or repeated classes.
SimplexCheck finegold_simplex_check(std::span<const ProjVector> vs, std::size_t n);

bool is_finegold_simplex(std::span<const ProjVector> vs, std::size_t n);

/// Simplex test in the flag complex S_1(T^3) (or the Farey complex for
/// n = 2): every pair must be an edge. One witness per pair.
SimplexCheck surface_simplex_check(std::span<const ProjVector> vs);

/// Edge of S_1(T^3). Throws on equal classes or length != 3.
bool s1_edge(const ProjVector& a, const ProjVector& b);

/// Content of a x b: the least number of components in which the flat tori
/// dual to a and b meet. Always >= 1 for distinct classes.
Integer intersection_components(const ProjVector& a, const ProjVector& b);

/// A path of at most two edges in S_1(T^3) together with determinant-one
/// witnesses for each edge.
struct PathCertificate {
  std::vector<ProjVector> waypoints;
  /// witnesses[i] has representatives of waypoints[i], waypoints[i+1] as its
  /// first two columns.
  std::vector<IntMatrix> witnesses;
  /// Coordinate change sending the target to (0,0,1); identity for one hop.
  IntMatrix transform;

  std::size_t edge_count() const noexcept {
    return waypoints.empty() ? 0 : waypoints.size() - 1;
  }
};

/// Shortest certified path from a to b: one edge when s1_edge(a, b),
/// otherwise axis_path(a, b). Throws InvalidInput on equal classes and
/// CertificateError if a witness fails to verify.
PathCertificate connect_path(const ProjVector& a, const ProjVector& b);

/// Always two edges. A coordinate change sends b to (0,0,1) and a to
/// (p, q, r); the middle vertex is (x, y, 0) with p*y - q*x = gcd(p, q) and
/// the least nonnegative x, pulled back to the original coordinates.
PathCertificate axis_path(const ProjVector& a, const ProjVector& b);

/// Independent check of every certificate invariant.
bool verify_path(const PathCertificate& path);

/// All canonical primitive vectors of length n with max-norm <= height,
/// lexicographically sorted. Throws if height < 1 or n < 2.
std::vector<ProjVector> enumerate_vertices(std::size_t n, long long height);

enum class GraphKind { FinegoldSkeleton, SurfaceComplexS1 };

std::string_view to_string(GraphKind kind);
std::optional<GraphKind> parse_graph_kind(std::string_view name);

/// Truncation of a complex's 1-skeleton to vertices of bounded height.
/// Distances inside it bound the true distances from above only.
class ComplexGraph {
public:
  ComplexGraph(GraphKind kind, std::size_t dimension, long long height,
               std::vector<ProjVector> vertices,
               std::vector<std::pair<std::size_t, std::size_t>> edges);

  GraphKind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return dimension_; }
  long long height() const noexcept { return height_; }
  const std::vector<ProjVector>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept {
    return edges_;
  }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

  std::optional<std::size_t> index_of(const ProjVector& v) const;

private:
  GraphKind kind_;
  std::size_t dimension_;
  long long height_;
  std::vector<ProjVector> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Upper limit on height so the pairwise predicate runs in 64-bit arithmetic.
inline constexpr long long kMaxGraphHeight = 1 << 20;

/// Graph over enumerate_vertices(dimension, height); edges sorted with i < j.
/// The surface kind is defined for dimension 2 and 3 only. Pairs are tested
/// in parallel; the result does not depend on scheduling.
ComplexGraph build_graph(GraphKind kind, long long height, std::size_t dimension = 3);

/// Shortest edge count inside the truncation, nullopt if unreachable there.
/// Throws InvalidInput if either vertex is not in the graph.
std::optional<std::size_t> bfs_distance(const ComplexGraph& g, const ProjVector& a,
                                        const ProjVector& b);

struct TruncationDiameter {
  std::size_t diameter = 0;                 // over reachable pairs
  std::pair<std::size_t, std::size_t> pair{0, 0};  // first pair realising it
  bool connected = true;
};

TruncationDiameter truncation_diameter(const ComplexGraph& g);

/// Farey neighbours of v = (p, q): canonical (r, s) with max-norm <= height
/// and |p*s - q*r| = 1.
std::vector<ProjVector> farey_neighbors(const ProjVector& v, long long height);

}  // namespace surfcx::torus
