#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "surfcx/graph_io.hpp"
#include "surfcx/toruscomplex.hpp"
#include "test_support.hpp"

#include <map>
#include <set>

using namespace surfcx;
using namespace surfcx::torus;
using surfcx::testing::vec;

namespace {

ProjVector pv(std::initializer_list<long long> xs) { return canonicalize(vec(xs)); }

std::vector<ProjVector> pvs(std::initializer_list<std::initializer_list<long long>> xs) {
  std::vector<ProjVector> out;
  for (auto x : xs) out.push_back(pv(x));
  return out;
}

// Brute-force 2x2-minor gcd of the 3x2 matrix (a b) in plain integers.
long long minor_gcd3(const std::array<long long, 3>& a, const std::array<long long, 3>& b) {
  long long g = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) g = surfcx::testing::euclid_gcd(g, a[i] * b[j] - a[j] * b[i]);
  return g;
}

std::vector<std::array<long long, 3>> brute_vertices3(long long h) {
  std::vector<std::array<long long, 3>> out;
  for (long long x = -h; x <= h; ++x)
    for (long long y = -h; y <= h; ++y)
      for (long long z = -h; z <= h; ++z) {
        const long long first = x != 0 ? x : (y != 0 ? y : z);
        if (first <= 0) continue;
        if (surfcx::testing::euclid_gcd(surfcx::testing::euclid_gcd(x, y), z) != 1) continue;
        out.push_back({x, y, z});
      }
  return out;
}

}  // namespace

TEST_CASE("canonicalize") {
  CHECK(pv({0, -1, 0}).vector() == vec({0, 1, 0}));
  CHECK(pv({1, 2, 0}).vector() == vec({1, 2, 0}));
  CHECK_THROWS_AS(pv({-2, 4, -6}), InvalidInput);
  CHECK_THROWS_AS(pv({0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(pv({1}), InvalidInput);
}

TEST_CASE("canonicalize is sign invariant and idempotent up to max-norm 5") {
  for (long long x = -5; x <= 5; ++x)
    for (long long y = -5; y <= 5; ++y)
      for (long long z = -5; z <= 5; ++z) {
        const auto v = vec({x, y, z});
        if (exactlin::content(v) != 1) continue;
        const auto c = canonicalize(v);
        const auto neg = vec({-x, -y, -z});
        REQUIRE(canonicalize(neg) == c);
        REQUIRE(canonicalize(c.coords()) == c);
      }
}

TEST_CASE("finegold simplex examples") {
  CHECK_FALSE(is_finegold_simplex(pvs({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), 3));
  CHECK(is_finegold_simplex(pvs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3));
  CHECK(is_finegold_simplex(pvs({{2, 3, 5}, {1, 2, 0}}), 3));

  const auto check = finegold_simplex_check(pvs({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}}), 3);
  REQUIRE(check.witnesses.size() == 1);
  CHECK(check.witnesses[0].minors_gcd == 2);
}

TEST_CASE("finegold simplex with n+1 vertices checks every facet") {
  // In C(T^2) a triangle is three pairwise Farey-adjacent classes.
  CHECK(is_finegold_simplex(pvs({{1, 0}, {0, 1}, {1, 1}}), 2));
  CHECK_FALSE(is_finegold_simplex(pvs({{1, 0}, {0, 1}, {1, 2}}), 2));
  const auto tet = pvs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  const auto check = finegold_simplex_check(tet, 3);
  CHECK(check.spans);
  CHECK(check.witnesses.size() == 4);
  CHECK_FALSE(is_finegold_simplex(pvs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 2}}), 3));
}

TEST_CASE("finegold simplex errors") {
  CHECK_THROWS_AS(is_finegold_simplex(pvs({{1, 0, 0}}), 3), InvalidInput);
  CHECK_THROWS_AS(is_finegold_simplex(pvs({{1, 0, 0}, {1, 0, 0}}), 3), InvalidInput);
  CHECK_THROWS_AS(is_finegold_simplex(pvs({{1, 0}, {0, 1}}), 3), InvalidInput);
  CHECK_THROWS_AS(
      is_finegold_simplex(pvs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 1, 0}}), 3),
      InvalidInput);
}

TEST_CASE("s1_edge and intersection_components examples") {
  CHECK(s1_edge(pv({1, 0, 0}), pv({0, 1, 0})));
  CHECK_FALSE(s1_edge(pv({1, 0, 0}), pv({1, 2, 0})));
  CHECK(s1_edge(pv({1, 2, 0}), pv({0, 0, 1})));
  CHECK_THROWS_AS(s1_edge(pv({1, 2, 0}), pv({-1, -2, 0})), InvalidInput);

  CHECK(intersection_components(pv({1, 0, 0}), pv({0, 1, 0})) == 1);
  CHECK(intersection_components(pv({1, 0, 0}), pv({1, 2, 0})) == 2);
  CHECK(intersection_components(pv({1, 1, 1}), pv({1, 2, 0})) == 1);
  CHECK_THROWS_AS(intersection_components(pv({1, 1, 1}), pv({1, 1, 1})), InvalidInput);
}

TEST_CASE("edge predicates agree on all pairs up to height 3") {
  const auto vs = enumerate_vertices(3, 3);
  const auto brute = brute_vertices3(3);
  REQUIRE(vs.size() == brute.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const std::array<ProjVector, 2> pair{vs[i], vs[j]};
      const bool edge = s1_edge(vs[i], vs[j]);
      REQUIRE(edge == is_finegold_simplex(pair, 3));
      REQUIRE(edge == (intersection_components(vs[i], vs[j]) == 1));
      REQUIRE(edge == (minor_gcd3(brute[i], brute[j]) == 1));
    }
}

TEST_CASE("the surface 2-skeleton strictly contains the finegold one") {
  const auto triple = pvs({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
  CHECK(surface_simplex_check(triple).spans);
  CHECK_FALSE(is_finegold_simplex(triple, 3));
}

TEST_CASE("seven vectors span a 6-simplex of S(T^3)") {
  // The listed 6-simplex shows eight vectors; (1,0,0) and (1,2,0) meet in two
  // curves, so only the remaining seven form a simplex.
  const auto seven = pvs({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {1, 2, 0}});
  const auto check = surface_simplex_check(seven);
  CHECK(check.spans);
  CHECK(check.witnesses.size() == 21);
  auto eight = seven;
  eight.insert(eight.begin(), pv({1, 0, 0}));
  CHECK_FALSE(surface_simplex_check(eight).spans);
  CHECK(intersection_components(pv({1, 0, 0}), pv({1, 2, 0})) == 2);
}

TEST_CASE("axis_path through an intermediate vertical torus") {
  const auto path = axis_path(pv({2, 3, 5}), pv({0, 0, 1}));
  REQUIRE(path.edge_count() == 2);
  CHECK(path.waypoints[0] == pv({2, 3, 5}));
  CHECK(path.waypoints[1] == pv({1, 2, 0}));
  CHECK(path.waypoints[2] == pv({0, 0, 1}));
  CHECK(path.witnesses[0] == exactlin::IntMatrix{{2, 1, 0}, {3, 2, 0}, {5, 0, 1}});
  CHECK(exactlin::det(path.witnesses[1]) == 1);
  CHECK(path.transform == exactlin::IntMatrix::identity(3));
  CHECK(verify_path(path));
}

TEST_CASE("connect_path single hop and coordinate change") {
  // gcd(2, 3) = 1, so (2,3,5) already meets (0,0,1) in one curve.
  const auto direct = connect_path(pv({2, 3, 5}), pv({0, 0, 1}));
  CHECK(direct.edge_count() == 1);
  CHECK(verify_path(direct));

  const auto one = connect_path(pv({1, 0, 0}), pv({0, 1, 0}));
  CHECK(one.edge_count() == 1);
  CHECK(one.witnesses[0] == exactlin::IntMatrix::identity(3));

  const auto two = connect_path(pv({1, 2, 0}), pv({1, 0, 0}));
  CHECK(two.edge_count() == 2);
  CHECK(s1_edge(two.waypoints[0], two.waypoints[1]));
  CHECK(s1_edge(two.waypoints[1], two.waypoints[2]));
  CHECK(exactlin::det(two.transform) == 1);
  CHECK(two.transform * pv({1, 0, 0}).coords() == vec({0, 0, 1}));

  const auto g = build_graph(GraphKind::SurfaceComplexS1, 2);
  CHECK(bfs_distance(g, pv({1, 2, 0}), pv({1, 0, 0})) == 2u);
  CHECK_THROWS_AS(connect_path(pv({1, 2, 0}), pv({1, 2, 0})), InvalidInput);
}

TEST_CASE("verify_path rejects tampered certificates") {
  auto path = axis_path(pv({2, 3, 5}), pv({0, 0, 1}));
  auto bad_witness = path;
  bad_witness.witnesses[0](0, 2) += 1;
  CHECK_FALSE(verify_path(bad_witness));
  auto bad_mid = path;
  bad_mid.waypoints[1] = pv({1, 1, 0});
  CHECK_FALSE(verify_path(bad_mid));
}

TEST_CASE("connect_path never exceeds two edges and never beats BFS, height 3") {
  const auto g = build_graph(GraphKind::SurfaceComplexS1, 3);
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const auto path = connect_path(vs[i], vs[j]);
      REQUIRE(path.edge_count() <= 2);
      const auto d = bfs_distance(g, vs[i], vs[j]);
      if (d) REQUIRE(path.edge_count() >= *d);
      REQUIRE(path.edge_count() == (s1_edge(vs[i], vs[j]) ? 1u : 2u));
      REQUIRE(verify_path(axis_path(vs[i], vs[j])));
    }
}

TEST_CASE("connect_path on large random pairs") {
  surfcx::testing::Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto a = canonicalize(rng.primitive(3, 1'000'000));
    const auto b = canonicalize(rng.primitive(3, 1'000'000));
    if (a == b) continue;
    const auto path = connect_path(a, b);
    REQUIRE(verify_path(path));
    REQUIRE(path.waypoints.front() == a);
    REQUIRE(path.waypoints.back() == b);
    const auto via = axis_path(a, b);
    REQUIRE(via.edge_count() == 2);
    REQUIRE(verify_path(via));
  }
}

TEST_CASE("enumerate_vertices") {
  CHECK(enumerate_vertices(2, 1) == pvs({{0, 1}, {1, -1}, {1, 0}, {1, 1}}));
  CHECK(enumerate_vertices(3, 1).size() == 13);
  CHECK_THROWS_AS(enumerate_vertices(2, 0), InvalidInput);
  CHECK_THROWS_AS(enumerate_vertices(1, 3), InvalidInput);
  for (long long h = 1; h <= 4; ++h) {
    const auto vs = enumerate_vertices(3, h);
    CHECK(vs.size() == brute_vertices3(h).size());
    CHECK(std::is_sorted(vs.begin(), vs.end()));
    CHECK(std::adjacent_find(vs.begin(), vs.end()) == vs.end());
  }
}

TEST_CASE("build_graph at height 1") {
  const auto g = build_graph(GraphKind::SurfaceComplexS1, 1);
  CHECK(g.vertices().size() == 13);
  const auto brute = brute_vertices3(1);
  std::size_t expected = 0;
  for (std::size_t i = 0; i < brute.size(); ++i)
    for (std::size_t j = i + 1; j < brute.size(); ++j)
      if (minor_gcd3(brute[i], brute[j]) == 1) ++expected;
  CHECK(g.edges().size() == expected);
  const auto z = g.index_of(pv({0, 0, 1}));
  REQUIRE(z);
  CHECK(g.degree(*z) >= 4);

  // For n = 3 both kinds carry the same 1-skeleton.
  CHECK(build_graph(GraphKind::FinegoldSkeleton, 2).edges() ==
        build_graph(GraphKind::SurfaceComplexS1, 2).edges());
}

TEST_CASE("build_graph Farey fragment and invariants") {
  const auto g = build_graph(GraphKind::FinegoldSkeleton, 1, 2);
  CHECK(g.vertices().size() == 4);
  const auto a = g.index_of(pv({1, 0}));
  const auto b = g.index_of(pv({0, 1}));
  REQUIRE(a);
  REQUIRE(b);
  const auto& nb = g.neighbors(*a);
  CHECK(std::find(nb.begin(), nb.end(), *b) != nb.end());

  const auto big = build_graph(GraphKind::SurfaceComplexS1, 3);
  for (const auto& [i, j] : big.edges()) {
    REQUIRE(i < j);
    REQUIRE(s1_edge(big.vertices()[i], big.vertices()[j]));
  }
  CHECK(std::is_sorted(big.edges().begin(), big.edges().end()));
  CHECK(build_graph(GraphKind::SurfaceComplexS1, 3).edges() == big.edges());
  CHECK_THROWS_AS(build_graph(GraphKind::SurfaceComplexS1, 1, 4), InvalidInput);
  CHECK(build_graph(GraphKind::FinegoldSkeleton, 1, 4).vertices().size() == 40);
}

TEST_CASE("bfs_distance") {
  const auto g1 = build_graph(GraphKind::SurfaceComplexS1, 1);
  CHECK(bfs_distance(g1, pv({1, 0, 0}), pv({0, 0, 1})) == 1u);
  CHECK(bfs_distance(g1, pv({1, 1, 0}), pv({1, 1, 0})) == 0u);
  CHECK_THROWS_AS(bfs_distance(g1, pv({1, 2, 0}), pv({1, 0, 0})), InvalidInput);
  const auto g2 = build_graph(GraphKind::SurfaceComplexS1, 2);
  CHECK(bfs_distance(g2, pv({1, 2, 0}), pv({1, 0, 0})) == 2u);
  CHECK(truncation_diameter(g2).diameter == 2);
  CHECK(truncation_diameter(g2).connected);
}

TEST_CASE("farey_neighbors") {
  CHECK(farey_neighbors(pv({1, 0}), 1) == pvs({{0, 1}, {1, -1}, {1, 1}}));
  const auto n01 = farey_neighbors(pv({0, 1}), 1);
  CHECK(std::find(n01.begin(), n01.end(), pv({1, 0})) != n01.end());
  const auto n11 = farey_neighbors(pv({1, 1}), 2);
  CHECK(std::find(n11.begin(), n11.end(), pv({1, 2})) != n11.end());
  CHECK(std::find(n11.begin(), n11.end(), pv({2, 1})) != n11.end());
  CHECK_THROWS_AS(farey_neighbors(pv({1, 0, 0}), 1), InvalidInput);
}

TEST_CASE("graph serialisation") {
  const auto g = build_graph(GraphKind::FinegoldSkeleton, 1, 2);
  const auto j = to_json(g);
  CHECK(j["kind"] == "finegold-skeleton");
  CHECK(j["height"] == 1);
  CHECK(j["vertices"] == nlohmann::json::parse("[[0,1],[1,-1],[1,0],[1,1]]"));
  for (const auto& e : j["edges"]) CHECK(e[0].get<int>() < e[1].get<int>());

  const auto dot = to_dot(g);
  CHECK(dot.find("graph ") == 0);
  CHECK(dot.find("\"0,1\" -- \"1,0\";") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);
}

TEST_CASE("bfs distance reports unreachable pairs") {
  const auto vs = pvs({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  const ComplexGraph g(GraphKind::SurfaceComplexS1, 3, 1, vs, {{0, 1}});
  CHECK(bfs_distance(g, vs[0], vs[1]) == std::size_t{1});
  CHECK(!bfs_distance(g, vs[0], vs[2]).has_value());
  const auto d = truncation_diameter(g);
  CHECK(!d.connected);
  CHECK(d.diameter == 1);
}
