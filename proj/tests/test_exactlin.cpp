#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "surfcx/exactlin.hpp"
#include "test_support.hpp"

#include <optional>

using namespace surfcx;
using namespace surfcx::exactlin;
using surfcx::testing::vec;

namespace {

// Minimal Bezout pair by exhaustive search, same tie order as xgcd:
// least |x|, then least |y|, then x > 0.
std::optional<Bezout> brute_bezout(long long a, long long b) {
  const long long g = surfcx::testing::euclid_gcd(a, b);
  if (g == 0) return Bezout{0, 0, 0};
  const long long bound = std::max<long long>(1, surfcx::testing::iabs(b / g));
  std::optional<Bezout> best;
  for (long long x = -bound; x <= bound; ++x) {
    if (b == 0) {
      if (a * x != g) continue;
      Bezout c{g, x, 0};
      if (!best) best = c;
      continue;
    }
    const long long rest = g - a * x;
    if (rest % b != 0) continue;
    const long long y = rest / b;
    const auto key = [](const Bezout& p) {
      const long long px = static_cast<long long>(p.x), py = static_cast<long long>(p.y);
      return std::tuple(surfcx::testing::iabs(px), surfcx::testing::iabs(py), px > 0 ? 0 : 1);
    };
    Bezout c{g, x, y};
    if (!best || key(c) < key(*best)) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("xgcd examples") {
  CHECK(xgcd(2, 3) == Bezout{1, -1, 1});
  CHECK(xgcd(0, 5) == Bezout{5, 0, 1});
  // 9*(-1) + (-10)*(-1) = 1 is the least Bezout pair.
  CHECK(xgcd(9, -10) == Bezout{1, -1, -1});
  CHECK(xgcd(0, 0) == Bezout{0, 0, 0});
  CHECK(xgcd(-7, 0) == Bezout{7, -1, 0});
  CHECK(xgcd(1, 2) == Bezout{1, 1, 0});
}

TEST_CASE("xgcd matches the exhaustive minimal pair on a [-60,60] grid") {
  for (long long a = -60; a <= 60; ++a)
    for (long long b = -60; b <= 60; ++b) {
      const auto r = xgcd(a, b);
      const auto expected = brute_bezout(a, b);
      REQUIRE(expected.has_value());
      REQUIRE_MESSAGE(r == *expected, "a=" << a << " b=" << b);
    }
}

TEST_CASE("xgcd bounds on large inputs") {
  surfcx::testing::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    Integer a = rng.uniform(-1'000'000'000, 1'000'000'000);
    Integer b = rng.uniform(-1'000'000'000, 1'000'000'000);
    a *= rng.uniform(1, 1'000'000'000);
    const auto r = xgcd(a, b);
    CHECK(a * r.x + b * r.y == r.g);
    CHECK(r.g == gcd(a, b));
    if (r.g != 0) {
      CHECK(abs(r.x) <= std::max<Integer>(1, abs(b / r.g)));
      CHECK(abs(r.y) <= std::max<Integer>(1, abs(a / r.g)));
    }
  }
}

TEST_CASE("content") {
  CHECK(content(vec({-2, 4, -6})) == 2);
  CHECK(content(vec({0, 0, 1})) == 1);
  CHECK(content(vec({9, -10, 0})) == 1);
  CHECK(content(vec({0, 0, 0})) == 0);
}

TEST_CASE("det examples") {
  CHECK(det(IntMatrix{{0, 1, 0}, {-1, 2, 0}, {0, 0, 1}}) == 1);
  CHECK(det(IntMatrix::identity(3)) == 1);
  CHECK(det(IntMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 2}}) == 2);
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), InvalidInput);
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  surfcx::testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    auto m = rng.matrix(n, n, trial % 3 == 0 ? 2 : 100);
    REQUIRE(det(m) == surfcx::testing::cofactor_det(m));
  }
}

TEST_CASE("minors_gcd examples") {
  const std::vector<IntVector> a{vec({1, 0, 0}), vec({0, 1, 2})};
  CHECK(minors_gcd(IntMatrix::from_columns(a), 2) == 1);
  const std::vector<IntVector> b{vec({1, 0, 0}), vec({1, 2, 0})};
  CHECK(minors_gcd(IntMatrix::from_columns(b), 2) == 2);
  const std::vector<IntVector> c{vec({2, 3, 5})};
  CHECK(minors_gcd(IntMatrix::from_columns(c), 1) == 1);
  CHECK_THROWS_AS(minors_gcd(IntMatrix::from_columns(c), 2), InvalidInput);
  CHECK_THROWS_AS(minors_gcd(IntMatrix::from_columns(c), 0), InvalidInput);
}

TEST_CASE("smith_normal_form examples") {
  {
    const IntMatrix a{{9, -10}};
    const auto snf = smith_normal_form(a);
    CHECK(snf.d == IntMatrix{{1, 0}});
    CHECK(verify_snf(a, snf));
  }
  {
    const IntMatrix zero(2, 3);
    const auto snf = smith_normal_form(zero);
    CHECK(snf.d == zero);
    CHECK(snf.u == IntMatrix::identity(2));
    CHECK(snf.v == IntMatrix::identity(3));
  }
  {
    const IntMatrix a{{2, 4}, {6, 8}};
    const auto snf = smith_normal_form(a);
    CHECK(snf.d == IntMatrix{{2, 0}, {0, 4}});
    CHECK(verify_snf(a, snf));
  }
}

TEST_CASE("smith_normal_form certificates on random matrices") {
  surfcx::testing::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    const auto a = rng.matrix(m, n, trial % 4 == 0 ? 3 : 100);
    const auto snf = smith_normal_form(a);
    REQUIRE(verify_snf(a, snf));
    if (m == n) {
      Integer prod = 1;
      for (const auto& x : snf.diagonal()) prod *= x;
      CHECK(prod == abs(det(a)));
    }
  }
}

TEST_CASE("minors_gcd is 1 exactly when the SNF has k unit diagonal entries") {
  // Every 3x2 matrix with entries in [-3,3].
  std::array<long long, 6> e{};
  std::size_t checked = 0;
  const auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == e.size()) {
      IntMatrix a{{e[0], e[1]}, {e[2], e[3]}, {e[4], e[5]}};
      const auto diag = smith_normal_form(a).diagonal();
      for (std::size_t k = 1; k <= 2; ++k) {
        std::size_t ones = 0;
        for (const auto& d : diag)
          if (d == 1) ++ones;
        REQUIRE((minors_gcd(a, k) == 1) == (ones >= k));
      }
      ++checked;
      return;
    }
    for (long long x = -3; x <= 3; ++x) {
      e[pos] = x;
      self(self, pos + 1);
    }
  };
  recurse(recurse, 0);
  CHECK(checked == 117649);
}

TEST_CASE("complete_to_unimodular examples") {
  {
    const auto m = complete_to_unimodular(vec({0, 0, 1}));
    CHECK(det(m) == 1);
    CHECK(m.column(0) == vec({0, 0, 1}));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) CHECK(abs(m(r, c)) <= 1);
  }
  {
    const auto m = complete_to_unimodular(vec({2, 3, 5}));
    CHECK(det(m) == 1);
    CHECK(m.column(0) == vec({2, 3, 5}));
  }
  CHECK(complete_to_unimodular(vec({1, 0, 0})) == IntMatrix::identity(3));
  CHECK(det(complete_to_unimodular(vec({-1, 0, 0}))) == 1);
  CHECK_THROWS_AS(complete_to_unimodular(vec({2, 4, 6})), InvalidInput);
  CHECK_THROWS_AS(complete_to_unimodular(vec({0, 0, 0})), InvalidInput);
  CHECK_THROWS_AS(complete_to_unimodular(vec({-1})), InvalidInput);
}

TEST_CASE("complete_with_inverse: exhaustive small primitive vectors") {
  std::size_t count = 0;
  for (long long x = -10; x <= 10; ++x)
    for (long long y = -10; y <= 10; ++y)
      for (long long z = -10; z <= 10; ++z) {
        const auto v = vec({x, y, z});
        if (content(v) != 1) continue;
        const auto [m, inv] = complete_with_inverse(v);
        REQUIRE(det(m) == 1);
        REQUIRE(m.column(0) == v);
        REQUIRE(m * inv == IntMatrix::identity(3));
        ++count;
      }
  CHECK(count > 7000);
}

TEST_CASE("complete_to_unimodular on large and higher-dimensional vectors") {
  surfcx::testing::Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 6));
    const auto v = rng.primitive(n, 1'000'000);
    const auto [m, inv] = complete_with_inverse(v);
    REQUIRE(det(m) == 1);
    REQUIRE(m.column(0) == v);
    REQUIRE(inv * m == IntMatrix::identity(n));
  }
}

TEST_CASE("bezout_vector and cross") {
  const auto v = vec({6, 10, 15});
  const auto w = bezout_vector(v);
  Integer dot = 0;
  for (std::size_t i = 0; i < 3; ++i) dot += v[i] * w[i];
  CHECK(dot == 1);
  CHECK(cross(vec({1, 0, 0}), vec({1, 2, 0})) == vec({0, 0, 2}));
  CHECK(cross(vec({1, 1, 1}), vec({1, 2, 0})) == vec({-2, 1, 1}));
  CHECK(bezout_vector(vec({0, 0})) == vec({0, 0}));
}
