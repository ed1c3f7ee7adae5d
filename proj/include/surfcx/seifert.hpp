#pragma once

// Closed totally orientable Seifert fibered spaces <g, b, (a1,b1), ..., (ak,bk)>
// over an orientable base of genus g: Euler number, fundamental group
// presentation, homology, horizontal covering degree and the structure of
// the surface complex.

#include "surfcx/exactlin.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace surfcx::seifert {

using Rational = boost::multiprecision::cpp_rational;

struct Fiber {
  std::int64_t alpha;  // multiplicity of the cone point
  std::int64_t beta;

  auto operator<=>(const Fiber&) const = default;
};

struct SeifertInvariants {
  std::int64_t genus = 0;
  std::int64_t b = 0;
  std::vector<Fiber> fibers;

  bool operator==(const SeifertInvariants&) const = default;
};

/// Folds alpha = 1 fibers into b, reduces each beta into [1, alpha - 1]
/// (carrying the quotient into b) and sorts the fibers. Throws InvalidInput
/// for genus < 0, alpha <= 0 or gcd(alpha, beta) != 1.
SeifertInvariants normalize(const SeifertInvariants& inv);

/// e = b + sum beta_i / alpha_i.
Rational euler_number(const SeifertInvariants& inv);

/// "p/q" in lowest terms with q >= 1.
std::string to_string(const Rational& r);

/// lcm of the alpha_i (1 without exceptional fibers). Throws InvalidInput
/// when the Euler number is nonzero: there is no horizontal surface then.
Integer horizontal_degree(const SeifertInvariants& inv);

/// Words are sequences of signed 1-based generator indices; -i is the
/// inverse of generator i.
using Word = std::vector<int>;

struct PresentationData {
  std::vector<std::string> generators;  // a1, b1, ..., ag, bg, x1, ..., xk, h
  std::vector<Word> relators;
};

/// Surface relation h^-b [a1,b1]...[ag,bg] x1...xk, the commutators of h
/// with every other generator, then x_i^alpha_i h^beta_i. Empty words are
/// dropped, so <0, 0> has no relators.
PresentationData pi1_presentation(const SeifertInvariants& inv);

enum class EtaClass {
  Absent,              // Euler number nonzero: no horizontal class
  FiberClass,          // product case, eta = h
  ReducedCombination,  // eta is a combination of the x_i and h
};

struct HomologySummary {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, each divides the next
  EtaClass eta = EtaClass::Absent;

  bool operator==(const HomologySummary&) const = default;
};

/// Abelian group on the columns of `relations` with its rows as relators,
/// read off a Smith normal form.
HomologySummary abelian_group(const exactlin::IntMatrix& relations);

/// The (k+1) x (k+1) relation matrix over (x1, ..., xk, h): first row
/// (1, ..., 1, -b), then alpha_i x_i + beta_i h.
exactlin::IntMatrix fiber_relation_matrix(const SeifertInvariants& inv);

/// H_1 = Z^{2g} + coker(fiber_relation_matrix).
HomologySummary h1(const SeifertInvariants& inv);

/// Rank of H_2, equal to the free rank of H_1 by duality.
std::size_t h2_rank(const SeifertInvariants& inv);

/// Rank of H_2(M, dM) for a space fibered over the disk with k exceptional
/// fibers. Throws on k < 0.
int relative_h2_rank_disk_base(long long k);

/// Components of the (m, n) multicurve on a torus. Throws on (0, 0).
Integer torus_link_components(const Integer& m, const Integer& n);

enum class Verdict {
  IsoCurveComplex,
  ConeBounded,
  ConeExact,
  ConnectedAtLevelD,
  ProductS1Connected,
};

std::string_view to_string(Verdict v);

struct BaseSurface {
  std::int64_t genus;
  std::size_t punctures;
  bool operator==(const BaseSurface&) const = default;
};

struct StructureReport {
  Verdict verdict;
  BaseSurface base_surface;               // genus g with k punctures
  std::optional<Integer> d;               // present iff e = 0
  std::optional<int> diameter_bound;
  std::string theorem;
  /// Cone-exact case only: the common number of components in which a
  /// vertical torus meets the horizontal surface. Divides d.
  std::optional<Integer> d_t;
};

/// Structure of S(M), applied in order on the normalised invariants:
///  e != 0                                  -> IsoCurveComplex
///  g = 0, k in {4,5}, identical fibers     -> ConeExact
///  g = 0                                   -> ConeBounded
///  g >= 1, k = 0, b = 0                    -> ProductS1Connected (diam <= 4)
///  g >= 1                                  -> ConnectedAtLevelD
StructureReport classify_surface_complex(const SeifertInvariants& inv);

}  // namespace surfcx::seifert
