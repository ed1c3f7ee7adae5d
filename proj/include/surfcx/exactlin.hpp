#pragma once

// Exact integer linear algebra: Bezout coefficients, determinants, minors,
// Smith normal form with unimodular certificates, and unimodular completion
// of primitive vectors. Everything here is a pure function of its inputs.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfcx {

using Integer = boost::multiprecision::cpp_int;

/// Raised when an argument violates an operation's precondition
/// (non-primitive vector, non-square matrix, malformed invariants, ...).
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a freshly built certificate fails its own verification.
/// Seeing one of these means a bug, not bad input.
class CertificateError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

namespace exactlin {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::span<const IntVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntVector column(std::size_t c) const;
  IntVector row(std::size_t r) const;
  IntMatrix transposed() const;
  IntMatrix submatrix(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  bool operator==(const IntMatrix&) const = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs);
IntVector operator*(const IntMatrix& lhs, std::span<const Integer> rhs);

struct Bezout {
  Integer g;
  Integer x;
  Integer y;
  bool operator==(const Bezout&) const = default;
};

/// a*x + b*y = g with g = gcd(a, b) >= 0.
///
/// Among all Bezout pairs the one returned minimises |x|, then |y|, and
/// prefers x > 0 on a remaining tie. xgcd(0, 0) = (0, 0, 0).
Bezout xgcd(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// gcd of the entries, >= 0; zero exactly for the zero vector.
Integer content(std::span<const Integer> v);

/// Fraction-free (Bareiss) elimination. Throws InvalidInput on non-square.
Integer det(const IntMatrix& a);

/// gcd (>= 0) of all k x k minors. Throws InvalidInput unless
/// 1 <= k <= min(rows, cols).
Integer minors_gcd(const IntMatrix& a, std::size_t k);

struct SNFResult {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal, d11 | d22 | ...
  IntMatrix v;  // cols x cols, unimodular

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

/// U * A * V = D. Pivot: smallest nonzero |entry| of the active block,
/// first in row-major order. Diagonal entries are made nonnegative by
/// negating rows of U.
SNFResult smith_normal_form(const IntMatrix& a);

/// True iff U*A*V == D, both transforms are unimodular, D is diagonal,
/// nonnegative and satisfies the divisibility chain.
bool verify_snf(const IntMatrix& a, const SNFResult& snf);

struct UnimodularCompletion {
  IntMatrix matrix;   // first column is the input vector, det = 1
  IntMatrix inverse;  // exact inverse of matrix
};

/// Square matrix with first column v and determinant exactly 1, together
/// with its inverse. Throws InvalidInput unless content(v) = 1.
UnimodularCompletion complete_with_inverse(std::span<const Integer> v);

IntMatrix complete_to_unimodular(std::span<const Integer> v);

/// Some w with w . v = content(v). For v = 0 returns the zero vector.
IntVector bezout_vector(std::span<const Integer> v);

/// a x b for length-3 vectors.
IntVector cross(std::span<const Integer> a, std::span<const Integer> b);

/// Decimal rendering of a vector as "x,y,z".
std::string join(std::span<const Integer> v, char sep = ',');

}  // namespace exactlin
}  // namespace surfcx
