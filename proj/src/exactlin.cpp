#include "surfcx/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace surfcx::exactlin {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns) {
  if (columns.empty()) throw InvalidInput("no columns");
  const std::size_t n = columns.front().size();
  IntMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) throw InvalidInput("columns of unequal length");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
  IntMatrix s(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      s(i, j) = (*this)(row_idx[i], col_idx[j]);
  return s;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw InvalidInput("matrix shapes do not compose");
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Integer& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVector operator*(const IntMatrix& lhs, std::span<const Integer> rhs) {
  if (lhs.cols() != rhs.size()) throw InvalidInput("matrix and vector shapes differ");
  IntVector out(lhs.rows());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) out[i] += lhs(i, k) * rhs[k];
  return out;
}

namespace {

Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

int sign_of(const Integer& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

// Floor-mod into [0, m) for m > 0.
Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_value(a / gcd(a, b) * b);
}

Bezout xgcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) return {0, 0, 0};
  if (b == 0) return {abs_value(a), sign_of(a), 0};

  // Iterative extended Euclid on the signed inputs.
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  const Integer g = r0;

  // All solutions: x = x0 + j*(b/g). Pick the least |x|; break ties on |y|,
  // then on x > 0.
  const Integer period = abs_value(b / g);
  const Integer low = floor_mod(s0, period);
  auto y_for = [&](const Integer& x) { return (g - a * x) / b; };

  Bezout best{g, low, y_for(low)};
  if (low != 0) {
    const Integer alt = low - period;
    Bezout other{g, alt, y_for(alt)};
    const Integer bx = abs_value(best.x), ox = abs_value(other.x);
    const Integer by = abs_value(best.y), oy = abs_value(other.y);
    if (ox < bx || (ox == bx && oy < by)) best = other;
  }
  return best;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

Integer det(const IntMatrix& a) {
  if (!a.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Calls f(indices) for every increasing k-subset of {0..n-1}; stops early
// when f returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!f(std::span<const std::size_t>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Integer minors_gcd(const IntMatrix& a, std::size_t k) {
  if (k == 0 || k > std::min(a.rows(), a.cols()))
    throw InvalidInput("minor size out of range");
  Integer g = 0;
  for_each_subset(a.rows(), k, [&](std::span<const std::size_t> rows) {
    return for_each_subset(a.cols(), k, [&](std::span<const std::size_t> cols) {
      g = gcd(g, det(a.submatrix(rows, cols)));
      return g != 1;
    });
  });
  return g;
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  for (const auto& x : diagonal())
    if (x != 0) ++r;
  return r;
}

SNFResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero |entry| in the active block, row-major first hit.
      bool found = false;
      std::size_t pr = t, pc = t;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Integer mag = abs_value(d(i, j));
          if (!found || mag < best) {
            found = true;
            best = std::move(mag);
            pr = i;
            pc = j;
          }
        }
      if (!found) return {std::move(u), std::move(d), std::move(v)};

      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = -(d(i, t) / d(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = -(d(t, j) / d(t, t));
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise pull in the
      // offending row and reduce again.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (!divides) continue;

      if (d(t, t) < 0) {
        d.negate_row(t);
        u.negate_row(t);
      }
      break;
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

bool verify_snf(const IntMatrix& a, const SNFResult& snf) {
  const std::size_t m = a.rows(), n = a.cols();
  if (snf.u.rows() != m || snf.u.cols() != m) return false;
  if (snf.v.rows() != n || snf.v.cols() != n) return false;
  if (snf.d.rows() != m || snf.d.cols() != n) return false;
  if (snf.u * a * snf.v != snf.d) return false;
  if (abs_value(det(snf.u)) != 1 || abs_value(det(snf.v)) != 1) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && snf.d(i, j) != 0) return false;
  const auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size()) {
      if (diag[i] == 0 ? diag[i + 1] != 0 : diag[i + 1] % diag[i] != 0) return false;
    }
  }
  return true;
}

UnimodularCompletion complete_with_inverse(std::span<const Integer> v) {
  const std::size_t n = v.size();
  if (n == 0) throw InvalidInput("empty vector");
  if (content(v) != 1) throw InvalidInput("vector is not primitive");

  // Invariant: c * w == v and cinv * c == I. Each step sends (w0, wj) to
  // (gcd, 0) with a determinant-one 2x2 block.
  IntMatrix c = IntMatrix::identity(n);
  IntMatrix cinv = IntMatrix::identity(n);
  Integer w0 = v[0];
  for (std::size_t j = 1; j < n; ++j) {
    const Integer& q = v[j];
    if (q == 0) continue;
    const Integer p = w0;
    const auto [g, s, t] = xgcd(p, q);
    const Integer pg = p / g, qg = q / g;
    for (std::size_t r = 0; r < n; ++r) {
      const Integer c0 = c(r, 0), cj = c(r, j);
      c(r, 0) = c0 * pg + cj * qg;
      c(r, j) = cj * s - c0 * t;
    }
    for (std::size_t col = 0; col < n; ++col) {
      const Integer r0 = cinv(0, col), rj = cinv(j, col);
      cinv(0, col) = s * r0 + t * rj;
      cinv(j, col) = pg * rj - qg * r0;
    }
    w0 = g;
  }
  if (w0 == -1) {
    if (n < 2) throw InvalidInput("(-1) has no determinant-one completion in dimension 1");
    for (std::size_t r = 0; r < n; ++r) {
      c(r, 0) = -c(r, 0);
      c(r, 1) = -c(r, 1);
    }
    cinv.negate_row(0);
    cinv.negate_row(1);
  }
  return {std::move(c), std::move(cinv)};
}

IntMatrix complete_to_unimodular(std::span<const Integer> v) {
  return complete_with_inverse(v).matrix;
}

IntVector bezout_vector(std::span<const Integer> v) {
  IntVector w(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const auto [ng, s, t] = xgcd(g, v[i]);
    for (std::size_t j = 0; j < i; ++j) w[j] *= s;
    w[i] = t;
    g = ng;
  }
  return w;
}

IntVector cross(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != 3 || b.size() != 3) throw InvalidInput("cross product needs length-3 vectors");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::string join(std::span<const Integer> v, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

}  // namespace surfcx::exactlin
