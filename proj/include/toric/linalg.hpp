#ifndef TORIC_LINALG_HPP
#define TORIC_LINALG_HPP

// Exact integer and rational linear algebra: lattice vectors, dense
// matrices, determinants, Hermite and Smith normal forms, integer kernels.

#include <toric/number.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace toric {

/// A point of Z^n with arbitrary-precision coordinates.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : entries_(dim, Integer(0)) {}
  explicit LatticeVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<long long> values) {
    entries_.reserve(values.size());
    for (long long v : values) entries_.emplace_back(v);
  }

  std::size_t dim() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& x : entries_) g = gcd(g, x);
    return g;
  }

  /// Nonzero with coprime entries.
  bool is_primitive() const { return content() == 1; }

  LatticeVector operator-() const {
    LatticeVector out(*this);
    for (auto& x : out.entries_) x = -x;
    return out;
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  /// Lexicographic order; shorter vectors first.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                        b.entries_.begin(), b.entries_.end());
  }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out(a);
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] += b[i];
    return out;
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    LatticeVector out(a);
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] -= b[i];
    return out;
  }
  friend LatticeVector operator*(const Integer& s, const LatticeVector& a) {
    LatticeVector out(a);
    for (auto& x : out.entries_) x *= s;
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
  }

 private:
  std::vector<Integer> entries_;
};

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw ToricError("dot: dimension mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const RationalVector& a, const LatticeVector& b) {
  if (a.size() != b.dim()) throw ToricError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const LatticeVector& a, const RationalVector& b) { return dot(b, a); }

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw ToricError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RationalVector to_rational(const LatticeVector& v) {
  return RationalVector(v.begin(), v.end());
}

/// Divides by the gcd of the entries. Rejects the zero vector.
inline LatticeVector make_primitive(const LatticeVector& v) {
  Integer g = v.content();
  if (g == 0) throw ToricError("make_primitive: zero vector");
  std::vector<Integer> out;
  out.reserve(v.dim());
  for (const auto& x : v) out.push_back(x / g);
  return LatticeVector(std::move(out));
}

/// Smallest positive integer multiple of a nonzero rational vector, made primitive.
inline LatticeVector primitive_multiple(const RationalVector& v) {
  Integer den = 1;
  for (const auto& q : v) den = lcm(den, denominator_of(q));
  std::vector<Integer> scaled;
  scaled.reserve(v.size());
  for (const auto& q : v) scaled.push_back(numerator_of(q) * (den / denominator_of(q)));
  return make_primitive(LatticeVector(std::move(scaled)));
}

/// Dense row-major matrix over Integer or Rational.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ToricError("Matrix: ragged initializer");
      for (long long x : r) data_.emplace_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a matrix whose rows are the given lattice vectors.
  static Matrix from_rows(const std::vector<LatticeVector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].dim() != cols) throw ToricError("Matrix::from_rows: dimension mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = T(rows[i][j]);
    }
    return m;
  }

  /// Builds a matrix whose columns are the given lattice vectors.
  static Matrix from_columns(const std::vector<LatticeVector>& cols, std::size_t rows) {
    return from_rows(cols, rows).transpose();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
  }
  /// col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ToricError("Matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

inline RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

inline LatticeVector row_vector(const IntMatrix& m, std::size_t r) {
  return LatticeVector(m.row(r));
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer det(IntMatrix a) {
  if (a.rows() != a.cols()) throw ToricError("det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sgn = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sgn * a(n - 1, n - 1);
}

/// Row-reduced echelon form over Q in place; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = -a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) += f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const RationalMatrix& a) {
  RationalMatrix copy = a;
  return rref(copy).size();
}

inline std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

inline std::size_t rank(const std::vector<LatticeVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, dim));
}

/// Some solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<RationalVector> solve_exact(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw ToricError("solve_exact: right-hand side has wrong length");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

struct HermiteDecomposition {
  IntMatrix H;  ///< row-style Hermite normal form
  IntMatrix U;  ///< unimodular, U * A = H
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot).
inline HermiteDecomposition hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    while (true) {
      // Smallest nonzero entry in column c at or below row r becomes the pivot.
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) != 0 && (best == h.rows() || abs_value(h(i, c)) < abs_value(h(best, c)))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Integer q = h(i, c) / h(r, c);
        h.add_row(i, r, -q);
        u.add_row(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

struct SmithDecomposition {
  IntMatrix S;  ///< diagonal
  IntMatrix U;  ///< unimodular row transform
  IntMatrix V;  ///< unimodular column transform, U * A * V = S
  std::vector<Integer> elementary_divisors;  ///< min(rows, cols) entries, zeros trailing
};

/// Smith normal form by gcd-driven row and column reduction, always pivoting
/// on the smallest nonzero entry of the remaining block.
inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = s.rows();
  const std::size_t n = s.cols();
  const std::size_t k = std::min(m, n);

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (s(i, j) != 0 && (pr == m || abs_value(s(i, j)) < abs_value(s(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == m) break;  // remaining block is zero
      s.swap_rows(t, pr);
      u.swap_rows(t, pr);
      s.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        s.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        s.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      s.add_row(t, bad_row, 1);
      u.add_row(t, bad_row, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  std::vector<Integer> divisors;
  divisors.reserve(k);
  for (std::size_t t = 0; t < k; ++t) divisors.push_back(s(t, t));
  return {std::move(s), std::move(u), std::move(v), std::move(divisors)};
}

/// Basis of the lattice {x in Z^cols : A x = 0}, in Hermite normal form
/// (first nonzero entry of each vector positive).
inline std::vector<LatticeVector> integer_kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  // U * A^T = H; rows of U where H vanishes span the kernel of A.
  auto hnf = hermite_normal_form(a.transpose());
  std::vector<LatticeVector> kernel;
  for (std::size_t i = hnf.rank; i < n; ++i) kernel.push_back(row_vector(hnf.U, i));
  if (kernel.empty()) return kernel;
  auto reduced = hermite_normal_form(IntMatrix::from_rows(kernel, n));
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < reduced.rank; ++i) out.push_back(row_vector(reduced.H, i));
  return out;
}

inline std::vector<LatticeVector> integer_kernel_basis(const std::vector<LatticeVector>& rows,
                                                       std::size_t dim) {
  if (rows.empty()) {
    std::vector<LatticeVector> basis;
    for (std::size_t i = 0; i < dim; ++i) {
      LatticeVector e(dim);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  return integer_kernel_basis(IntMatrix::from_rows(rows, dim));
}

/// Canonical saturated lattice basis of the rational span of the vectors.
inline std::vector<LatticeVector> saturated_span_basis(const std::vector<LatticeVector>& vectors,
                                                       std::size_t dim) {
  if (vectors.empty()) return {};
  auto complement = integer_kernel_basis(vectors, dim);
  if (complement.empty()) return integer_kernel_basis(std::vector<LatticeVector>{}, dim);
  return integer_kernel_basis(complement, dim);
}

/// Orthogonal projection of v onto the complement of span(basis), scaled to a
/// primitive integer vector. Returns the zero vector if v lies in the span.
inline LatticeVector reduce_modulo_span(const LatticeVector& v, const std::vector<LatticeVector>& basis) {
  if (basis.empty()) return v.is_zero() ? v : make_primitive(v);
  const std::size_t k = basis.size();
  RationalMatrix gram(k, k);
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = Rational(dot(basis[i], basis[j]));
    rhs[i] = Rational(dot(basis[i], v));
  }
  auto coeffs = solve_exact(gram, rhs);
  if (!coeffs) throw ToricError("reduce_modulo_span: degenerate basis");
  RationalVector r = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) r[j] -= (*coeffs)[i] * basis[i][j];
  bool zero = std::all_of(r.begin(), r.end(), [](const Rational& q) { return q == 0; });
  if (zero) return LatticeVector(v.dim());
  return primitive_multiple(r);
}

}  // namespace toric

#endif  // TORIC_LINALG_HPP
