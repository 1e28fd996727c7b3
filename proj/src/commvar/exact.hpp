#pragma once

// Exact linear algebra over Z, Q and Q(i): dense matrices, rank (fraction-free
// elimination), kernels, solving and Smith normal form.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace commvar {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Error raised when an operation receives structurally invalid input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InvalidArgument("from_columns: ragged column");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InvalidArgument("from_rows: ragged row");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

RatVector operator*(const RatMatrix& a, const RatVector& v);

/// Rank over Q. Rows are cleared of denominators and reduced with Bareiss'
/// fraction-free elimination, so every intermediate entry is a minor of A.
std::size_t rank(const RatMatrix& a);
std::size_t rank(const IntMatrix& a);

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<std::size_t> rref_in_place(RatMatrix& a);

/// Basis of {v : A v = 0}. Each vector has a 1 in its free coordinate and 0 in
/// the other free coordinates.
std::vector<RatVector> kernel_basis(const RatMatrix& a);

/// Some solution of A v = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Scales v by a positive rational so that it becomes a primitive integer vector.
RatVector primitive(const RatVector& v);

/// Gaussian rationals a + b*i, just enough field structure for elimination.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(int v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) { return a * b.inverse(); }
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator==(const GaussRational& a, int b) { return a.re == b && a.im == 0; }
};

/// Rank by plain Gaussian elimination over any exact field type.
template <class F>
std::size_t field_rank(Matrix<F> a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    const F inv = F(1) / a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const F f = a(i, c) * inv;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (d_i >= 0).
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  [[nodiscard]] std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Determinant over Z by Bareiss elimination.
Integer determinant(const IntMatrix& a);

/// Inverse of a unimodular integer matrix; throws if det != +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);

std::string to_string(const Rational& q);

// ---------------------------------------------------------------------------
// Dimension estimates

enum class DimensionMethod { generic_rank, modp_slope, exhaustive_count };

enum class EstimateStatus {
  determined,    // dim is the dimension
  upper_bound,   // only dim(I) <= dim is certified
  empty,         // the set is empty
  inconclusive,  // counts did not pin down an integer slope
};

struct PrimeCount {
  unsigned prime = 0;
  unsigned long long count = 0;
};

struct DimensionEstimate {
  int dim = 0;
  DimensionMethod method = DimensionMethod::generic_rank;
  EstimateStatus status = EstimateStatus::determined;
  std::vector<PrimeCount> per_prime_counts;
  double slope = 0.0;
  std::string notes;
};

std::string to_string(DimensionMethod m);
std::string to_string(EstimateStatus s);

/// Least-squares slope of log N_p against log p.
double loglog_slope(const std::vector<PrimeCount>& counts);

/// Turns point counts into a dimension: the slope is rounded half away from
/// zero and accepted only when it lies within `tolerance` of that integer.
DimensionEstimate dimension_from_counts(std::vector<PrimeCount> counts, DimensionMethod method,
                                        double tolerance = 0.1);

}  // namespace commvar
