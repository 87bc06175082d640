#pragma once

// Exact integer/rational matrix kernel: Smith normal form, fraction-free
// determinants and Sylvester signatures by congruence reduction.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "perdom/error.hpp"

namespace perdom {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const { return data_; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
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

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
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
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum: dimension mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference: dimension mismatch");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& a);

/// Block-diagonal assembly; an empty list yields the 0x0 matrix.
IntMatrix block_diagonal(std::span<const IntMatrix> blocks);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct SignatureTriple {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;

  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

std::ostream& operator<<(std::ostream& os, const SignatureTriple& s);

/// U * A * V = S with U, V unimodular and S diagonal, s1 | s2 | ... | sr,
/// all s_i >= 0, zeros trailing.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Diagonal of S (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Fraction-free (Bareiss) elimination.
Integer exact_determinant(const IntMatrix& a);
Rational exact_determinant(const RatMatrix& a);

/// Sylvester signature by symmetric congruence reduction over Q. Zero diagonal
/// with a nonzero off-diagonal entry is split off as a hyperbolic 2x2 block.
SignatureTriple exact_signature(const RatMatrix& g);
SignatureTriple exact_signature(const IntMatrix& g);

/// Exact inverse over Q; throws InputError when singular.
RatMatrix exact_inverse(const RatMatrix& a);

}  // namespace perdom
