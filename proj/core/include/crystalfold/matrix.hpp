#pragma once

#include <cassert>
#include <vector>

#include "crystalfold/rational.hpp"

namespace crystalfold {

/// Dense matrix over exact rationals. Row-major; 0x0, 0xn and nx0 shapes are
/// all legal and behave as the obvious zero objects.
class QMat {
 public:
  QMat() : rows_(0), cols_(0) {}
  QMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rational(0)) {
    assert(rows >= 0 && cols >= 0);
  }

  static QMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rational& s) const;

  /// Horizontal concatenation [this | o]; row counts must agree.
  QMat hcat(const QMat& o) const;
  /// Vertical concatenation; column counts must agree.
  QMat vcat(const QMat& o) const;

  /// Rank by fraction-free (Bareiss) elimination on a denominator-cleared
  /// integer copy.
  int rank() const;

  /// Columns spanning the null space {x : A x = 0}.
  QMat kernel() const;

  /// Columns spanning the column space (a maximal independent subset of the
  /// original columns).
  QMat column_space() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Dense matrix over machine integers, for the spin-representation matrices
/// (dimensions <= 2^8, entries stay tiny).
class IMat {
 public:
  IMat() : rows_(0), cols_(0) {}
  IMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static IMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  long long at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const IMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  IMat operator*(const IMat& o) const;
  IMat operator-(const IMat& o) const;
  IMat scaled(long long s) const;

  /// [A, B] = AB - BA.
  static IMat commutator(const IMat& x, const IMat& y) {
    return x * y - y * x;
  }

 private:
  int rows_, cols_;
  std::vector<long long> a_;
};

}  // namespace crystalfold
