#include "crystalfold/matrix.hpp"

#include <stdexcept>

namespace crystalfold {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMat: shape mismatch in *");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("QMat: shape mismatch in +");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("QMat: shape mismatch in -");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMat QMat::scaled(const Rational& s) const {
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

QMat QMat::hcat(const QMat& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("QMat: hcat row mismatch");
  QMat r(rows_, cols_ + o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

QMat QMat::vcat(const QMat& o) const {
  if (cols_ != o.cols_) throw std::invalid_argument("QMat: vcat col mismatch");
  QMat r(rows_ + o.rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

int QMat::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  // Clear denominators row by row (row scaling preserves rank), then run
  // fraction-free Bareiss elimination over the integers.
  std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
  for (int i = 0; i < rows_; ++i) {
    BigInt l(1);
    for (int j = 0; j < cols_; ++j) {
      const Rational& x = at(i, j);
      BigInt den = x.get_den();
      l = l / gcd(l, den) * den;  // lcm
    }
    for (int j = 0; j < cols_; ++j) {
      Rational scaled = at(i, j) * Rational(l);
      m[i][j] = scaled.get_num();  // denominator is 1 now
    }
  }

  int rank = 0;
  BigInt prev(1);
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows_; ++r) {
      for (int c = col + 1; c < cols_; ++c) {
        BigInt t = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[r][c] = t;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

QMat QMat::kernel() const {
  // Gauss-Jordan to reduced row echelon form, then read off one basis vector
  // per free column.
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int r = row; r < rows_; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][col];
    for (int c = col; c < cols_; ++c) m[row][c] *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int c = col; c < cols_; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<char> is_pivot(cols_, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  int nfree = cols_ - int(pivot_col.size());
  QMat k(cols_, nfree);
  int out = 0;
  for (int fc = 0; fc < cols_; ++fc) {
    if (is_pivot[fc]) continue;
    k.at(fc, out) = 1;
    for (size_t pr = 0; pr < pivot_col.size(); ++pr)
      k.at(pivot_col[pr], out) = -m[pr][fc];
    ++out;
  }
  return k;
}

QMat QMat::column_space() const {
  // Pivot columns of the row echelon form index an independent subset of the
  // original columns.
  QMat copy = *this;
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int r = row; r < rows_; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    for (int r = row + 1; r < rows_; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[row][col];
      for (int c = col; c < cols_; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  QMat b(rows_, int(pivot_col.size()));
  for (size_t j = 0; j < pivot_col.size(); ++j)
    for (int i = 0; i < rows_; ++i) b.at(i, int(j)) = at(i, pivot_col[j]);
  return b;
}

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IMat::is_zero() const {
  for (long long x : a_)
    if (x != 0) return false;
  return true;
}

IMat IMat::operator*(const IMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IMat: shape mismatch in *");
  IMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      long long x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IMat IMat::operator-(const IMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IMat: shape mismatch in -");
  IMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IMat IMat::scaled(long long s) const {
  IMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

}  // namespace crystalfold
