#include "tgp/matrix.hpp"

#include <ostream>

#include "tgp/error.hpp"

namespace tgp {

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw precondition_error("matrix shape mismatch");
  RatMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

RatMat RatMat::operator*(const Rat& c) const {
  RatMat r = *this;
  for (Rat& x : r.a_) x *= c;
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw precondition_error("matrix shape mismatch");
  RatMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw precondition_error("matrix shape mismatch");
  RatMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat RatMat::trace() const {
  if (rows_ != cols_) throw precondition_error("trace of non-square matrix");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool RatMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<Rat> RatMat::row(int i) const {
  std::vector<Rat> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

std::vector<Rat> RatMat::apply_row(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw precondition_error("vector/matrix shape mismatch");
  std::vector<Rat> r(cols_, Rat(0));
  for (int i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols_; ++j) r[j] += v[i] * at(i, j);
  }
  return r;
}

Rat RatMat::determinant() const {
  if (rows_ != cols_) throw precondition_error("determinant of non-square matrix");
  RatMat m = *this;
  Rat det = 1;
  for (int col = 0; col < cols_; ++col) {
    int piv = -1;
    for (int i = col; i < rows_; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    Rat inv = 1 / m.at(col, col);
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::ostream& operator<<(std::ostream& os, const RatMat& m) {
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << rat_str(m.at(i, j));
    }
  }
  return os << "]";
}

bool RowSpace::insert(std::vector<Rat> v) {
  if (static_cast<int>(v.size()) != cols_)
    throw precondition_error("RowSpace dimension mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivot_[r]];
    if (c != 0) {
      Rat f = c;  // rows are pivot-normalized to 1
      for (int j = 0; j < cols_; ++j) v[j] -= f * rows_[r][j];
    }
  }
  int p = -1;
  for (int j = 0; j < cols_; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  Rat inv = 1 / v[p];
  for (int j = 0; j < cols_; ++j) v[j] *= inv;
  // Back-substitute into existing rows to keep reduced form.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat c = rows_[r][p];
    if (c != 0)
      for (int j = 0; j < cols_; ++j) rows_[r][j] -= c * v[j];
  }
  size_t pos = 0;
  while (pos < rows_.size() && pivot_[pos] < p) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivot_.insert(pivot_.begin() + pos, p);
  return true;
}

bool RowSpace::contains(std::vector<Rat> v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivot_[r]];
    if (c != 0) {
      Rat f = c;
      for (int j = 0; j < cols_; ++j) v[j] -= f * rows_[r][j];
    }
  }
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace tgp
