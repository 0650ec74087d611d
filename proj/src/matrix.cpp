#include "tauscope/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tauscope::exactlin {

Vector zeroVector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unitVector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = Scalar(1);
  return v;
}

bool isZero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.isZero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::fromColumns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::column(const Vector& v) { return fromColumns({v}, v.size()); }

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

bool Matrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.isZero(); });
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  assert(r0 + nr <= rows_ && c0 + nc <= cols_);
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::setBlock(std::size_t r0, std::size_t c0, const Matrix& b) {
  assert(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

void Matrix::addBlock(std::size_t r0, std::size_t c0, const Matrix& b, const Scalar& factor) {
  assert(r0 + b.rows() <= rows_ && c0 + b.cols() <= cols_);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      if (!b(r, c).isZero()) (*this)(r0 + r, c0 + c) += factor * b(r, c);
}

Matrix Matrix::selectColumns(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
  return m;
}

Matrix Matrix::selectRows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(idx[r], c);
  return m;
}

Vector Matrix::apply(const Vector& v) const {
  assert(v.size() == cols_);
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.isZero() && !v[c].isZero()) out[r] += a * v[c];
    }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.isZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.isZero()) p(i, j) += x * y;
      }
    }
  return p;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& x : m.data_) x *= s;
  return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "]";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.setBlock(0, 0, a);
  m.setBlock(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.setBlock(0, 0, a);
  m.setBlock(a.rows(), 0, b);
  return m;
}

Matrix blockDiagonal(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.setBlock(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).isZero()) continue;
      m.addBlock(i * b.rows(), j * b.cols(), b, a(i, j));
    }
  return m;
}

RowEchelon rref(const Matrix& input) {
  RowEchelon out{input, {}, 0};
  Matrix& m = out.reduced;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivotRow = 0;
  for (std::size_t c = 0; c < cols && pivotRow < rows; ++c) {
    std::size_t r = pivotRow;
    while (r < rows && m(r, c).isZero()) ++r;
    if (r == rows) continue;
    if (r != pivotRow)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(pivotRow, k));
    const Scalar inv = m(pivotRow, c).inverse();
    for (std::size_t k = c; k < cols; ++k)
      if (!m(pivotRow, k).isZero()) m(pivotRow, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivotRow || m(i, c).isZero()) continue;
      const Scalar f = m(i, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(pivotRow, k).isZero()) m(i, k) -= f * m(pivotRow, k);
    }
    out.pivots.push_back(c);
    ++pivotRow;
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernelBasis(const Matrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> isPivot(n, false);
  for (auto p : e.pivots) isPivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (isPivot[f]) continue;
    Vector v(n);
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::fromColumns(basis, n);
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const RowEchelon e = rref(hstack(m, b));
  Matrix x(m.cols(), b.cols());
  for (std::size_t i = 0; i < e.rank; ++i) {
    const std::size_t p = e.pivots[i];
    if (p >= m.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(p, j) = e.reduced(i, m.cols() + j);
  }
  return x;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  auto x = solve(m, Matrix::column(b));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.isSquare()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

Matrix columnSpaceBasis(const Matrix& m) { return m.selectColumns(rref(m).pivots); }

Matrix rowSpaceBasis(const Matrix& m) {
  const RowEchelon e = rref(m);
  return e.reduced.block(0, 0, e.rank, m.cols());
}

QuotientMap quotientBy(const Matrix& subspaceColumns, std::size_t ambient) {
  if (subspaceColumns.cols() == 0 || subspaceColumns.rows() == 0) {
    return {Matrix::identity(ambient), Matrix::identity(ambient)};
  }
  const RowEchelon e = rref(subspaceColumns.transpose());
  std::vector<bool> isPivot(ambient, false);
  for (auto p : e.pivots) isPivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < ambient; ++j)
    if (!isPivot[j]) free.push_back(j);
  // project(v) = (v - sum_i v[p_i] * r_i) restricted to the free positions.
  Matrix project(free.size(), ambient), section(ambient, free.size());
  for (std::size_t a = 0; a < free.size(); ++a) {
    project(a, free[a]) = Scalar(1);
    for (std::size_t i = 0; i < e.rank; ++i) project(a, e.pivots[i]) = -e.reduced(i, free[a]);
    section(free[a], a) = Scalar(1);
  }
  return {project, section};
}

namespace {

using Row = SparseSystem::Row;

// a - f * b for sorted sparse rows.
Row axpy(const Row& a, const Scalar& f, const Row& b) {
  Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Scalar v = a[i].second - f * b[j].second;
      if (!v.isZero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void SparseSystem::addEquation(Row row) {
  std::sort(row.begin(), row.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  Row r;
  for (auto& [c, v] : row) {
    if (!r.empty() && r.back().first == c)
      r.back().second += v;
    else
      r.emplace_back(c, v);
    if (r.back().second.isZero()) r.pop_back();
  }
  while (!r.empty()) {
    const std::size_t lead = r.front().first;
    if (pivotRow_[lead] == npos) break;
    const Scalar f = r.front().second;
    r = axpy(r, f, rows_[pivotRow_[lead]]);
  }
  if (r.empty()) return;
  const Scalar inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  pivotRow_[r.front().first] = rows_.size();
  rows_.push_back(std::move(r));
}

Matrix SparseSystem::kernelBasis() const {
  // Back-substitute so each pivot row only involves free columns.
  std::vector<Row> reduced(unknowns_);
  for (std::size_t c = unknowns_; c-- > 0;) {
    if (pivotRow_[c] == npos) continue;
    const Row& row = rows_[pivotRow_[c]];
    Row out = row;
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto& [col, v] = row[k];
      if (pivotRow_[col] != npos) out = axpy(out, v, reduced[col]);
    }
    reduced[c] = std::move(out);
  }
  std::vector<std::size_t> freeIndex(unknowns_, npos);
  std::size_t nfree = 0;
  for (std::size_t c = 0; c < unknowns_; ++c)
    if (pivotRow_[c] == npos) freeIndex[c] = nfree++;
  Matrix k(unknowns_, nfree);
  for (std::size_t c = 0; c < unknowns_; ++c) {
    if (pivotRow_[c] == npos) {
      k(c, freeIndex[c]) = Scalar(1);
      continue;
    }
    for (std::size_t e = 1; e < reduced[c].size(); ++e) {
      const auto& [col, v] = reduced[c][e];
      k(c, freeIndex[col]) = -v;
    }
  }
  return k;
}

std::vector<std::size_t> SparseSystem::freeColumns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < unknowns_; ++c)
    if (pivotRow_[c] == npos) out.push_back(c);
  return out;
}

}  // namespace tauscope::exactlin
