#include "reslie/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace reslie {

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vec>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != c) throw std::invalid_argument("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  if (v.size() != rows_ || c >= cols_) throw std::invalid_argument("set_column: dimension mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const { return reslie::is_zero(data_); }

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
  Vec out(rows_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar e = (*this)(r, c);
      if (e != 0) out[r] ^= field_.mul(e, v[c]);
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar e = (*this)(r, k);
      if (e != 0) axpy(field_, out.row(r), e, other.row(k));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  Matrix out = *this;
  out += other;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum: dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= other.data_[i];
  return *this;
}

void Matrix::place(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows() > rows_ || c0 + block.cols() > cols_)
    throw std::invalid_argument("place: block out of range");
  for (std::size_t r = 0; r < block.rows(); ++r)
    std::copy(block.row(r).begin(), block.row(r).end(), row(r0 + r).begin() + c0);
}

Matrix Matrix::slice(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::invalid_argument("slice: out of range");
  Matrix out(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix Matrix::hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.place(0, 0, a);
  out.place(0, a.cols(), b);
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os.str();
}

namespace {

RowEchelon row_reduce_gf2(const Matrix& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::uint64_t> bits(m.rows() * words, 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) & 1U) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

  auto row_ptr = [&](std::size_t r) { return bits.data() + r * words; };
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t found = prow;
    while (found < m.rows() && !(row_ptr(found)[w] & mask)) ++found;
    if (found == m.rows()) continue;
    if (found != prow) std::swap_ranges(row_ptr(found), row_ptr(found) + words, row_ptr(prow));
    const std::uint64_t* p = row_ptr(prow);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow) continue;
      std::uint64_t* q = row_ptr(r);
      if (!(q[w] & mask)) continue;
      for (std::size_t k = w; k < words; ++k) q[k] ^= p[k];
    }
    pivots.push_back(c);
    ++prow;
  }

  Matrix reduced(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      reduced(r, c) = static_cast<Scalar>((row_ptr(r)[c / 64] >> (c % 64)) & 1U);
  return {std::move(reduced), std::move(pivots)};
}

RowEchelon row_reduce_generic(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < a.cols() && prow < a.rows(); ++c) {
    std::size_t found = prow;
    while (found < a.rows() && a(found, c) == 0) ++found;
    if (found == a.rows()) continue;
    if (found != prow) std::swap_ranges(a.row(found).begin(), a.row(found).end(), a.row(prow).begin());
    const Scalar inv = f.inv(a(prow, c));
    for (auto& e : a.row(prow)) e = f.mul(e, inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == prow || a(r, c) == 0) continue;
      axpy(f, a.row(r), a(r, c), a.row(prow));  // characteristic 2: subtract == add
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace

RowEchelon row_reduce(const Matrix& m) {
  return m.field().degree() == 1 ? row_reduce_gf2(m) : row_reduce_generic(m);
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

SubspaceData::SubspaceData(Matrix basis) : basis_(std::move(basis)) {
  if (rank(basis_) != basis_.cols())
    throw std::invalid_argument("subspace basis columns are linearly dependent");
}

SubspaceData SubspaceData::zero(const Field& field, std::size_t ambient) {
  return SubspaceData(Matrix(field, ambient, 0), Trusted{});
}

SubspaceData nullspace(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return SubspaceData(Matrix::from_columns(m.field(), m.cols(), basis), SubspaceData::Trusted{});
}

SubspaceData column_space(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<Vec> cols;
  cols.reserve(e.pivots.size());
  for (std::size_t p : e.pivots) cols.push_back(m.column(p));
  return SubspaceData(Matrix::from_columns(m.field(), m.rows(), cols), SubspaceData::Trusted{});
}

std::optional<Vec> solve_linear(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: dimension mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  aug.place(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  const RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

std::size_t quotient_dim(const SubspaceData& z, const SubspaceData& b) {
  if (z.ambient() != b.ambient())
    throw std::invalid_argument("quotient_dim: ambient dimension mismatch");
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!solve_linear(z.basis(), b.vector(i)))
      throw std::logic_error("coboundaries not contained in cocycles");
  return z.dim() - b.dim();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  const RowEchelon e = row_reduce(Matrix::hconcat(m, Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return e.reduced.slice(0, n, n, n);
}

SubspaceData extend_to_basis(const SubspaceData& b, const SubspaceData& z) {
  const Matrix joined = Matrix::hconcat(b.basis(), z.basis());
  const RowEchelon e = row_reduce(joined);
  std::vector<Vec> picked;
  for (std::size_t p : e.pivots)
    if (p >= b.dim()) picked.push_back(joined.column(p));
  return SubspaceData(Matrix::from_columns(z.basis().field(), z.ambient(), picked),
                      SubspaceData::Trusted{});
}

}  // namespace reslie
