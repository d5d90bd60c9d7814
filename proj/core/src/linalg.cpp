#include "mpc/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace mpc {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

// Gauss-Jordan on `work`, mirroring every row operation on `companion` (which
// may have zero columns). Only the first `pivot_cols` columns are eligible.
std::pair<std::size_t, std::vector<std::size_t>> eliminate(Matrix& work, Matrix& companion,
                                                           std::size_t pivot_cols) {
  const Field& f = work.field();
  const std::size_t rows = work.rows();
  const std::size_t cols = work.cols();
  const std::size_t ccols = companion.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && work(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(work(sel, j), work(r, j));
      for (std::size_t j = 0; j < ccols; ++j) std::swap(companion(sel, j), companion(r, j));
    }
    const Elem inv = f.inv(work(r, c));
    if (inv != 1) {
      for (std::size_t j = 0; j < cols; ++j) work(r, j) = f.mul(work(r, j), inv);
      for (std::size_t j = 0; j < ccols; ++j) companion(r, j) = f.mul(companion(r, j), inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem factor = work(i, c);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = c; j < cols; ++j) {
        if (work(r, j) != 0) work(i, j) = f.add(work(i, j), f.mul(nf, work(r, j)));
      }
      for (std::size_t j = 0; j < ccols; ++j) {
        if (companion(r, j) != 0) companion(i, j) = f.add(companion(i, j), f.mul(nf, companion(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {r, std::move(pivots)};
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw Error(ErrorCode::ShapeError, "entry count does not match shape");
  for (auto e : data_) {
    if (!field_.contains(e)) throw Error(ErrorCode::ShapeError, "matrix entry outside the field");
  }
}

Matrix Matrix::identity(const Field& field, std::size_t len) {
  Matrix m(field, len, len);
  for (std::size_t i = 0; i < len; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Elem> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::ShapeError, "ragged matrix literal");
    for (auto v : row) data.push_back(field.from_int(v));
  }
  return {field, r, c, std::move(data)};
}

Matrix Matrix::from_codes(const Field& field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Elem> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::ShapeError, "ragged matrix literal");
    data.insert(data.end(), row.begin(), row.end());
  }
  return {field, r, c, std::move(data)};
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorCode::ShapeError, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::row_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw Error(ErrorCode::ShapeError, "row range out of bounds");
  return {field_, count, cols_,
          std::vector<Elem>(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_))};
}

Matrix Matrix::col_range(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::ShapeError, "column range out of bounds");
  Matrix m(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
  }
  return m;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix m = *this;
  for (auto& e : m.data_) e = field_.mul(c, e);
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Vec Matrix::apply(std::span<const Elem> x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::ShapeError, "vector of length " + std::to_string(x.size()) + " applied to " + shape(*this));
  }
  Vec y(rows_);
  apply_into(x, y);
  return y;
}

void Matrix::apply_into(std::span<const Elem> x, std::span<Elem> out) const noexcept {
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc = 0;
    const Elem* row = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] != 0 && x[j] != 0) acc = field_.add(acc, field_.mul(row[j], x[j]));
    }
    out[i] = acc;
  }
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols_ != b.rows_) throw Error(ErrorCode::ShapeError, "cannot multiply " + shape(a) + " by " + shape(b));
  const Field& f = a.field_;
  Matrix c(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Elem bkj = b(k, j);
        if (bkj != 0) c(i, j) = f.add(c(i, j), f.mul(aik, bkj));
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::ShapeError, "cannot add " + shape(a) + " and " + shape(b));
  Matrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] = a.field_.add(a.data_[k], b.data_[k]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator-(const Matrix& a) {
  Matrix c = a;
  for (auto& e : c.data_) e = a.field_.neg(e);
  return c;
}

Matrix vstack(std::span<const Matrix> parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeError, "vstack of nothing");
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  std::vector<Elem> data;
  for (const auto& p : parts) {
    require_same_field(parts.front(), p);
    if (p.cols() != cols) throw Error(ErrorCode::ShapeError, "vstack column mismatch");
    rows += p.rows();
    data.insert(data.end(), p.data().begin(), p.data().end());
  }
  return {parts.front().field(), rows, cols, std::move(data)};
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  const Matrix parts[] = {top, bottom};
  return vstack(parts);
}

Matrix hstack(std::span<const Matrix> parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeError, "hstack of nothing");
  const std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    require_same_field(parts.front(), p);
    if (p.rows() != rows) throw Error(ErrorCode::ShapeError, "hstack row mismatch");
    cols += p.cols();
  }
  Matrix m(parts.front().field(), rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < p.cols(); ++j) m(i, off + j) = p(i, j);
    }
    off += p.cols();
  }
  return m;
}

Matrix block_diag(std::span<const Matrix> parts) {
  if (parts.empty()) throw Error(ErrorCode::ShapeError, "block_diag of nothing");
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    require_same_field(parts.front(), p);
    rows += p.rows();
    cols += p.cols();
  }
  Matrix m(parts.front().field(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i) {
      for (std::size_t j = 0; j < p.cols(); ++j) m(r0 + i, c0 + j) = p(i, j);
    }
    r0 += p.rows();
    c0 += p.cols();
  }
  return m;
}

RrefResult rref(const Matrix& m) {
  Matrix work = m;
  Matrix none(m.field(), m.rows(), 0);
  auto [r, pivots] = eliminate(work, none, m.cols());
  return {std::move(work), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix nullspace_basis(const Matrix& m) {
  const auto res = rref(m);
  const Field& f = m.field();
  const std::size_t len = m.cols();
  std::vector<bool> is_pivot(len, false);
  for (auto c : res.pivots) is_pivot[c] = true;
  std::vector<Vec> cols;
  for (std::size_t free = 0; free < len; ++free) {
    if (is_pivot[free]) continue;
    Vec x(len, 0);
    x[free] = 1;
    for (std::size_t k = 0; k < res.rank; ++k) x[res.pivots[k]] = f.neg(res.reduced(k, free));
    cols.push_back(std::move(x));
  }
  return Matrix::from_columns(f, len, cols);
}

Matrix row_basis(const Matrix& m) {
  const auto res = rref(m);
  return res.reduced.row_range(0, res.rank);
}

Matrix independent_rows(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t len = m.cols();
  std::vector<Vec> echelon;  // reduced rows, each with a leading 1
  std::vector<std::size_t> leads;
  std::vector<Elem> kept;
  std::size_t kept_rows = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec v(m.row(i).begin(), m.row(i).end());
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Elem c = v[leads[k]];
      if (c == 0) continue;
      const Elem nc = f.neg(c);
      for (std::size_t j = 0; j < len; ++j) {
        if (echelon[k][j] != 0) v[j] = f.add(v[j], f.mul(nc, echelon[k][j]));
      }
    }
    std::size_t lead = 0;
    while (lead < len && v[lead] == 0) ++lead;
    if (lead == len) continue;
    const Elem inv = f.inv(v[lead]);
    for (auto& e : v) e = f.mul(e, inv);
    // keep other echelon rows reduced at the new lead so later reductions are one pass
    for (auto& row : echelon) {
      const Elem c = row[lead];
      if (c == 0) continue;
      const Elem nc = f.neg(c);
      for (std::size_t j = 0; j < len; ++j) {
        if (v[j] != 0) row[j] = f.add(row[j], f.mul(nc, v[j]));
      }
    }
    echelon.push_back(std::move(v));
    leads.push_back(lead);
    kept.insert(kept.end(), m.row(i).begin(), m.row(i).end());
    ++kept_rows;
  }
  return {f, kept_rows, len, std::move(kept)};
}

Matrix complete_to_invertible(const Matrix& y) {
  const auto res = rref(y);
  if (res.rank != y.rows()) {
    throw Error(ErrorCode::DependentRows, "rows of a " + shape(y) + " matrix have rank " + std::to_string(res.rank));
  }
  const std::size_t len = y.cols();
  std::vector<bool> is_pivot(len, false);
  for (auto c : res.pivots) is_pivot[c] = true;
  Matrix t(y.field(), len - res.rank, len);
  std::size_t r = 0;
  for (std::size_t c = 0; c < len; ++c) {
    if (!is_pivot[c]) t(r++, c) = 1;
  }
  return t;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Singular, "non-square " + shape(m) + " matrix");
  Matrix work = m;
  Matrix inv = Matrix::identity(m.field(), m.rows());
  const auto [r, pivots] = eliminate(work, inv, m.cols());
  if (r != m.rows()) throw Error(ErrorCode::Singular, "matrix has rank " + std::to_string(r) + " < " + std::to_string(m.rows()));
  return inv;
}

LinearSolver::LinearSolver(const Matrix& a)
    : field_(a.field()), rows_(a.rows()), cols_(a.cols()), rank_(0), transform_(Matrix::identity(a.field(), a.rows())) {
  Matrix work = a;
  auto [r, pivots] = eliminate(work, transform_, a.cols());
  rank_ = r;
  pivots_ = std::move(pivots);
}

std::optional<Vec> LinearSolver::solve(std::span<const Elem> b) const {
  if (b.size() != rows_) throw Error(ErrorCode::ShapeError, "right-hand side length mismatch");
  const Vec tb = transform_.apply(b);
  for (std::size_t i = rank_; i < rows_; ++i) {
    if (tb[i] != 0) return std::nullopt;
  }
  Vec x(cols_, 0);
  for (std::size_t k = 0; k < rank_; ++k) x[pivots_[k]] = tb[k];
  return x;
}

Vec solve(const Matrix& m, std::span<const Elem> b) {
  auto x = LinearSolver(m).solve(b);
  if (!x) throw Error(ErrorCode::Inconsistent, "right-hand side is outside the column space");
  return *std::move(x);
}

Matrix express_rows(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeError, "express_rows needs equal column counts");
  const LinearSolver solver(b.transpose());
  Matrix r(a.field(), a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto x = solver.solve(a.row(i));
    if (!x) throw Error(ErrorCode::NotInRowSpace, "row " + std::to_string(i) + " is outside the row space");
    for (std::size_t j = 0; j < b.rows(); ++j) r(i, j) = (*x)[j];
  }
  return r;
}

Matrix left_annihilator(const Matrix& w) { return nullspace_basis(w.transpose()).transpose(); }

bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(vstack(a, b));
}

Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeError, "vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeError, "vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, Elem c, std::span<const Elem> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

bool vec_is_zero(std::span<const Elem> a) noexcept {
  return std::all_of(a.begin(), a.end(), [](Elem e) { return e == 0; });
}

Vec normalize_projective(const Field& f, std::span<const Elem> a) {
  auto it = std::find_if(a.begin(), a.end(), [](Elem e) { return e != 0; });
  if (it == a.end()) return Vec(a.begin(), a.end());
  return vec_scale(f, f.inv(*it), a);
}

}  // namespace mpc
