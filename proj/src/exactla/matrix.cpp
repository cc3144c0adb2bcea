#include "facthom/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

#include "facthom/errors.hpp"

namespace facthom {

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

}  // namespace

SparseVector axpy(const Field& field, const SparseVector& y, const Scalar& a, const SparseVector& x) {
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->index < xi->index)) {
      out.push_back(*yi++);
    } else if (yi == y.end() || xi->index < yi->index) {
      Scalar v = field.mul(a, xi->value);
      if (v != 0) out.push_back({xi->index, std::move(v)});
      ++xi;
    } else {
      Scalar v = field.add(yi->value, field.mul(a, xi->value));
      if (v != 0) out.push_back({yi->index, std::move(v)});
      ++xi;
      ++yi;
    }
  }
  return out;
}

SparseVector sparse_from_dense(const Field& field, const std::vector<Scalar>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    Scalar v = field.reduce(dense[i]);
    if (v != 0) out.push_back({i, std::move(v)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// ExactMatrix

ExactMatrix::ExactMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows) {}

ExactMatrix ExactMatrix::identity(Field field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Scalar(1)});
  return m;
}

ExactMatrix ExactMatrix::from_rows(Field field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeMismatch("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar(rows[r][c]));
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
  ExactMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeMismatch("ragged matrix literal");
    m.data_[r] = sparse_from_dense(field, rows[r]);
  }
  return m;
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar ExactMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != row.end() && it->index == c) return it->value;
  return Scalar(0);
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (r >= rows_ || c >= cols_) throw ShapeMismatch("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t i) { return e.index < i; });
  Scalar v = field_.reduce(value);
  if (it != row.end() && it->index == c) {
    if (v == 0) {
      row.erase(it);
    } else {
      it->value = std::move(v);
    }
  } else if (v != 0) {
    row.insert(it, Entry{c, std::move(v)});
  }
}

void ExactMatrix::add_to(std::size_t r, std::size_t c, const Scalar& value) { set(r, c, at(r, c) + value); }

void ExactMatrix::set_row(std::size_t r, SparseVector entries) {
  if (r >= rows_) throw ShapeMismatch("row index out of range");
  if (!entries.empty() && entries.back().index >= cols_) throw ShapeMismatch("column index out of range");
  data_[r] = std::move(entries);
}

SparseVector ExactMatrix::column(std::size_t c) const {
  SparseVector out;
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar v = at(r, c);
    if (v != 0) out.push_back({r, std::move(v)});
  }
  return out;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.index].push_back({r, e.value});
  }
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.rows_) {
    throw ShapeMismatch("product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                        std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  }
  ExactMatrix out(field_, rows_, rhs.cols_);
  std::map<std::size_t, Scalar> acc;
  for (std::size_t r = 0; r < rows_; ++r) {
    acc.clear();
    for (const auto& e : data_[r]) {
      for (const auto& f : rhs.data_[e.index]) acc[f.index] += e.value * f.value;
    }
    SparseVector row;
    for (auto& [c, v] : acc) {
      Scalar red = field_.reduce(v);
      if (red != 0) row.push_back({c, std::move(red)});
    }
    out.data_[r] = std::move(row);
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("sum of differently shaped matrices");
  ExactMatrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = axpy(field_, data_[r], Scalar(1), rhs.data_[r]);
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("difference of differently shaped matrices");
  ExactMatrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = axpy(field_, data_[r], Scalar(-1), rhs.data_[r]);
  return out;
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
  ExactMatrix out(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = axpy(field_, {}, s, data_[r]);
  return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
  if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto& a = data_[r];
    const auto& b = rhs.data_[r];
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].index != b[i].index || a[i].value != b[i].value) return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& rhs) const {
  require_same_field(field_, rhs.field_);
  ExactMatrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < rhs.rows_; ++k) {
      SparseVector row;
      for (const auto& a : data_[i]) {
        for (const auto& b : rhs.data_[k]) row.push_back({a.index * rhs.cols_ + b.index, field_.mul(a.value, b.value)});
      }
      out.data_[i * rhs.rows_ + k] = std::move(row);
    }
  }
  return out;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_) throw ShapeMismatch("hstack row mismatch");
  ExactMatrix out(field_, rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    SparseVector row = data_[r];
    for (const auto& e : rhs.data_[r]) row.push_back({e.index + cols_, e.value});
    out.data_[r] = std::move(row);
  }
  return out;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.cols_) throw ShapeMismatch("vstack column mismatch");
  ExactMatrix out(field_, rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(rows_));
  return out;
}

std::vector<std::vector<Scalar>> ExactMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_, Scalar(0)));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r][e.index] = e.value;
  }
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  auto dense = to_dense();
  for (const auto& row : dense) {
    os << "[";
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << field_.format(row[c]);
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Echelon

Echelon::Echelon(Field field, std::size_t length) : field_(field), length_(length), by_lead_(length) {}

SparseVector Echelon::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    const auto& pivot = by_lead_[v[pos].index];
    if (pivot.empty()) {
      ++pos;
      continue;
    }
    // Entries before pos are non-pivot columns and are unaffected: pivot rows
    // only touch indices >= their lead.
    Scalar factor = field_.neg(v[pos].value);
    SparseVector tail(v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
    tail = axpy(field_, tail, factor, pivot);
    v.resize(pos);
    v.insert(v.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
  }
  return v;
}

bool Echelon::insert(SparseVector v) {
  if (!v.empty() && v.back().index >= length_) throw ShapeMismatch("vector longer than echelon length");
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar lead_inv = field_.inv(v.front().value);
  for (auto& e : v) e.value = field_.mul(e.value, lead_inv);
  std::size_t lead = v.front().index;
  by_lead_[lead] = std::move(v);
  ++count_;
  return true;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < length_; ++i) {
    if (!by_lead_[i].empty()) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// rank

namespace {

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  unsigned __int128 r = 1;
  unsigned __int128 x = b % p;
  while (e) {
    if (e & 1) r = (r * x) % p;
    x = (x * x) % p;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Row insertion echelon with machine-word arithmetic for prime fields.
std::size_t rank_mod_p(const std::vector<ModRow>& vectors, std::size_t length, std::uint64_t p) {
  std::vector<ModRow> by_lead(length);
  std::size_t count = 0;
  auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  };
  for (ModRow v : vectors) {
    std::size_t pos = 0;
    while (pos < v.size()) {
      const auto& pivot = by_lead[v[pos].first];
      if (pivot.empty()) {
        ++pos;
        continue;
      }
      std::uint64_t factor = p - v[pos].second;
      ModRow merged(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos));
      auto a = v.begin() + static_cast<std::ptrdiff_t>(pos);
      auto b = pivot.begin();
      while (a != v.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != v.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == v.end() || b->first < a->first) {
          merged.push_back({b->first, mulmod(factor, b->second)});
          ++b;
        } else {
          std::uint64_t s = (a->second + mulmod(factor, b->second)) % p;
          if (s) merged.push_back({a->first, s});
          ++a;
          ++b;
        }
      }
      v = std::move(merged);
    }
    if (v.empty()) continue;
    std::uint64_t inv = pow_mod(v.front().second, p - 2, p);
    for (auto& e : v) e.second = mulmod(e.second, inv);
    by_lead[v.front().first] = std::move(v);
    ++count;
  }
  return count;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  // Insert whichever of rows/columns is fewer.
  const bool by_rows = m.rows() <= m.cols();
  ExactMatrix t = by_rows ? ExactMatrix(m.field(), 0, 0) : m.transpose();
  const ExactMatrix& vecs = by_rows ? m : t;
  const Field& field = m.field();
  if (!field.is_rational()) {
    std::vector<ModRow> rows(vecs.rows());
    for (std::size_t r = 0; r < vecs.rows(); ++r) {
      for (const auto& e : vecs.row(r)) rows[r].push_back({e.index, e.value.get_num().get_ui()});
    }
    return rank_mod_p(rows, vecs.cols(), field.characteristic());
  }
  Echelon ech(field, vecs.cols());
  for (std::size_t r = 0; r < vecs.rows(); ++r) ech.insert(vecs.row(r));
  return ech.rank();
}

bool in_column_span(const ExactMatrix& m, const SparseVector& v) {
  Echelon ech(m.field(), m.rows());
  ExactMatrix t = m.transpose();
  for (std::size_t c = 0; c < t.rows(); ++c) ech.insert(t.row(c));
  return ech.contains(v);
}

}  // namespace facthom

namespace facthom {

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
  const Field& field = m.field();
  const std::size_t n = m.rows();
  auto a = m.to_dense();
  auto inv = ExactMatrix::identity(field, n).to_dense();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Scalar s = field.inv(a[col][col]);
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] = field.mul(a[col][c], s);
      inv[col][c] = field.mul(inv[col][c], s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Scalar f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] = field.sub(a[r][c], field.mul(f, a[col][c]));
        inv[r][c] = field.sub(inv[r][c], field.mul(f, inv[col][c]));
      }
    }
  }
  return ExactMatrix::from_rows(field, n, inv);
}

}  // namespace facthom
