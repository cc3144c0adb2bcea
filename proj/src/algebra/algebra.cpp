#include "facthom/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace facthom {

namespace {

std::vector<Scalar> reduce_all(const Field& f, std::vector<Scalar> v) {
  for (auto& x : v) x = f.reduce(x);
  return v;
}

}  // namespace

Algebra::Algebra(Field field, std::vector<std::string> labels, std::vector<Scalar> constants, std::vector<Scalar> unit)
    : field_(field),
      dim_(labels.size()),
      labels_(std::move(labels)),
      c_(reduce_all(field, std::move(constants))),
      unit_(reduce_all(field, std::move(unit))) {
  if (c_.size() != dim_ * dim_ * dim_) throw ShapeMismatch("structure constants must have dim^3 entries");
  if (unit_.size() != dim_) throw ShapeMismatch("unit must have dim entries");
  products_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      SparseVector p;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (constant(i, j, k) != 0) p.push_back({k, constant(i, j, k)});
      }
      products_[i * dim_ + j] = std::move(p);
    }
  }
  SparseVector u = sparse_from_dense(field_, unit_);
  for (std::size_t i = 0; i < dim_; ++i) {
    SparseVector ei{{i, Scalar(1)}};
    auto same = [](const SparseVector& a, const SparseVector& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t].index != b[t].index || a[t].value != b[t].value) return false;
      }
      return true;
    };
    if (!same(multiply(u, ei), ei) || !same(multiply(ei, u), ei)) {
      throw InvalidStructure("unit law fails for basis element " + labels_[i]);
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        SparseVector lhs = multiply(product(i, j), {{k, Scalar(1)}});
        SparseVector rhs = multiply({{i, Scalar(1)}}, product(j, k));
        SparseVector diff = axpy(field_, lhs, Scalar(-1), rhs);
        if (!diff.empty()) {
          throw InvalidStructure("associativity fails on (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] +
                                 ")");
        }
      }
    }
  }
}

SparseVector Algebra::multiply(const SparseVector& a, const SparseVector& b) const {
  std::vector<Scalar> acc(dim_, Scalar(0));
  for (const auto& x : a) {
    for (const auto& y : b) {
      Scalar s = x.value * y.value;
      for (const auto& z : product(x.index, y.index)) acc[z.index] += s * z.value;
    }
  }
  return sparse_from_dense(field_, acc);
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (constant(i, j, k) != constant(j, i, k)) return false;
      }
    }
  }
  return true;
}

bool Algebra::unit_is_first_basis_vector() const {
  if (dim_ == 0 || unit_[0] != 1) return false;
  return std::all_of(unit_.begin() + 1, unit_.end(), [](const Scalar& s) { return s == 0; });
}

ExactMatrix Algebra::left_multiplication(std::size_t i) const {
  ExactMatrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& e : product(i, j)) m.set(e.index, j, e.value);
  }
  return m;
}

ExactMatrix Algebra::right_multiplication(std::size_t i) const {
  ExactMatrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& e : product(j, i)) m.set(e.index, j, e.value);
  }
  return m;
}

Algebra Algebra::change_basis(const ExactMatrix& p) const {
  if (p.rows() != dim_ || p.cols() != dim_) throw ShapeMismatch("change of basis must be dim x dim");
  auto pinv = inverse(p);
  if (!pinv) throw InvalidStructure("change of basis is singular");
  std::vector<SparseVector> cols(dim_);
  for (std::size_t k = 0; k < dim_; ++k) cols[k] = p.column(k);
  auto to_new = [&](const SparseVector& v) {
    ExactMatrix col(field_, dim_, 1);
    for (const auto& e : v) col.set(e.index, 0, e.value);
    return (*pinv * col).column(0);
  };
  std::vector<Scalar> c(dim_ * dim_ * dim_, Scalar(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& e : to_new(multiply(cols[i], cols[j]))) c[(i * dim_ + j) * dim_ + e.index] = e.value;
    }
  }
  std::vector<Scalar> unit(dim_, Scalar(0));
  for (const auto& e : to_new(sparse_from_dense(field_, unit_))) unit[e.index] = e.value;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim_; ++k) labels.push_back("f" + std::to_string(k));
  return Algebra(field_, std::move(labels), std::move(c), std::move(unit));
}

bool Algebra::operator==(const Algebra& other) const {
  return field_ == other.field_ && dim_ == other.dim_ && c_ == other.c_ && unit_ == other.unit_;
}

UnitAdapted unit_adapted(const Algebra& a) {
  const std::size_t d = a.dim();
  if (a.unit_is_first_basis_vector()) return {a, ExactMatrix::identity(a.field(), d)};
  std::size_t pivot = 0;
  while (pivot < d && a.unit()[pivot] == 0) ++pivot;
  ExactMatrix p(a.field(), d, d);
  for (std::size_t r = 0; r < d; ++r) p.set(r, 0, a.unit()[r]);
  std::vector<std::string> labels{"1"};
  std::size_t col = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == pivot) continue;
    p.set(j, col++, Scalar(1));
    labels.push_back(a.labels()[j]);
  }
  Algebra changed = a.change_basis(p);
  std::vector<Scalar> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = changed.constant(i, j, k);
    }
  }
  return {Algebra(a.field(), std::move(labels), std::move(c), changed.unit()), std::move(p)};
}

Algebra opposite(const Algebra& a) {
  const std::size_t d = a.dim();
  std::vector<Scalar> c(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) c[(i * d + j) * d + k] = a.constant(j, i, k);
    }
  }
  return Algebra(a.field(), a.labels(), std::move(c), a.unit());
}

Algebra tensor(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("tensor of algebras over different fields");
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t d = da * db;
  std::vector<Scalar> c(d * d * d, Scalar(0));
  std::vector<std::string> labels;
  std::vector<Scalar> unit(d);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < db; ++j) {
      labels.push_back(a.labels()[i] + "⊗" + b.labels()[j]);
      unit[i * db + j] = a.unit()[i] * b.unit()[j];
    }
  }
  for (std::size_t i1 = 0; i1 < da; ++i1) {
    for (std::size_t j1 = 0; j1 < db; ++j1) {
      for (std::size_t i2 = 0; i2 < da; ++i2) {
        for (std::size_t j2 = 0; j2 < db; ++j2) {
          std::size_t x = i1 * db + j1;
          std::size_t y = i2 * db + j2;
          for (const auto& p : a.product(i1, i2)) {
            for (const auto& q : b.product(j1, j2)) c[(x * d + y) * d + p.index * db + q.index] = p.value * q.value;
          }
        }
      }
    }
  }
  return Algebra(a.field(), std::move(labels), std::move(c), std::move(unit));
}

Algebra enveloping(const Algebra& a) { return tensor(a, opposite(a)); }

Cocenter cocenter(const Algebra& a) {
  Echelon commutators(a.field(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      commutators.insert(axpy(a.field(), a.product(i, j), Scalar(-1), a.product(j, i)));
    }
  }
  Cocenter out;
  auto pivots = commutators.pivots();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!std::binary_search(pivots.begin(), pivots.end(), i)) out.representatives.push_back(i);
  }
  out.dim = out.representatives.size();
  return out;
}

// ---------------------------------------------------------------------------
// Modules

namespace {

ExactMatrix combination(const Field& f, std::size_t dim, const std::vector<ExactMatrix>& mats, const SparseVector& coeffs) {
  ExactMatrix out(f, dim, dim);
  for (const auto& e : coeffs) out = out + mats[e.index].scaled(e.value);
  return out;
}

void check_action_shapes(const Field& f, std::size_t dim, const std::vector<ExactMatrix>& mats, const Algebra& a) {
  if (!(f == a.field())) throw FieldMismatch("module and algebra over different fields");
  if (mats.size() != a.dim()) throw ShapeMismatch("module needs one action matrix per algebra basis element");
  for (const auto& m : mats) {
    if (m.rows() != dim || m.cols() != dim) throw ShapeMismatch("action matrix has the wrong shape");
  }
}

}  // namespace

void validate(const LeftModule& m, const Algebra& a) {
  check_action_shapes(m.field, m.dim, m.action, a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!(m.action[i] * m.action[j] == combination(m.field, m.dim, m.action, a.product(i, j)))) {
        throw InvalidStructure("left action fails on (" + a.labels()[i] + ", " + a.labels()[j] + ")");
      }
    }
  }
  if (!(combination(m.field, m.dim, m.action, sparse_from_dense(a.field(), a.unit())) ==
        ExactMatrix::identity(m.field, m.dim))) {
    throw InvalidStructure("unit does not act as the identity");
  }
}

void validate(const RightModule& m, const Algebra& a) {
  check_action_shapes(m.field, m.dim, m.action, a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (!(m.action[j] * m.action[i] == combination(m.field, m.dim, m.action, a.product(i, j)))) {
        throw InvalidStructure("right action fails on (" + a.labels()[i] + ", " + a.labels()[j] + ")");
      }
    }
  }
  if (!(combination(m.field, m.dim, m.action, sparse_from_dense(a.field(), a.unit())) ==
        ExactMatrix::identity(m.field, m.dim))) {
    throw InvalidStructure("unit does not act as the identity");
  }
}

void validate(const Bimodule& m, const Algebra& left, const Algebra& right) {
  validate(LeftModule{m.field, m.dim, m.left}, left);
  validate(RightModule{m.field, m.dim, m.right}, right);
  for (std::size_t i = 0; i < m.left.size(); ++i) {
    for (std::size_t j = 0; j < m.right.size(); ++j) {
      if (!(m.left[i] * m.right[j] == m.right[j] * m.left[i])) {
        throw InvalidStructure("left and right actions do not commute on (" + left.labels()[i] + ", " +
                               right.labels()[j] + ")");
      }
    }
  }
}

Bimodule regular_bimodule(const Algebra& a) {
  Bimodule m{a.field(), a.dim(), {}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    m.left.push_back(a.left_multiplication(i));
    m.right.push_back(a.right_multiplication(i));
  }
  return m;
}

LeftModule regular_left(const Algebra& a) {
  LeftModule m{a.field(), a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.left_multiplication(i));
  return m;
}

RightModule regular_right(const Algebra& a) {
  RightModule m{a.field(), a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) m.action.push_back(a.right_multiplication(i));
  return m;
}

LeftModule trivial_left(const Algebra& a, const std::vector<Scalar>& augmentation) {
  if (augmentation.size() != a.dim()) throw ShapeMismatch("augmentation needs one value per basis element");
  LeftModule m{a.field(), 1, {}};
  for (const auto& v : augmentation) m.action.push_back(ExactMatrix::identity(a.field(), 1).scaled(v));
  validate(m, a);
  return m;
}

RightModule trivial_right(const Algebra& a, const std::vector<Scalar>& augmentation) {
  if (augmentation.size() != a.dim()) throw ShapeMismatch("augmentation needs one value per basis element");
  RightModule m{a.field(), 1, {}};
  for (const auto& v : augmentation) m.action.push_back(ExactMatrix::identity(a.field(), 1).scaled(v));
  validate(m, a);
  return m;
}

LeftModule enveloping_left(const Algebra& a) {
  LeftModule m{a.field(), a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) m.action.push_back(a.left_multiplication(i) * a.right_multiplication(j));
  }
  return m;
}

RightModule enveloping_right(const Algebra& a) {
  RightModule m{a.field(), a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) m.action.push_back(a.left_multiplication(j) * a.right_multiplication(i));
  }
  return m;
}

namespace {

std::vector<ExactMatrix> rebase_actions(const Field& f, std::size_t dim, const std::vector<ExactMatrix>& actions,
                                        const ExactMatrix& change) {
  std::vector<ExactMatrix> out;
  for (std::size_t k = 0; k < change.cols(); ++k) out.push_back(combination(f, dim, actions, change.column(k)));
  return out;
}

}  // namespace

LeftModule rebase(const LeftModule& m, const ExactMatrix& change) {
  return {m.field, m.dim, rebase_actions(m.field, m.dim, m.action, change)};
}

RightModule rebase(const RightModule& m, const ExactMatrix& change) {
  return {m.field, m.dim, rebase_actions(m.field, m.dim, m.action, change)};
}

RightModule as_right_over_opposite(const LeftModule& m) { return {m.field, m.dim, m.action}; }
LeftModule as_left_over_opposite(const RightModule& m) { return {m.field, m.dim, m.action}; }

// ---------------------------------------------------------------------------
// Corpus

namespace corpus {

namespace {

Algebra from_table(Field f, std::vector<std::string> labels, std::vector<Scalar> unit,
                   const std::vector<std::array<long, 4>>& nonzero) {
  const std::size_t d = labels.size();
  std::vector<Scalar> c(d * d * d, Scalar(0));
  for (const auto& [i, j, k, v] : nonzero) {
    c[(static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)) * d + static_cast<std::size_t>(k)] = v;
  }
  return Algebra(f, std::move(labels), std::move(c), std::move(unit));
}

}  // namespace

Algebra ground(Field f) { return from_table(f, {"1"}, {1}, {{0, 0, 0, 1}}); }

Algebra split_pair(Field f) { return from_table(f, {"e1", "e2"}, {1, 1}, {{0, 0, 0, 1}, {1, 1, 1, 1}}); }

Algebra truncated_poly(Field f, int n) {
  std::vector<std::string> labels;
  std::vector<Scalar> unit(static_cast<std::size_t>(n), Scalar(0));
  unit[0] = 1;
  std::vector<std::array<long, 4>> table;
  for (int i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if (i + j < n) table.push_back({i, j, i + j, 1});
    }
  }
  return from_table(f, std::move(labels), std::move(unit), table);
}

Algebra dual_numbers(Field f) { return truncated_poly(f, 2); }

Algebra matrix2(Field f) {
  std::vector<std::array<long, 4>> table;
  for (long a = 0; a < 2; ++a) {
    for (long b = 0; b < 2; ++b) {
      for (long d = 0; d < 2; ++d) table.push_back({2 * a + b, 2 * b + d, 2 * a + d, 1});
    }
  }
  return from_table(f, {"e11", "e12", "e21", "e22"}, {1, 0, 0, 1}, table);
}

Algebra upper_triangular2(Field f) {
  // e11·e11 = e11, e22·e22 = e22, e11·e12 = e12, e12·e22 = e12
  return from_table(f, {"e11", "e22", "e12"}, {1, 1, 0}, {{0, 0, 0, 1}, {1, 1, 1, 1}, {0, 2, 2, 1}, {2, 1, 2, 1}});
}

Algebra lower_triangular2(Field f) {
  // e22·e21 = e21, e21·e11 = e21
  return from_table(f, {"e11", "e22", "e21"}, {1, 1, 0}, {{0, 0, 0, 1}, {1, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 2, 1}});
}

Algebra group_algebra_s3(Field f) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<long>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back("[" + std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]) + "]");
  std::vector<std::array<long, 4>> table;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::array<int, 3> comp{};  // (σ∘τ)(t) = σ(τ(t))
      for (int t = 0; t < 3; ++t) comp[static_cast<std::size_t>(t)] = perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(t)])];
      table.push_back({static_cast<long>(i), static_cast<long>(j), index_of(comp), 1});
    }
  }
  std::vector<Scalar> unit(6, Scalar(0));
  unit[0] = 1;
  return from_table(f, std::move(labels), std::move(unit), table);
}

std::vector<std::pair<std::string, Algebra>> all(Field f) {
  return {{"ground", ground(f)},         {"split", split_pair(f)}, {"dual", dual_numbers(f)},
          {"x3", truncated_poly(f, 3)},  {"m2", matrix2(f)},       {"upper", upper_triangular2(f)},
          {"s3", group_algebra_s3(f)}};
}

}  // namespace corpus

}  // namespace facthom
