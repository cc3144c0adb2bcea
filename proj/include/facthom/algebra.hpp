#ifndef FACTHOM_ALGEBRA_HPP
#define FACTHOM_ALGEBRA_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "facthom/errors.hpp"
#include "facthom/matrix.hpp"

namespace facthom {

/**
 * Finite-dimensional unital associative algebra given by structure constants.
 *
 * e_i · e_j = Σ_k c(i, j, k) e_k. Constants are stored dense. The
 * constructor verifies the unit laws and associativity and throws
 * InvalidStructure on failure.
 *
 * Tensor-product bases (tensor, enveloping) are ordered lexicographically:
 * e_i ⊗ f_j has index i * dim(B) + j.
 */
class Algebra {
 public:
  Algebra(Field field, std::vector<std::string> labels, std::vector<Scalar> constants, std::vector<Scalar> unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Scalar>& unit() const { return unit_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  /// e_i · e_j as a sparse vector.
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;

  bool is_commutative() const;
  /// True iff the unit is the basis vector e_0.
  bool unit_is_first_basis_vector() const;

  /// Matrix of x ↦ e_i · x.
  ExactMatrix left_multiplication(std::size_t i) const;
  /// Matrix of x ↦ x · e_i.
  ExactMatrix right_multiplication(std::size_t i) const;

  /// Same algebra in the basis given by the columns of `p` (new e'_k = Σ_a p(a, k) e_a).
  Algebra change_basis(const ExactMatrix& p) const;

  bool operator==(const Algebra& other) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Scalar> c_;
  std::vector<Scalar> unit_;
  std::vector<SparseVector> products_;
};

/// Algebra re-expressed in a basis whose first element is the unit.
struct UnitAdapted {
  Algebra algebra;
  /// Columns are the new basis vectors in the original coordinates.
  ExactMatrix change;
};

/// Picks a basis {1} ∪ (original basis minus one vector the unit depends on). Identity change when e_0 = 1 already.
UnitAdapted unit_adapted(const Algebra& a);

Algebra opposite(const Algebra& a);
/// A ⊗ B with componentwise multiplication, lexicographic basis.
Algebra tensor(const Algebra& a, const Algebra& b);
/// A ⊗ A^op.
Algebra enveloping(const Algebra& a);

struct Cocenter {
  std::size_t dim = 0;
  /// Basis indices whose classes form a basis of A/[A,A].
  std::vector<std::size_t> representatives;
};

/// A / span{e_i e_j − e_j e_i}.
Cocenter cocenter(const Algebra& a);

// ---------------------------------------------------------------------------
// Modules

/// Left A-module: action[i] is the matrix of m ↦ e_i · m.
struct LeftModule {
  Field field;
  std::size_t dim = 0;
  std::vector<ExactMatrix> action;
};

/// Right A-module: action[i] is the matrix of m ↦ m · e_i.
struct RightModule {
  Field field;
  std::size_t dim = 0;
  std::vector<ExactMatrix> action;
};

/// (A, B)-bimodule: left actions of A, right actions of B, commuting.
struct Bimodule {
  Field field;
  std::size_t dim = 0;
  std::vector<ExactMatrix> left;
  std::vector<ExactMatrix> right;
};

/// Throw InvalidStructure unless the actions satisfy the module axioms.
void validate(const LeftModule& m, const Algebra& a);
void validate(const RightModule& m, const Algebra& a);
void validate(const Bimodule& m, const Algebra& left, const Algebra& right);

/// A as an (A, A)-bimodule by left and right multiplication.
Bimodule regular_bimodule(const Algebra& a);
LeftModule regular_left(const Algebra& a);
RightModule regular_right(const Algebra& a);
/// One-dimensional module through an augmentation a ↦ augmentation[i] on e_i.
LeftModule trivial_left(const Algebra& a, const std::vector<Scalar>& augmentation);
RightModule trivial_right(const Algebra& a, const std::vector<Scalar>& augmentation);

/// A as a left A⊗A^op-module: (a ⊗ b) · n = a n b.
LeftModule enveloping_left(const Algebra& a);
/// A as a right A⊗A^op-module: m · (a ⊗ b) = b m a.
RightModule enveloping_right(const Algebra& a);

/// Re-express actions in the basis `change` of the acting algebra (see UnitAdapted).
LeftModule rebase(const LeftModule& m, const ExactMatrix& change);
RightModule rebase(const RightModule& m, const ExactMatrix& change);

/// A left A-module viewed as a right A^op-module, and vice versa (same matrices).
RightModule as_right_over_opposite(const LeftModule& m);
LeftModule as_left_over_opposite(const RightModule& m);

// ---------------------------------------------------------------------------
// Corpus

namespace corpus {
Algebra ground(Field f);               ///< k
Algebra split_pair(Field f);           ///< k ⊕ k, idempotent basis {e1, e2}
Algebra truncated_poly(Field f, int n);  ///< k[x]/(x^n), basis 1, x, ..., x^{n−1}
Algebra dual_numbers(Field f);         ///< k[x]/(x²)
Algebra matrix2(Field f);              ///< M₂(k), basis e11, e12, e21, e22
Algebra upper_triangular2(Field f);    ///< basis e11, e22, e12
Algebra lower_triangular2(Field f);    ///< basis e11, e22, e21
Algebra group_algebra_s3(Field f);     ///< k[S₃], basis in permutation lex order
/// name → algebra for the bundled set: ground, split, dual, x3, m2, upper, s3.
std::vector<std::pair<std::string, Algebra>> all(Field f);
}  // namespace corpus

// ---------------------------------------------------------------------------
// Weight-graded polynomial algebras

/**
 * Polynomial algebra k[x_1..x_m] truncated above weight W.
 *
 * The flat basis lists weight 0 (the unit) first, then weight 1, ...;
 * within a weight, exponent vectors in decreasing lexicographic order
 * (x² before xy before y²). Products above W are dropped, so consumers
 * must stay at or below the cutoff.
 */
class GradedAlgebra {
 public:
  GradedAlgebra(Field field, std::size_t vars, std::size_t cutoff);

  const Field& field() const { return flat_.field(); }
  std::size_t vars() const { return vars_; }
  std::size_t cutoff() const { return cutoff_; }
  /// Dimension of the weight-w piece.
  std::size_t weight_dim(std::size_t w) const;
  /// Flat indices of weight w.
  std::vector<std::size_t> weight_basis(std::size_t w) const;
  std::size_t weight_of(std::size_t index) const { return weights_[index]; }
  const std::vector<std::size_t>& weights() const { return weights_; }
  const std::vector<std::size_t>& exponents(std::size_t index) const { return exponents_[index]; }
  /// Flat index of a monomial; nullopt above the cutoff.
  std::optional<std::size_t> index_of(const std::vector<std::size_t>& exponents) const;
  /// The truncated algebra k[x]/(weight > W) on the flat basis.
  const Algebra& flat() const { return flat_; }

 private:
  std::size_t vars_;
  std::size_t cutoff_;
  std::vector<std::vector<std::size_t>> exponents_;
  std::vector<std::size_t> weights_;
  Algebra flat_;
};

GradedAlgebra polynomial_algebra(std::size_t vars, std::size_t cutoff, Field field);

/// Dimension of the weight-w part of Ω^i for k[x_1..x_m]: C(m, i) · #monomials of degree w − i.
std::size_t kaehler_dims(std::size_t vars, std::size_t form_degree, std::size_t weight);

std::size_t binomial(std::size_t n, std::size_t k);

// ---------------------------------------------------------------------------
// Eckmann–Hilton

/// Two binary operations on {0..n−1} with a claimed shared unit.
struct MonoidPair {
  std::size_t size = 0;
  std::size_t unit = 0;
  std::vector<std::size_t> op1;  // op1[a*size + b]
  std::vector<std::size_t> op2;
};

class UnitMismatch : public InvalidStructure {
 public:
  using InvalidStructure::InvalidStructure;
};

/// (a·b)∘(c·d) ≠ (a∘c)·(b∘d) for the witness (a, b, c, d), · = op1, ∘ = op2.
class InterchangeViolation : public InvalidStructure {
 public:
  InterchangeViolation(std::array<std::size_t, 4> witness);
  const std::array<std::size_t, 4>& witness() const { return witness_; }

 private:
  std::array<std::size_t, 4> witness_;
};

struct EckmannHiltonReport {
  bool ops_equal = false;
  bool commutative = false;
  bool op1_associative = false;
  bool op2_associative = false;
  /// Pair (a, b) where op1 ≠ op2 or a·b ≠ b·a; empty on success.
  std::optional<std::array<std::size_t, 2>> counterexample;
  bool passed() const { return ops_equal && commutative; }
};

/// Verifies the shared unit and the interchange law, then tests op1 = op2 and commutativity.
EckmannHiltonReport eckmann_hilton_check(const MonoidPair& pair);

struct EckmannHiltonScan {
  std::size_t max_size = 0;
  std::size_t pairs_examined = 0;      // unital pairs with a shared unit
  std::size_t interchange_pairs = 0;   // of those, pairs satisfying interchange
  std::size_t associative_interchange_pairs = 0;
  std::size_t failures = 0;            // interchange pairs with op1 ≠ op2 or non-commutative
};

/// Exhaustive scan over all pairs of unital operations with a shared unit on sets of size 1..max_size.
EckmannHiltonScan eckmann_hilton_scan(std::size_t max_size);

}  // namespace facthom

#endif
