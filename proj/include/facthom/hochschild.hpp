#ifndef FACTHOM_HOCHSCHILD_HPP
#define FACTHOM_HOCHSCHILD_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "facthom/algebra.hpp"
#include "facthom/chain_complex.hpp"

namespace facthom {

/// Default cap on the total number of basis elements of one complex.
inline constexpr std::size_t kDefaultBudget = 200000;

/// Basis tuple (b_0, b_1, ..., b_n) of algebra basis indices.
using Tuple = std::vector<std::uint32_t>;

/**
 * Hochschild (cyclic bar) complex C_n = A ⊗ Ā^{⊗n}, Ā = A / k·1.
 *
 * The algebra is first re-expressed in a basis whose element 0 is the unit
 * (see unit_adapted), so a normalized basis tuple is one with b_i ≠ 0 for
 * i ≥ 1. The boundary is
 *
 *   b(a_0 ⊗ ... ⊗ a_n) = Σ_{i<n} (−1)^i a_0 ⊗ ... ⊗ a_i a_{i+1} ⊗ ... ⊗ a_n
 *                        + (−1)^n a_n a_0 ⊗ a_1 ⊗ ... ⊗ a_{n−1},
 *
 * followed by the projection killing tuples with a unit in positions ≥ 1.
 * Basis tuples in each degree are ordered lexicographically.
 *
 * The stored ChainComplex has a zero degree −1 and runs up to maxdeg, so
 * H_n is available for 0 ≤ n ≤ maxdeg − 1. The weight-graded variant holds
 * only tuples of total weight w; there n ≤ w and the complex is exact-size
 * (zero above w), so every degree is available.
 */
class HochschildComplex {
 public:
  static HochschildComplex build(const Algebra& a, int maxdeg, std::size_t budget = kDefaultBudget);
  /// Weight-w summand of the normalized complex of a polynomial algebra.
  static HochschildComplex build_graded(const GradedAlgebra& p, std::size_t weight, std::size_t budget = kDefaultBudget);
  /// Unnormalized complex A^{⊗(n+1)}; a test oracle for the normalization.
  static HochschildComplex build_unnormalized(const Algebra& a, int maxdeg, std::size_t budget = kDefaultBudget);

  /// Unit-adapted algebra the tuples refer to.
  const Algebra& algebra() const { return algebra_; }
  /// Columns: adapted basis in the caller's original coordinates.
  const ExactMatrix& change() const { return change_; }
  int maxdeg() const { return maxdeg_; }
  bool normalized() const { return normalized_; }
  std::optional<std::size_t> weight() const { return weight_; }
  /// Highest degree whose homology the truncation determines.
  int valid_through() const;

  const std::vector<Tuple>& basis(int n) const { return bases_.at(static_cast<std::size_t>(n)); }
  std::optional<std::size_t> index(int n, const Tuple& t) const;
  const ChainComplex& complex() const { return complex_; }

  /// b applied to one basis tuple of degree n ≥ 1, as a vector of C_{n−1}.
  SparseVector boundary(const Tuple& t) const;
  /// Connes B on one basis tuple of degree n, as a vector of C_{n+1} (normalized complexes only).
  SparseVector connes(const Tuple& t) const;

 private:
  HochschildComplex(Algebra algebra, ExactMatrix change, int maxdeg, bool normalized, std::optional<std::size_t> weight,
                    std::vector<std::size_t> weights, std::vector<std::vector<Tuple>> bases);

  Algebra algebra_;
  ExactMatrix change_;
  int maxdeg_;
  bool normalized_;
  std::optional<std::size_t> weight_;
  std::vector<std::size_t> element_weights_;
  std::vector<std::vector<Tuple>> bases_;
  std::vector<std::map<Tuple, std::size_t>> lookup_;
  ChainComplex complex_;
};

/// HH_n for 0 ≤ n ≤ maxdeg − 1. Also asserts dim HH_0 = dim of the cocenter.
std::map<int, std::size_t> hh_dims(const Algebra& a, int maxdeg, std::size_t budget = kDefaultBudget);

/// Exact HH dims of the weight-w summand of a polynomial algebra, degrees 0..w.
std::map<int, std::size_t> graded_hh_dims(const GradedAlgebra& p, std::size_t weight,
                                          std::size_t budget = kDefaultBudget);

/**
 * Connes operator on the normalized complex:
 *
 *   B(a_0 ⊗ ā_1 ⊗ ... ⊗ ā_n) = Σ_{i=0}^{n} (−1)^{n i} 1 ⊗ ā_i ⊗ ... ⊗ ā_n ⊗ ā_0 ⊗ ... ⊗ ā_{i−1},
 *
 * zero when a_0 is the unit. Degree +1; components for n = 0..maxdeg−1.
 */
ChainMap connes_b(const HochschildComplex& h);

struct DifferentialIdentities {
  bool b_squared_zero = true;
  bool B_squared_zero = true;
  bool bB_plus_Bb_zero = true;
  std::optional<int> first_failure;  // degree of the first failing identity
  bool ok() const { return b_squared_zero && B_squared_zero && bB_plus_Bb_zero; }
};

/// b∘b, B∘B and b∘B + B∘b on every degree where both sides are stored.
DifferentialIdentities check_differential_identities(const HochschildComplex& h, const ChainMap& B);

// ---------------------------------------------------------------------------
// HKR

/// Weight-w basis of Ω^i for k[x_1..x_m]: (monomial of degree w−i, increasing variable subset), monomial major.
struct KaehlerForm {
  std::vector<std::size_t> coefficient;  // exponent vector
  std::vector<std::size_t> differentials;  // j_1 < ... < j_i
};
std::vector<KaehlerForm> kaehler_basis(std::size_t vars, std::size_t form_degree, std::size_t weight);

/**
 * Antisymmetrization a dx_{j1}∧...∧dx_{ji} ↦ Σ_σ sgn(σ) a ⊗ x_{jσ(1)} ⊗ ... ⊗ x_{jσ(i)}
 * (no 1/i! factor). Columns follow kaehler_basis; rows index the degree-i basis
 * of HochschildComplex::build_graded(p, w). Refuses F_p with p ≤ w.
 */
ExactMatrix hkr_map(const GradedAlgebra& p, std::size_t form_degree, std::size_t weight);

struct HkrReport {
  std::size_t form_degree = 0;
  std::size_t weight = 0;
  std::size_t kaehler_dim = 0;
  std::size_t hh_dim = 0;
  bool columns_are_cycles = false;
  bool injective_on_homology = false;
  bool surjective_on_homology = false;
  bool passed() const { return columns_are_cycles && injective_on_homology && surjective_on_homology; }
};

/// Verifies that hkr_map induces an isomorphism Ω^i_w → HH_i(weight w).
HkrReport hkr_check(const GradedAlgebra& p, std::size_t form_degree, std::size_t weight);

struct CircleActionReport {
  std::size_t weight = 0;
  bool passed = false;
  /// +1 or −1: the sign s with [B(x^w)] = s·w·[x^{w−1} ⊗ x].
  int sign = 0;
};

/// In HH_1 of Q[x] at weight w: [B(x^w)] = ±w·[HKR(x^{w−1} dx)], decided by exact linear solves.
CircleActionReport circle_action_check(std::size_t weight, Field field = Field::rationals());

}  // namespace facthom

#endif
