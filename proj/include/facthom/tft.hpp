#ifndef FACTHOM_TFT_HPP
#define FACTHOM_TFT_HPP

#include <optional>
#include <string>
#include <vector>

#include "facthom/matrix.hpp"

namespace facthom {

enum class Sign { Plus, Minus };

struct SignedPoints {
  std::vector<Sign> signs;

  /// From a string of '+' and '-' characters; the empty string is the empty set.
  static SignedPoints parse(const std::string& text);
  std::string to_string() const;
  std::size_t size() const { return signs.size(); }
  bool operator==(const SignedPoints&) const = default;
};

/**
 * Oriented 1-cobordism up to isotopy: a perfect matching on the source
 * points followed by the target points, plus a count of closed circles.
 *
 * Point p < |source| is source point p; point |source| + q is target point q.
 * The effective sign of a point is its own sign on the source side and the
 * flipped sign on the target side; every arc joins effective + to effective −.
 */
class Cobordism1 {
 public:
  Cobordism1(SignedPoints source, SignedPoints target, std::vector<std::size_t> partner, std::size_t circles = 0);

  static Cobordism1 identity(const SignedPoints& points);
  /// ∅ → (+, −)
  static Cobordism1 coevaluation();
  /// (−, +) → ∅
  static Cobordism1 evaluation();
  /// (+, −) → ∅, the reversed horseshoe u^∨
  static Cobordism1 coevaluation_dual();
  static Cobordism1 circles_only(std::size_t circles);

  const SignedPoints& source() const { return source_; }
  const SignedPoints& target() const { return target_; }
  std::size_t partner(std::size_t point) const { return partner_[point]; }
  const std::vector<std::size_t>& matching() const { return partner_; }
  std::size_t circles() const { return circles_; }
  bool operator==(const Cobordism1&) const = default;

 private:
  SignedPoints source_;
  SignedPoints target_;
  std::vector<std::size_t> partner_;
  std::size_t circles_;
};

/// X ∘ Y for Y : W₀ → W₁ and X : W₁ → W₂ (right to left).
Cobordism1 compose(const Cobordism1& x, const Cobordism1& y);
/// X ⊔ Y: X's points first on both sides.
Cobordism1 disjoint_union(const Cobordism1& x, const Cobordism1& y);

/// (id_+ ⊔ ε) ∘ (u ⊔ id_+) as a list of factors, rightmost first.
std::vector<Cobordism1> zorro_factors_plus();
/// (ε ⊔ id_−) ∘ (id_− ⊔ u), rightmost first.
std::vector<Cobordism1> zorro_factors_minus();

/**
 * Z(X) for *⁺ ↦ kⁿ and *⁻ ↦ (kⁿ)*, standard bases. A point sequence of
 * length a is the basis of k^{n^a} with the first point most significant.
 * Arcs contribute Kronecker deltas, each circle a factor n.
 */
ExactMatrix evaluate(std::size_t n, const Cobordism1& x, Field field = Field::rationals());

struct DualityDatum {
  std::size_t n = 0;
  std::size_t n_dual = 0;
  ExactMatrix u;        // V ⊗ V_L ← k, shape n·n_L × 1
  ExactMatrix epsilon;  // k ← V_L ⊗ V, shape 1 × n_L·n

  DualityDatum(std::size_t n, std::size_t n_dual, ExactMatrix u, ExactMatrix epsilon);
  const Field& field() const { return u.field(); }

  /// u = Σ eᵢ ⊗ eᵢ*, ε = evaluation.
  static DualityDatum canonical(std::size_t n, Field field = Field::rationals());
  /// (g ⊗ id)·u and ε·(id ⊗ g⁻¹); throws if g is singular.
  DualityDatum twisted(const ExactMatrix& g) const;
};

/// Evaluation with *⁺ ↦ V and *⁻ ↦ V_L, cups by u, caps by ε.
ExactMatrix evaluate_with(const DualityDatum& d, const Cobordism1& x);

struct DualityReport {
  bool passed = false;
  /// id − (id_V ⊗ ε)(u ⊗ id_V) and id − (ε ⊗ id_{V_L})(id_{V_L} ⊗ u).
  ExactMatrix residual_plus;
  ExactMatrix residual_minus;
};

DualityReport duality_check(const DualityDatum& d);

/// Both snakes evaluated factor by factor through evaluate_with and multiplied.
std::pair<ExactMatrix, ExactMatrix> snakes_via_cobordisms(const DualityDatum& d);

struct DualizabilityVerdict {
  bool passed = false;
  std::optional<DualityDatum> witness;
  std::string explanation;
};

/// Finite n: canonical witnesses, checked. nullopt stands for an infinite-dimensional space.
DualizabilityVerdict full_dualizable_vect(std::optional<std::size_t> n, Field field = Field::rationals());

}  // namespace facthom

#endif
