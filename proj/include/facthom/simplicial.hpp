#ifndef FACTHOM_SIMPLICIAL_HPP
#define FACTHOM_SIMPLICIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "facthom/algebra.hpp"
#include "facthom/chain_complex.hpp"
#include "facthom/hochschild.hpp"

namespace facthom {

/// Finite category: morphisms with source/target, identities, full composition table.
class FinCategory {
 public:
  struct Morphism {
    std::string name;
    std::size_t source;
    std::size_t target;
    bool operator==(const Morphism&) const = default;
  };

  /// `compose[g][f]` = index of g∘f when target(f) = source(g). Validates unit and associativity laws.
  FinCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms, std::vector<std::size_t> identity,
              std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object(std::size_t i) const { return objects_[i]; }
  const Morphism& morphism(std::size_t i) const { return morphisms_[i]; }
  std::size_t identity(std::size_t object) const { return identity_[object]; }
  /// g∘f; requires target(f) = source(g).
  std::size_t compose(std::size_t g, std::size_t f) const;
  bool is_groupoid() const;
  bool operator==(const FinCategory&) const = default;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<std::size_t> identity_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose_;
};

namespace categories {
FinCategory terminal();
/// Totally ordered set {0 < ... < n} as a category.
FinCategory poset(std::size_t n);
/// One object, automorphism group Z/2.
FinCategory z2_groupoid();
/// Two objects and an inverse pair of isomorphisms between them.
FinCategory walking_isomorphism();
/// One object, monoid {1, e} with e∘e = e.
FinCategory idempotent();
}  // namespace categories

/// Eilenberg–Zilber description of a simplex: a degeneracy (monotone surjection [n] ↠ [k]) of a nondegenerate k-simplex.
struct EZForm {
  std::vector<std::uint32_t> surjection;  // values for 0..n
  std::size_t base_dim = 0;
  std::size_t base = 0;  // index among the nondegenerate simplices of dimension base_dim
};

/**
 * Level-truncated finite simplicial set.
 *
 * Levels 0..L are stored as explicit tables: faces d_i : X_n → X_{n−1}
 * for 1 ≤ n ≤ L, degeneracies s_i : X_n → X_{n+1} for n < L. The
 * constructor checks every simplicial identity whose two sides live inside
 * the truncation and throws InvalidStructure on failure. An element is
 * degenerate iff it is in the image of some s_i.
 */
class SimplicialSet {
 public:
  using Table = std::vector<std::vector<std::vector<std::size_t>>>;  // [n][i][x]

  SimplicialSet(std::vector<std::vector<std::string>> names, Table faces, Table degeneracies,
                std::vector<std::vector<EZForm>> ez = {});

  int level() const { return static_cast<int>(names_.size()) - 1; }
  std::size_t size(int n) const { return names_.at(static_cast<std::size_t>(n)).size(); }
  const std::string& name(int n, std::size_t x) const { return names_[static_cast<std::size_t>(n)][x]; }
  std::size_t face(int n, std::size_t i, std::size_t x) const;
  std::size_t degeneracy(int n, std::size_t i, std::size_t x) const;
  bool is_degenerate(int n, std::size_t x) const { return degenerate_[static_cast<std::size_t>(n)][x]; }
  std::vector<std::size_t> nondegenerate(int n) const;
  /// Present for sets built from nondegenerate data.
  std::optional<EZForm> ez(int n, std::size_t x) const;
  std::optional<std::size_t> find(int n, const std::string& name) const;

  const Table& faces() const { return faces_; }
  const Table& degeneracies() const { return degens_; }
  /// Same names and structure tables; EZ data is not compared.
  bool operator==(const SimplicialSet& o) const {
    return names_ == o.names_ && faces_ == o.faces_ && degens_ == o.degens_;
  }

 private:
  std::vector<std::vector<std::string>> names_;
  Table faces_;
  Table degens_;
  std::vector<std::vector<bool>> degenerate_;
  std::vector<std::vector<EZForm>> ez_;
};

/// Nondegenerate simplex for `from_nondegenerate`: faces are arbitrary (possibly degenerate) simplices.
struct NondegenerateSimplex {
  std::string name;
  std::vector<EZForm> faces;  // d_0 .. d_k; empty for vertices
};

/// Builds levels 0..L from nondegenerate simplices (by dimension) and their faces.
SimplicialSet from_nondegenerate(const std::vector<std::vector<NondegenerateSimplex>>& cells, int level);

namespace models {
SimplicialSet point(int level);
SimplicialSet simplex(int n, int level);
SimplicialSet boundary(int n, int level);
SimplicialSet horn(int n, int k, int level);
/// Δ¹/∂Δ¹: one vertex, one nondegenerate edge; sizes 1, 2, 3, ...
SimplicialSet circle(int level);
/// Two vertices and two edges forming a loop.
SimplicialSet circle_two(int level);
/// Δ²/∂Δ²: one vertex and one nondegenerate 2-simplex.
SimplicialSet sphere(int level);
/// Two triangles glued along their common boundary (suspension model of S²).
SimplicialSet sphere_suspension(int level);
SimplicialSet torus(int level);
/// Looks up a model by name: point, simplex:<n>, boundary:<n>, horn:<n>:<k>, circle, circle2, sphere, sphere2, torus.
SimplicialSet by_name(const std::string& name, int level);
}  // namespace models

/// N(C) truncated at `level`: chains (f_1, ..., f_n), f_i : c_{i−1} → c_i.
SimplicialSet nerve(const FinCategory& c, int level);

/// Levelwise product, componentwise structure maps; pair (x, y) has index x·|Y_n| + y.
SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y);

struct HornReport {
  int n = 0;
  int k = 0;
  std::size_t horns = 0;
  std::size_t fillable = 0;
  std::size_t max_fillers = 0;
  std::size_t min_fillers = 0;
  /// Faces (y_i)_{i≠k} of the first horn without filler, if any.
  std::optional<std::vector<std::size_t>> unfillable;
  bool all_fillable() const { return fillable == horns; }
  bool unique_fillers() const { return horns > 0 ? (min_fillers == 1 && max_fillers == 1) : true; }
};

/// Enumerates every map Λ^n_k → X and counts its fillers. Needs 1 ≤ n ≤ L, 0 ≤ k ≤ n.
HornReport horn_check(const SimplicialSet& x, int n, int k);

/// Normalized chains: basis the nondegenerate simplices, ∂ = Σ (−1)^i d_i with degenerate faces sent to 0.
ChainComplex normalized_chains(const SimplicialSet& x, Field field);

/**
 * Loday construction A^{⊗X_n} for a commutative algebra, normalized.
 *
 * Face maps multiply the tensor factors over each fiber of d_i (in
 * increasing element order; empty fibers give the unit). The algebra is
 * unit-adapted first; a basis tensor is degenerate iff it is the unit off
 * the image of some s_i, and the normalized complex has the nondegenerate
 * tensors as basis. Degrees −1 (zero) .. maxdeg, homology through maxdeg − 1.
 */
class LodayComplex {
 public:
  static LodayComplex build(const Algebra& a, const SimplicialSet& x, int maxdeg, std::size_t budget = kDefaultBudget);

  const Algebra& algebra() const { return algebra_; }
  int maxdeg() const { return maxdeg_; }
  const std::vector<Tuple>& basis(int n) const { return bases_.at(static_cast<std::size_t>(n)); }
  const ChainComplex& complex() const { return complex_; }

 private:
  LodayComplex(Algebra algebra, int maxdeg, std::vector<std::vector<Tuple>> bases, ChainComplex complex)
      : algebra_(std::move(algebra)), maxdeg_(maxdeg), bases_(std::move(bases)), complex_(std::move(complex)) {}

  Algebra algebra_;
  int maxdeg_;
  std::vector<std::vector<Tuple>> bases_;
  ChainComplex complex_;
};

ChainComplex loday(const Algebra& a, const SimplicialSet& x, int maxdeg, std::size_t budget = kDefaultBudget);

/// dim coker(d_0 − d_1 : A^{⊗X_1} → A^{⊗X_0}) computed on raw tensors; equals H_0 of the Loday complex.
std::size_t loday_h0_coequalizer(const Algebra& a, const SimplicialSet& x, std::size_t budget = kDefaultBudget);

struct CircleIdentification {
  bool dims_equal = false;
  bool bases_correspond = false;
  bool differentials_equal = false;
  bool ok() const { return dims_equal && bases_correspond && differentials_equal; }
};

/**
 * Compares loday(A, circle) with the normalized Hochschild complex basis by
 * basis: the simplex of X_n whose surjection has j zeros is tensor factor j,
 * the basepoint is factor 0.
 */
CircleIdentification circle_identification(const Algebra& a, int maxdeg, std::size_t budget = kDefaultBudget);

struct TorusReport {
  std::map<int, std::size_t> torus;
  std::map<int, std::size_t> circle;  // HH dims, shown alongside for context
  std::size_t h0_coequalizer = 0;
};

TorusReport torus_check(const Algebra& a, int maxdeg, std::size_t budget = kDefaultBudget);

}  // namespace facthom

#endif
