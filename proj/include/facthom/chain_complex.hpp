#ifndef FACTHOM_CHAIN_COMPLEX_HPP
#define FACTHOM_CHAIN_COMPLEX_HPP

#include <map>
#include <optional>
#include <vector>

#include "facthom/matrix.hpp"

namespace facthom {

/**
 * Finite-range chain complex, homological convention: ∂_n : C_n → C_{n−1}.
 *
 * Degrees lo..hi are stored together with ∂_n for lo < n ≤ hi. Degrees
 * outside that window are unknown, not zero: a homology query at n needs
 * both ∂_n and ∂_{n+1}, i.e. lo ≤ n−1 and n+1 ≤ hi. A complex that
 * genuinely vanishes outside its support should be built with `bounded`,
 * which stores one zero degree on each side.
 *
 * Cohomologically indexed data (H^{−i}) maps to H_i here.
 */
class ChainComplex {
 public:
  /// `diffs[k]` is ∂_{lo+k+1}; shapes and ∂∘∂ = 0 are checked (InvalidStructure / ShapeMismatch).
  ChainComplex(Field field, int lo, std::vector<std::size_t> dims, std::vector<ExactMatrix> diffs);

  /// Complex supported in degrees lo..lo+dims.size()−1, zero outside; stores one zero degree on each side.
  static ChainComplex bounded(Field field, int lo, std::vector<std::size_t> dims, std::vector<ExactMatrix> diffs);

  const Field& field() const { return field_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  /// 0 outside the stored range.
  std::size_t dim(int n) const;
  /// ∂_n for lo < n ≤ hi; DegreeOutOfRange otherwise.
  const ExactMatrix& differential(int n) const;
  std::size_t total_dim() const;

 private:
  Field field_;
  int lo_;
  std::vector<std::size_t> dims_;
  std::vector<ExactMatrix> diffs_;
};

/// dim H_n; throws DegreeOutOfRange if ∂_n or ∂_{n+1} is not stored.
std::size_t homology_dim(const ChainComplex& c, int n);
/// dim H_n for n in [from, to].
std::map<int, std::size_t> homology_dims(const ChainComplex& c, int from, int to);
/// Every degree whose homology the truncation determines: lo+1 .. hi−1.
std::map<int, std::size_t> homology_dims(const ChainComplex& c);

/// Σ (−1)^n dim C_n over the stored range.
long euler_characteristic(const ChainComplex& c);

/**
 * Internal Hom complex, homologically indexed.
 *
 * Hom_n = ⊕_i Hom(V_i, W_{i+n}) with D(f) = d_W∘f − (−1)^n f∘d_V, so
 * H_n(result) is H^{−n} of the cohomological Hom complex and H_0 counts
 * chain maps modulo chain homotopy. Basis of Hom_n: blocks ordered by
 * increasing source degree i, each block row-major (w, v) ↦ w*dim V_i + v.
 * Both inputs are read as zero outside their stored ranges.
 */
ChainComplex hom_complex(const ChainComplex& v, const ChainComplex& w);

/// Components f_n : V_n → W_{n+shift}, keyed by source degree n.
struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  int shift = 0;
  std::map<int, ExactMatrix> components;
};

struct ChainMapReport {
  bool ok = true;
  std::optional<int> first_violation;  // source degree n where d∘f_n ≠ (−1)^shift f_{n−1}∘d
  std::optional<ExactMatrix> residual;
};

/// Checks d_W∘f_n = (−1)^shift f_{n−1}∘d_V wherever both sides are stored. ShapeMismatch on bad components.
ChainMapReport chain_map_check(const ChainMap& f);

}  // namespace facthom

#endif
