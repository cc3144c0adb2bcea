#ifndef FACTHOM_BAR_HPP
#define FACTHOM_BAR_HPP

#include <map>
#include <string>
#include <vector>

#include "facthom/algebra.hpp"
#include "facthom/chain_complex.hpp"
#include "facthom/hochschild.hpp"

namespace facthom {

/**
 * Two-sided bar complex B_n = M ⊗ Ā^{⊗n} ⊗ N for a right A-module M and a
 * left A-module N, normalized by default.
 *
 * Basis tuples are (m, a_1, ..., a_n, n') over the unit-adapted basis of A,
 * ordered lexicographically. The differential is Σ_i (−1)^i d_i with
 * d_0 acting on M, d_n acting on N, and the inner faces multiplying
 * adjacent algebra factors. Degrees are stored from −1 (zero) to maxdeg, so
 * Tor_n is available for 0 ≤ n ≤ maxdeg − 1.
 */
class BarComplex {
 public:
  static BarComplex build(const RightModule& m, const Algebra& a, const LeftModule& n, int maxdeg,
                          std::size_t budget = kDefaultBudget, bool normalized = true);

  int maxdeg() const { return maxdeg_; }
  bool normalized() const { return normalized_; }
  const std::vector<Tuple>& basis(int n) const { return bases_.at(static_cast<std::size_t>(n)); }
  const ChainComplex& complex() const { return complex_; }

 private:
  BarComplex(int maxdeg, bool normalized, std::vector<std::vector<Tuple>> bases, ChainComplex complex)
      : maxdeg_(maxdeg), normalized_(normalized), bases_(std::move(bases)), complex_(std::move(complex)) {}

  int maxdeg_;
  bool normalized_;
  std::vector<std::vector<Tuple>> bases_;
  ChainComplex complex_;
};

/// dim Tor_n^A(M, N) for 0 ≤ n ≤ maxdeg − 1.
std::map<int, std::size_t> tor_dims(const RightModule& m, const Algebra& a, const LeftModule& n, int maxdeg,
                                    std::size_t budget = kDefaultBudget);

/// dim M ⊗_A N computed directly as the quotient of M ⊗ N by (m·a) ⊗ n − m ⊗ (a·n).
std::size_t coequalizer_dim(const RightModule& m, const Algebra& a, const LeftModule& n);

struct ExcisionRow {
  int degree = 0;
  std::size_t tor = 0;
  std::size_t hh = 0;
  bool agree() const { return tor == hh; }
};

struct ExcisionReport {
  std::vector<ExcisionRow> rows;
  bool passed() const;
};

/// Side conventions used by the excision comparison, for report output.
extern const char* const kExcisionConvention;

/**
 * Tor over A ⊗ A^op of (A, A), with A a right module via m·(a⊗b) = b m a and
 * a left module via (a⊗b)·n = a n b, compared degreewise with the cyclic bar
 * HH dims through maxdeg − 1.
 */
ExcisionReport excision_circle_check(const Algebra& a, int maxdeg, std::size_t budget = kDefaultBudget);

}  // namespace facthom

#endif
