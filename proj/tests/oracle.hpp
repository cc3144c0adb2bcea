// Test-only reference implementations: dense Gauss-Jordan elimination and
// helpers to build random inputs. Nothing here calls the library's Echelon.
#ifndef FACTHOM_TESTS_ORACLE_HPP
#define FACTHOM_TESTS_ORACLE_HPP

#include <random>
#include <vector>

#include "facthom/chain_complex.hpp"

namespace oracle {

using facthom::ChainComplex;
using facthom::ExactMatrix;
using facthom::Field;
using facthom::Scalar;
using Dense = std::vector<std::vector<Scalar>>;

inline Dense dense(const ExactMatrix& m) {
  Dense d(m.rows(), std::vector<Scalar>(m.cols(), Scalar(0)));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = m.at(r, c);
  }
  return d;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(const Field& f, Dense& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && f.reduce(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Scalar inv = f.inv(a[row][col]);
    for (auto& x : a[row]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row) continue;
      Scalar factor = f.reduce(a[r][col]);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(const Field& f, Dense a, std::size_t cols) { return rref(f, a, cols).size(); }
inline std::size_t rank(const ExactMatrix& m) { return rank(m.field(), dense(m), m.cols()); }

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Scalar>> kernel(const Field& f, Dense a, std::size_t cols) {
  auto piv = rref(f, a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[free] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = f.neg(a[k][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// dim H_n = dim C_n − rank ∂_n − rank ∂_{n+1}, by dense elimination.
inline std::size_t homology_dim(const ChainComplex& c, int n) {
  std::size_t r_in = oracle::rank(c.differential(n + 1));
  std::size_t r_out = oracle::rank(c.differential(n));
  return c.dim(n) - r_out - r_in;
}

inline Scalar random_scalar(const Field& f, std::mt19937_64& rng, long range = 3) {
  std::uniform_int_distribution<long> d(-range, range);
  if (f.is_rational() && rng() % 4 == 0) {
    long den = static_cast<long>(rng() % 3) + 2;
    return f.reduce(Scalar(d(rng), den));
  }
  return f.from_int(d(rng));
}

inline ExactMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                 double density = 0.6) {
  ExactMatrix m(f, rows, cols);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (u(rng) < density) m.set(r, c, random_scalar(f, rng));
    }
  }
  return m;
}

/// Random complex in degrees lo..lo+dims.size()−1 (bounded): each ∂_{n+1} has columns in ker ∂_n.
inline ChainComplex random_complex(const Field& f, int lo, const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
  std::vector<ExactMatrix> diffs;
  for (std::size_t k = 1; k < dims.size(); ++k) {
    std::vector<std::vector<Scalar>> ker;
    if (k == 1) {
      for (std::size_t i = 0; i < dims[0]; ++i) {
        std::vector<Scalar> e(dims[0], Scalar(0));
        e[i] = 1;
        ker.push_back(e);
      }
    } else {
      ker = kernel(f, dense(diffs.back()), dims[k - 1]);
    }
    ExactMatrix d(f, dims[k - 1], dims[k]);
    for (std::size_t col = 0; col < dims[k]; ++col) {
      if (rng() % 5 == 0) continue;
      for (const auto& v : ker) {
        Scalar s = random_scalar(f, rng, 2);
        for (std::size_t r = 0; r < dims[k - 1]; ++r) d.add_to(r, col, f.mul(s, v[r]));
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex::bounded(f, lo, dims, std::move(diffs));
}

/**
 * dim {chain maps V → W} / {dh + hd}, computed by writing every component
 * entry as an unknown and solving densely.
 */
inline std::size_t chain_maps_mod_homotopy(const ChainComplex& v, const ChainComplex& w) {
  const Field& f = v.field();
  const int lo = std::min(v.lo(), w.lo());
  const int hi = std::max(v.hi(), w.hi());
  auto dv = [&](int n) { return v.dim(n); };
  auto dw = [&](int n) { return w.dim(n); };
  auto dV = [&](int n) -> ExactMatrix {  // ∂^V_n : V_n → V_{n−1}, zero outside the stored range
    if (n > v.lo() && n <= v.hi()) return v.differential(n);
    return ExactMatrix(f, dv(n - 1), dv(n));
  };
  auto dW = [&](int n) -> ExactMatrix {
    if (n > w.lo() && n <= w.hi()) return w.differential(n);
    return ExactMatrix(f, dw(n - 1), dw(n));
  };
  // degree-0 unknowns f_n : V_n → W_n
  std::map<int, std::size_t> off0, off1;
  std::size_t n0 = 0, n1 = 0;
  for (int n = lo; n <= hi; ++n) {
    off0[n] = n0;
    n0 += dw(n) * dv(n);
    off1[n] = n1;
    n1 += dw(n + 1) * dv(n);
  }
  // constraints ∂^W_n f_n − f_{n−1} ∂^V_n = 0 as rows over the n0 unknowns
  Dense cons;
  for (int n = lo; n <= hi + 1; ++n) {
    ExactMatrix a = dW(n), b = dV(n);
    for (std::size_t i = 0; i < dw(n - 1); ++i) {
      for (std::size_t j = 0; j < dv(n); ++j) {
        std::vector<Scalar> row(n0, Scalar(0));
        for (std::size_t k = 0; k < dw(n); ++k) {
          if (off0.count(n)) row[off0[n] + k * dv(n) + j] = f.add(row[off0[n] + k * dv(n) + j], a.at(i, k));
        }
        for (std::size_t k = 0; k < dv(n - 1); ++k) {
          if (off0.count(n - 1)) {
            auto& x = row[off0[n - 1] + i * dv(n - 1) + k];
            x = f.sub(x, b.at(k, j));
          }
        }
        cons.push_back(std::move(row));
      }
    }
  }
  std::size_t maps = n0 - rank(f, cons, n0);
  // image of h ↦ ∂h + h∂ with h_n : V_n → W_{n+1}
  Dense image;
  for (int n = lo; n <= hi; ++n) {
    for (std::size_t p = 0; p < dw(n + 1); ++p) {
      for (std::size_t q = 0; q < dv(n); ++q) {
        // h = elementary matrix E_{p,q} in component n
        std::vector<Scalar> vec(n0, Scalar(0));
        // (∂^W_{n+1} h_n) : V_n → W_n
        ExactMatrix a = dW(n + 1);
        for (std::size_t i = 0; i < dw(n); ++i) {
          if (off0.count(n)) vec[off0[n] + i * dv(n) + q] = f.add(vec[off0[n] + i * dv(n) + q], a.at(i, p));
        }
        // (h_n ∂^V_{n+1}) : V_{n+1} → W_{n+1}
        ExactMatrix b = dV(n + 1);
        for (std::size_t j = 0; j < dv(n + 1); ++j) {
          if (off0.count(n + 1)) {
            auto& x = vec[off0[n + 1] + p * dv(n + 1) + j];
            x = f.add(x, b.at(q, j));
          }
        }
        image.push_back(std::move(vec));
      }
    }
  }
  return maps - rank(f, image, n0);
}

}  // namespace oracle

#endif
