#include <algorithm>
#include <functional>

#include "facthom/simplicial.hpp"

namespace facthom {

HornReport horn_check(const SimplicialSet& x, int n, int k) {
  if (n < 1 || n > x.level()) {
    throw DegreeOutOfRange("horn check at n = " + std::to_string(n) + " needs level " + std::to_string(n) +
                           " stored (truncation is " + std::to_string(x.level()) + ")");
  }
  if (k < 0 || k > n) throw Error("horn index k must satisfy 0 <= k <= n");
  const auto un = static_cast<std::size_t>(n);
  const auto uk = static_cast<std::size_t>(k);
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i <= un; ++i) {
    if (i != uk) slots.push_back(i);
  }

  std::map<std::vector<std::size_t>, std::size_t> fillers;
  for (std::size_t s = 0; s < x.size(n); ++s) {
    std::vector<std::size_t> faces;
    for (auto i : slots) faces.push_back(x.face(n, i, s));
    ++fillers[faces];
  }

  HornReport report;
  report.n = n;
  report.k = k;
  report.min_fillers = SIZE_MAX;
  std::vector<std::size_t> chosen;  // chosen[t] is the face in slot slots[t]
  std::function<void()> rec = [&] {
    if (chosen.size() == slots.size()) {
      ++report.horns;
      auto it = fillers.find(chosen);
      std::size_t count = it == fillers.end() ? 0 : it->second;
      if (count > 0) ++report.fillable;
      if (count == 0 && !report.unfillable) report.unfillable = chosen;
      report.max_fillers = std::max(report.max_fillers, count);
      report.min_fillers = std::min(report.min_fillers, count);
      return;
    }
    const std::size_t j = slots[chosen.size()];
    for (std::size_t y = 0; y < x.size(n - 1); ++y) {
      bool compatible = true;
      // d_i y_j = d_{j−1} y_i for every earlier slot i < j
      if (n >= 2) {
        for (std::size_t t = 0; t < chosen.size() && compatible; ++t) {
          const std::size_t i = slots[t];
          compatible = x.face(n - 1, i, y) == x.face(n - 1, j - 1, chosen[t]);
        }
      }
      if (!compatible) continue;
      chosen.push_back(y);
      rec();
      chosen.pop_back();
    }
  };
  rec();
  if (report.horns == 0) report.min_fillers = 0;
  return report;
}

ChainComplex normalized_chains(const SimplicialSet& x, Field field) {
  const int L = x.level();
  std::vector<std::vector<std::size_t>> basis;
  std::vector<std::map<std::size_t, std::size_t>> position;
  for (int n = 0; n <= L; ++n) {
    basis.push_back(x.nondegenerate(n));
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < basis.back().size(); ++k) pos[basis.back()[k]] = k;
    position.push_back(std::move(pos));
  }
  std::vector<std::size_t> dims{0};
  std::vector<ExactMatrix> diffs{ExactMatrix::zero(field, 0, basis[0].size())};
  dims.push_back(basis[0].size());
  for (int n = 1; n <= L; ++n) {
    const auto un = static_cast<std::size_t>(n);
    ExactMatrix d(field, basis[un - 1].size(), basis[un].size());
    for (std::size_t col = 0; col < basis[un].size(); ++col) {
      for (std::size_t i = 0; i <= un; ++i) {
        std::size_t f = x.face(n, i, basis[un][col]);
        if (x.is_degenerate(n - 1, f)) continue;
        d.add_to(position[un - 1].at(f), col, Scalar(i % 2 == 0 ? 1 : -1));
      }
    }
    diffs.push_back(std::move(d));
    dims.push_back(basis[un].size());
  }
  return ChainComplex(field, -1, std::move(dims), std::move(diffs));
}

// ---------------------------------------------------------------------------
// Loday construction

namespace {

std::size_t power_checked(std::size_t base, std::size_t exp, std::size_t budget) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > budget / base) throw BudgetExceeded(SIZE_MAX, budget);
    r *= base;
  }
  return r;
}

// Product of the factors t[x] for x in `fiber` (in order), as a vector over the algebra basis.
SparseVector fiber_product(const Algebra& a, const SparseVector& unit, const Tuple& t, const std::vector<std::size_t>& fiber) {
  SparseVector acc = unit;
  for (auto x : fiber) acc = a.multiply(acc, SparseVector{{t[x], Scalar(1)}});
  return acc;
}

// Expands ⊗_y v_y into tuples with coefficients.
void expand(const std::vector<SparseVector>& factors, std::size_t pos, Tuple& prefix, const Scalar& coeff,
            const Field& f, std::map<Tuple, Scalar>& acc) {
  if (pos == factors.size()) {
    acc[prefix] += coeff;
    return;
  }
  for (const auto& e : factors[pos]) {
    prefix.push_back(static_cast<std::uint32_t>(e.index));
    expand(factors, pos + 1, prefix, f.mul(coeff, e.value), f, acc);
    prefix.pop_back();
  }
}

// Image under the face map X_n → X_{n−1} of one basis tensor.
std::map<Tuple, Scalar> face_image(const Algebra& a, const SparseVector& unit, const Tuple& t,
                                   const std::vector<std::vector<std::size_t>>& fibers) {
  std::vector<SparseVector> factors;
  for (const auto& fiber : fibers) factors.push_back(fiber_product(a, unit, t, fiber));
  std::map<Tuple, Scalar> acc;
  Tuple prefix;
  expand(factors, 0, prefix, Scalar(1), a.field(), acc);
  return acc;
}

std::vector<std::vector<std::size_t>> fibers_of(const SimplicialSet& x, int n, std::size_t i) {
  std::vector<std::vector<std::size_t>> fibers(x.size(n - 1));
  for (std::size_t s = 0; s < x.size(n); ++s) fibers[x.face(n, i, s)].push_back(s);
  return fibers;
}

}  // namespace

LodayComplex LodayComplex::build(const Algebra& a, const SimplicialSet& x, int maxdeg, std::size_t budget) {
  if (!a.is_commutative()) throw InvalidStructure("the Loday construction needs a commutative algebra");
  if (maxdeg < 1) throw Error("loday needs maxdeg >= 1");
  if (maxdeg > x.level()) {
    throw DegreeOutOfRange("loday through degree " + std::to_string(maxdeg) + " needs level " + std::to_string(maxdeg) +
                           " of the simplicial set (truncation is " + std::to_string(x.level()) + ")");
  }
  UnitAdapted adapted = unit_adapted(a);
  const Algebra& alg = adapted.algebra;
  const std::size_t d = alg.dim();
  const Field& f = alg.field();
  std::size_t total = 0;
  for (int n = 0; n <= maxdeg; ++n) {
    total += power_checked(d, x.size(n), budget);
    if (total > budget) throw BudgetExceeded(total, budget);
  }
  const SparseVector unit{{0, Scalar(1)}};

  std::vector<std::vector<Tuple>> bases;
  std::vector<std::map<Tuple, std::size_t>> lookup;
  for (int n = 0; n <= maxdeg; ++n) {
    const std::size_t width = x.size(n);
    // positions outside the image of s_i: X_{n−1} → X_n
    std::vector<std::vector<std::size_t>> off_image;
    for (int i = 0; n >= 1 && i < n; ++i) {
      std::vector<bool> hit(width, false);
      for (auto y : x.degeneracies()[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(i)]) hit[y] = true;
      std::vector<std::size_t> off;
      for (std::size_t s = 0; s < width; ++s) {
        if (!hit[s]) off.push_back(s);
      }
      off_image.push_back(std::move(off));
    }
    std::vector<Tuple> level;
    Tuple t(width, 0);
    while (true) {
      bool degenerate = std::any_of(off_image.begin(), off_image.end(), [&](const std::vector<std::size_t>& off) {
        return std::all_of(off.begin(), off.end(), [&](std::size_t s) { return t[s] == 0; });
      });
      if (!degenerate) level.push_back(t);
      std::size_t pos = width;
      bool advanced = false;
      while (pos-- > 0) {
        if (t[pos] + 1 < d) {
          ++t[pos];
          std::fill(t.begin() + static_cast<std::ptrdiff_t>(pos) + 1, t.end(), 0u);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    std::map<Tuple, std::size_t> idx;
    for (std::size_t k = 0; k < level.size(); ++k) idx.emplace(level[k], k);
    bases.push_back(std::move(level));
    lookup.push_back(std::move(idx));
  }

  std::vector<std::size_t> dims{0, bases[0].size()};
  std::vector<ExactMatrix> diffs{ExactMatrix::zero(f, 0, bases[0].size())};
  for (int n = 1; n <= maxdeg; ++n) {
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::vector<std::vector<std::size_t>>> fibers;
    for (std::size_t i = 0; i <= un; ++i) fibers.push_back(fibers_of(x, n, i));
    ExactMatrix t(f, bases[un].size(), bases[un - 1].size());
    for (std::size_t col = 0; col < bases[un].size(); ++col) {
      std::map<Tuple, Scalar> acc;
      for (std::size_t i = 0; i <= un; ++i) {
        Scalar sign = i % 2 == 0 ? 1 : -1;
        for (auto& [tup, v] : face_image(alg, unit, bases[un][col], fibers[i])) acc[tup] += sign * v;
      }
      SparseVector row;
      for (auto& [tup, v] : acc) {
        Scalar red = f.reduce(v);
        if (red == 0) continue;
        auto it = lookup[un - 1].find(tup);
        if (it == lookup[un - 1].end()) continue;  // degenerate tensor: zero in the normalized quotient
        row.push_back({it->second, std::move(red)});
      }
      std::sort(row.begin(), row.end(), [](const Entry& p, const Entry& q) { return p.index < q.index; });
      t.set_row(col, std::move(row));
    }
    diffs.push_back(t.transpose());
    dims.push_back(bases[un].size());
  }
  ChainComplex complex(f, -1, std::move(dims), std::move(diffs));
  return LodayComplex(alg, maxdeg, std::move(bases), std::move(complex));
}

ChainComplex loday(const Algebra& a, const SimplicialSet& x, int maxdeg, std::size_t budget) {
  return LodayComplex::build(a, x, maxdeg, budget).complex();
}

std::size_t loday_h0_coequalizer(const Algebra& a, const SimplicialSet& x, std::size_t budget) {
  if (!a.is_commutative()) throw InvalidStructure("the Loday construction needs a commutative algebra");
  if (x.level() < 1) throw DegreeOutOfRange("H_0 coequalizer needs level 1 of the simplicial set");
  const std::size_t d = a.dim();
  const std::size_t w0 = x.size(0);
  const std::size_t w1 = x.size(1);
  const std::size_t n0 = power_checked(d, w0, budget);
  const std::size_t n1 = power_checked(d, w1, budget);
  const Field& f = a.field();
  const SparseVector unit = sparse_from_dense(f, a.unit());
  auto encode = [&](const Tuple& t) {
    std::size_t k = 0;
    for (auto v : t) k = k * d + v;
    return k;
  };
  auto f0 = fibers_of(x, 1, 0);
  auto f1 = fibers_of(x, 1, 1);
  Echelon image(f, n0);
  Tuple t(w1, 0);
  for (std::size_t code = 0; code < n1; ++code) {
    std::size_t c = code;
    for (std::size_t p = w1; p-- > 0;) {
      t[p] = static_cast<std::uint32_t>(c % d);
      c /= d;
    }
    std::map<std::size_t, Scalar> acc;
    for (auto& [tup, v] : face_image(a, unit, t, f0)) acc[encode(tup)] += v;
    for (auto& [tup, v] : face_image(a, unit, t, f1)) acc[encode(tup)] -= v;
    SparseVector row;
    for (auto& [k, v] : acc) {
      Scalar red = f.reduce(v);
      if (red != 0) row.push_back({k, std::move(red)});
    }
    image.insert(std::move(row));
  }
  return n0 - image.rank();
}

CircleIdentification circle_identification(const Algebra& a, int maxdeg, std::size_t budget) {
  SimplicialSet s1 = models::circle(maxdeg);
  auto lc = LodayComplex::build(a, s1, maxdeg, budget);
  auto hc = HochschildComplex::build(a, maxdeg, budget);
  CircleIdentification out;
  out.dims_equal = true;
  for (int n = -1; n <= maxdeg; ++n) out.dims_equal = out.dims_equal && lc.complex().dim(n) == hc.complex().dim(n);
  if (!out.dims_equal) return out;

  std::vector<std::vector<std::size_t>> to_hh(static_cast<std::size_t>(maxdeg) + 1);
  out.bases_correspond = true;
  for (int n = 0; n <= maxdeg; ++n) {
    std::vector<std::size_t> position(s1.size(n));
    for (std::size_t s = 0; s < s1.size(n); ++s) {
      EZForm e = *s1.ez(n, s);
      position[s] = e.base_dim == 0
                        ? 0
                        : static_cast<std::size_t>(std::count(e.surjection.begin(), e.surjection.end(), 0u));
    }
    std::vector<bool> used(hc.basis(n).size(), false);
    for (const auto& t : lc.basis(n)) {
      Tuple h(t.size());
      for (std::size_t s = 0; s < t.size(); ++s) h[position[s]] = t[s];
      auto k = hc.index(n, h);
      if (!k || used[*k]) {
        out.bases_correspond = false;
        return out;
      }
      used[*k] = true;
      to_hh[static_cast<std::size_t>(n)].push_back(*k);
    }
  }
  out.differentials_equal = true;
  for (int n = 1; n <= maxdeg; ++n) {
    const ExactMatrix& dl = lc.complex().differential(n);
    const ExactMatrix& dh = hc.complex().differential(n);
    const auto& rows = to_hh[static_cast<std::size_t>(n) - 1];
    const auto& cols = to_hh[static_cast<std::size_t>(n)];
    for (std::size_t r = 0; r < dl.rows() && out.differentials_equal; ++r) {
      // every entry of dl must match, and dh must have no extra entries in the row
      if (dl.row(r).size() != dh.row(rows[r]).size()) out.differentials_equal = false;
      for (const auto& e : dl.row(r)) {
        if (dh.at(rows[r], cols[e.index]) != e.value) out.differentials_equal = false;
      }
    }
  }
  return out;
}

TorusReport torus_check(const Algebra& a, int maxdeg, std::size_t budget) {
  SimplicialSet t2 = models::torus(maxdeg);
  TorusReport r;
  r.torus = homology_dims(loday(a, t2, maxdeg, budget), 0, maxdeg - 1);
  r.circle = hh_dims(a, maxdeg, budget);
  r.h0_coequalizer = loday_h0_coequalizer(a, t2, budget);
  return r;
}

}  // namespace facthom
