#include "facthom/chain_complex.hpp"

#include "facthom/errors.hpp"

namespace facthom {

ChainComplex::ChainComplex(Field field, int lo, std::vector<std::size_t> dims, std::vector<ExactMatrix> diffs)
    : field_(field), lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (dims_.empty()) throw ShapeMismatch("chain complex needs at least one degree");
  if (diffs_.size() + 1 != dims_.size()) throw ShapeMismatch("chain complex needs one differential per adjacent pair");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const ExactMatrix& d = diffs_[k];
    if (!(d.field() == field_)) throw FieldMismatch("differential over " + d.field().name());
    if (d.rows() != dims_[k] || d.cols() != dims_[k + 1]) {
      throw ShapeMismatch("differential out of degree " + std::to_string(lo_ + static_cast<int>(k) + 1) +
                          " has shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()));
    }
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
    if (!(diffs_[k] * diffs_[k + 1]).is_zero()) {
      throw InvalidStructure("d∘d != 0 at degree " + std::to_string(lo_ + static_cast<int>(k) + 2));
    }
  }
}

ChainComplex ChainComplex::bounded(Field field, int lo, std::vector<std::size_t> dims,
                                   std::vector<ExactMatrix> diffs) {
  std::vector<std::size_t> padded_dims;
  padded_dims.reserve(dims.size() + 2);
  padded_dims.push_back(0);
  padded_dims.insert(padded_dims.end(), dims.begin(), dims.end());
  padded_dims.push_back(0);
  std::vector<ExactMatrix> padded;
  padded.reserve(diffs.size() + 2);
  padded.push_back(ExactMatrix::zero(field, 0, dims.empty() ? 0 : dims.front()));
  for (auto& d : diffs) padded.push_back(std::move(d));
  padded.push_back(ExactMatrix::zero(field, dims.empty() ? 0 : dims.back(), 0));
  return ChainComplex(field, lo - 1, std::move(padded_dims), std::move(padded));
}

std::size_t ChainComplex::dim(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return dims_[static_cast<std::size_t>(n - lo_)];
}

const ExactMatrix& ChainComplex::differential(int n) const {
  if (n <= lo_ || n > hi()) {
    throw DegreeOutOfRange("differential out of degree " + std::to_string(n) + " is not stored (range " +
                           std::to_string(lo_) + ".." + std::to_string(hi()) + ")");
  }
  return diffs_[static_cast<std::size_t>(n - lo_ - 1)];
}

std::size_t ChainComplex::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims_) t += d;
  return t;
}

std::size_t homology_dim(const ChainComplex& c, int n) {
  if (n - 1 < c.lo() || n + 1 > c.hi()) {
    throw DegreeOutOfRange("H_" + std::to_string(n) + " needs degrees " + std::to_string(n - 1) + ".." +
                           std::to_string(n + 1) + " but the complex stores " + std::to_string(c.lo()) + ".." +
                           std::to_string(c.hi()) + "; increase the truncation");
  }
  std::size_t cycles = c.dim(n) - rank(c.differential(n));
  return cycles - rank(c.differential(n + 1));
}

std::map<int, std::size_t> homology_dims(const ChainComplex& c, int from, int to) {
  std::map<int, std::size_t> out;
  for (int n = from; n <= to; ++n) out[n] = homology_dim(c, n);
  return out;
}

std::map<int, std::size_t> homology_dims(const ChainComplex& c) { return homology_dims(c, c.lo() + 1, c.hi() - 1); }

long euler_characteristic(const ChainComplex& c) {
  long chi = 0;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    long d = static_cast<long>(c.dim(n));
    chi += (n % 2 == 0) ? d : -d;
  }
  return chi;
}

namespace {

// Differential of the complex, reading unstored degrees as zero.
ExactMatrix diff_or_zero(const ChainComplex& c, int n) {
  if (n > c.lo() && n <= c.hi()) return c.differential(n);
  return ExactMatrix::zero(c.field(), c.dim(n - 1), c.dim(n));
}

}  // namespace

ChainComplex hom_complex(const ChainComplex& v, const ChainComplex& w) {
  if (!(v.field() == w.field())) throw FieldMismatch("hom_complex: " + v.field().name() + " vs " + w.field().name());
  const Field& field = v.field();
  int nlo = w.lo() - v.hi();
  int nhi = w.hi() - v.lo();

  // offsets[n][i]: start of the Hom(V_i, W_{i+n}) block inside Hom_n.
  auto block_offsets = [&](int n) {
    std::map<int, std::size_t> off;
    std::size_t total = 0;
    for (int i = v.lo(); i <= v.hi(); ++i) {
      off[i] = total;
      total += v.dim(i) * w.dim(i + n);
    }
    off[v.hi() + 1] = total;
    return off;
  };

  std::vector<std::size_t> dims;
  std::vector<ExactMatrix> diffs;
  std::map<int, std::map<int, std::size_t>> offsets;
  for (int n = nlo; n <= nhi; ++n) {
    offsets[n] = block_offsets(n);
    dims.push_back(offsets[n][v.hi() + 1]);
  }
  for (int n = nlo + 1; n <= nhi; ++n) {
    // D: Hom_n → Hom_{n−1}. For f in block i (f: V_i → W_{i+n}):
    //   d_W∘f lands in block i of Hom_{n−1} (V_i → W_{i+n−1});
    //   f∘d_V lands in block i+1 of Hom_{n−1} (V_{i+1} → W_{i+n}).
    ExactMatrix d(field, dims[static_cast<std::size_t>(n - 1 - nlo)], dims[static_cast<std::size_t>(n - nlo)]);
    Scalar sign = (n % 2 == 0) ? Scalar(-1) : Scalar(1);  // −(−1)^n
    for (int i = v.lo(); i <= v.hi(); ++i) {
      std::size_t vi = v.dim(i);
      std::size_t wt = w.dim(i + n);
      if (vi == 0 || wt == 0) continue;
      std::size_t src_off = offsets[n][i];
      ExactMatrix dw = diff_or_zero(w, i + n);      // W_{i+n} → W_{i+n−1}
      ExactMatrix dv = diff_or_zero(v, i + 1);      // V_{i+1} → V_i
      std::size_t dst_a = offsets[n - 1][i];
      std::size_t dst_b = offsets[n - 1].count(i + 1) ? offsets[n - 1][i + 1] : 0;
      std::size_t vi1 = v.dim(i + 1);
      for (std::size_t r = 0; r < wt; ++r) {
        for (std::size_t c = 0; c < vi; ++c) {
          std::size_t col = src_off + r * vi + c;
          // (d_W∘E_{rc})[r', c] = dW[r', r]
          for (std::size_t r2 = 0; r2 < dw.rows(); ++r2) {
            Scalar x = dw.at(r2, r);
            if (x != 0) d.add_to(dst_a + r2 * vi + c, col, x);
          }
          // (E_{rc}∘d_V)[r, c'] = dV[c, c']
          if (vi1 > 0 && i + 1 <= v.hi()) {
            for (const auto& e : dv.row(c)) d.add_to(dst_b + r * vi1 + e.index, col, sign * e.value);
          }
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex::bounded(field, nlo, std::move(dims), std::move(diffs));
}

ChainMapReport chain_map_check(const ChainMap& f) {
  const Field& field = f.source.field();
  if (!(f.target.field() == field)) throw FieldMismatch("chain map between complexes over different fields");
  for (const auto& [n, m] : f.components) {
    if (m.rows() != f.target.dim(n + f.shift) || m.cols() != f.source.dim(n)) {
      throw ShapeMismatch("chain map component at degree " + std::to_string(n) + " has the wrong shape");
    }
  }
  Scalar sign = (f.shift % 2 == 0) ? Scalar(1) : Scalar(-1);
  ChainMapReport report;
  for (const auto& [n, fn] : f.components) {
    auto prev = f.components.find(n - 1);
    if (prev == f.components.end()) continue;
    int tn = n + f.shift;
    if (n <= f.source.lo() || n > f.source.hi() || tn <= f.target.lo() || tn > f.target.hi()) continue;
    ExactMatrix lhs = f.target.differential(tn) * fn;
    ExactMatrix rhs = (prev->second * f.source.differential(n)).scaled(sign);
    if (!(lhs == rhs)) {
      report.ok = false;
      report.first_violation = n;
      report.residual = lhs - rhs;
      return report;
    }
  }
  return report;
}

}  // namespace facthom
