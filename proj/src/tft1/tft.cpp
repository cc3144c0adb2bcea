#include "facthom/tft.hpp"

#include <functional>

#include "facthom/errors.hpp"

namespace facthom {

SignedPoints SignedPoints::parse(const std::string& text) {
  SignedPoints out;
  for (char c : text) {
    if (c == '+') {
      out.signs.push_back(Sign::Plus);
    } else if (c == '-') {
      out.signs.push_back(Sign::Minus);
    } else {
      throw Error(std::string("bad sign character '") + c + "'");
    }
  }
  return out;
}

std::string SignedPoints::to_string() const {
  std::string s;
  for (auto x : signs) s += x == Sign::Plus ? '+' : '-';
  return s;
}

namespace {

Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

}  // namespace

Cobordism1::Cobordism1(SignedPoints source, SignedPoints target, std::vector<std::size_t> partner, std::size_t circles)
    : source_(std::move(source)), target_(std::move(target)), partner_(std::move(partner)), circles_(circles) {
  const std::size_t a = source_.size();
  const std::size_t total = a + target_.size();
  if (partner_.size() != total) throw InvalidStructure("matching must cover every boundary point");
  auto effective = [&](std::size_t p) { return p < a ? source_.signs[p] : flip(target_.signs[p - a]); };
  for (std::size_t p = 0; p < total; ++p) {
    const std::size_t q = partner_[p];
    if (q >= total) throw InvalidStructure("matching points outside the boundary");
    if (q == p) throw InvalidStructure("matching has a fixed point at " + std::to_string(p));
    if (partner_[q] != p) throw InvalidStructure("matching is not an involution at " + std::to_string(p));
    if (effective(p) == effective(q)) {
      throw InvalidStructure("arc " + std::to_string(p) + "-" + std::to_string(q) + " does not respect orientation");
    }
  }
}

Cobordism1 Cobordism1::identity(const SignedPoints& points) {
  const std::size_t a = points.size();
  std::vector<std::size_t> partner(2 * a);
  for (std::size_t i = 0; i < a; ++i) {
    partner[i] = a + i;
    partner[a + i] = i;
  }
  return Cobordism1(points, points, std::move(partner));
}

Cobordism1 Cobordism1::coevaluation() { return Cobordism1({}, SignedPoints::parse("+-"), {1, 0}); }
Cobordism1 Cobordism1::evaluation() { return Cobordism1(SignedPoints::parse("-+"), {}, {1, 0}); }
Cobordism1 Cobordism1::coevaluation_dual() { return Cobordism1(SignedPoints::parse("+-"), {}, {1, 0}); }
Cobordism1 Cobordism1::circles_only(std::size_t circles) { return Cobordism1({}, {}, {}, circles); }

Cobordism1 compose(const Cobordism1& x, const Cobordism1& y) {
  if (!(x.source() == y.target())) {
    throw ShapeMismatch("cannot compose: interface " + y.target().to_string() + " vs " + x.source().to_string());
  }
  const std::size_t a0 = y.source().size();
  const std::size_t a1 = y.target().size();
  const std::size_t a2 = x.target().size();
  std::vector<bool> visited(a1, false);
  std::vector<std::size_t> partner(a0 + a2);

  // Outer points of the result: 0..a0-1 are Y's source, a0.. are X's target.
  auto walk = [&](bool in_y, std::size_t point) -> std::size_t {
    while (true) {
      if (in_y) {
        std::size_t z = y.partner(point);
        if (z < a0) return z;
        visited[z - a0] = true;
        point = z - a0;
        in_y = false;
      } else {
        std::size_t w = x.partner(point);
        if (w >= a1) return a0 + (w - a1);
        visited[w] = true;
        point = a0 + w;
        in_y = true;
      }
    }
  };
  for (std::size_t p = 0; p < a0; ++p) partner[p] = walk(true, p);
  for (std::size_t q = 0; q < a2; ++q) partner[a0 + q] = walk(false, a1 + q);

  std::size_t loops = 0;
  for (std::size_t m = 0; m < a1; ++m) {
    if (visited[m]) continue;
    ++loops;
    std::size_t cur = m;
    while (!visited[cur]) {
      visited[cur] = true;
      std::size_t w = x.partner(cur);  // stays in the middle for a closed loop
      visited[w] = true;
      cur = y.partner(a0 + w) - a0;
    }
  }
  return Cobordism1(y.source(), x.target(), std::move(partner), x.circles() + y.circles() + loops);
}

Cobordism1 disjoint_union(const Cobordism1& x, const Cobordism1& y) {
  const std::size_t xa = x.source().size();
  const std::size_t xb = x.target().size();
  const std::size_t ya = y.source().size();
  const std::size_t yb = y.target().size();
  SignedPoints source = x.source();
  source.signs.insert(source.signs.end(), y.source().signs.begin(), y.source().signs.end());
  SignedPoints target = x.target();
  target.signs.insert(target.signs.end(), y.target().signs.begin(), y.target().signs.end());
  // old index -> new index
  auto from_x = [&](std::size_t p) { return p < xa ? p : xa + ya + (p - xa); };
  auto from_y = [&](std::size_t p) { return p < ya ? xa + p : xa + ya + xb + (p - ya); };
  std::vector<std::size_t> partner(xa + ya + xb + yb);
  for (std::size_t p = 0; p < xa + xb; ++p) partner[from_x(p)] = from_x(x.partner(p));
  for (std::size_t p = 0; p < ya + yb; ++p) partner[from_y(p)] = from_y(y.partner(p));
  return Cobordism1(std::move(source), std::move(target), std::move(partner), x.circles() + y.circles());
}

std::vector<Cobordism1> zorro_factors_plus() {
  auto id = Cobordism1::identity(SignedPoints::parse("+"));
  return {disjoint_union(Cobordism1::coevaluation(), id), disjoint_union(id, Cobordism1::evaluation())};
}

std::vector<Cobordism1> zorro_factors_minus() {
  auto id = Cobordism1::identity(SignedPoints::parse("-"));
  return {disjoint_union(id, Cobordism1::coevaluation()), disjoint_union(Cobordism1::evaluation(), id)};
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

struct Contraction {
  std::size_t dim_plus;
  std::size_t dim_minus;
  std::function<Scalar(std::size_t v, std::size_t l)> cup;  // + label v, − label l
  std::function<Scalar(std::size_t l, std::size_t v)> cap;
  Scalar circle;
};

ExactMatrix contract(const Contraction& c, const Cobordism1& x, const Field& f) {
  const std::size_t a = x.source().size();
  const std::size_t b = x.target().size();
  auto dim_of = [&](Sign s) { return s == Sign::Plus ? c.dim_plus : c.dim_minus; };
  std::vector<std::size_t> sdim, tdim;
  std::size_t rows = 1, cols = 1;
  for (auto s : x.source().signs) {
    sdim.push_back(dim_of(s));
    cols *= sdim.back();
  }
  for (auto s : x.target().signs) {
    tdim.push_back(dim_of(s));
    rows *= tdim.back();
  }
  ExactMatrix out(f, rows, cols);
  if (rows == 0 || cols == 0) return out;

  Scalar circles(1);
  for (std::size_t k = 0; k < x.circles(); ++k) circles = f.mul(circles, c.circle);
  if (circles == 0) return out;

  std::vector<std::pair<std::size_t, std::size_t>> caps, cups, through;
  for (std::size_t p = 0; p < a + b; ++p) {
    std::size_t q = x.partner(p);
    if (q < p) continue;
    if (q < a) {
      caps.push_back({p, q});
    } else if (p < a) {
      through.push_back({p, q - a});
    } else {
      cups.push_back({p - a, q - a});
    }
  }

  std::vector<std::size_t> slabel(a), tlabel(b);
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t rest = col;
    for (std::size_t p = a; p-- > 0;) {
      slabel[p] = rest % sdim[p];
      rest /= sdim[p];
    }
    Scalar weight = circles;
    for (auto [p, q] : caps) {
      bool plus_first = x.source().signs[p] == Sign::Plus;
      std::size_t v = plus_first ? slabel[p] : slabel[q];
      std::size_t l = plus_first ? slabel[q] : slabel[p];
      weight = f.mul(weight, c.cap(l, v));
      if (weight == 0) break;
    }
    if (weight == 0) continue;
    for (auto [p, t] : through) tlabel[t] = slabel[p];
    // enumerate cup labels
    std::function<void(std::size_t, Scalar)> rec = [&](std::size_t k, Scalar w) {
      if (k == cups.size()) {
        std::size_t row = 0;
        for (std::size_t t = 0; t < b; ++t) row = row * tdim[t] + tlabel[t];
        out.add_to(row, col, w);
        return;
      }
      auto [p, q] = cups[k];
      bool plus_first = x.target().signs[p] == Sign::Plus;
      std::size_t pp = plus_first ? p : q;
      std::size_t mm = plus_first ? q : p;
      for (std::size_t v = 0; v < c.dim_plus; ++v) {
        for (std::size_t l = 0; l < c.dim_minus; ++l) {
          Scalar cw = c.cup(v, l);
          if (cw == 0) continue;
          tlabel[pp] = v;
          tlabel[mm] = l;
          rec(k + 1, f.mul(w, cw));
        }
      }
    };
    rec(0, weight);
  }
  return out;
}

}  // namespace

ExactMatrix evaluate(std::size_t n, const Cobordism1& x, Field field) {
  Contraction c{n, n, [](std::size_t v, std::size_t l) { return Scalar(v == l ? 1 : 0); },
                [](std::size_t l, std::size_t v) { return Scalar(v == l ? 1 : 0); }, field.from_int(static_cast<long>(n))};
  return contract(c, x, field);
}

DualityDatum::DualityDatum(std::size_t n_, std::size_t n_dual_, ExactMatrix u_, ExactMatrix epsilon_)
    : n(n_), n_dual(n_dual_), u(std::move(u_)), epsilon(std::move(epsilon_)) {
  if (u.rows() != n * n_dual || u.cols() != 1) throw ShapeMismatch("coevaluation must be n·n_L × 1");
  if (epsilon.rows() != 1 || epsilon.cols() != n_dual * n) throw ShapeMismatch("evaluation must be 1 × n_L·n");
  if (!(u.field() == epsilon.field())) throw FieldMismatch("duality datum over two fields");
}

DualityDatum DualityDatum::canonical(std::size_t n, Field field) {
  ExactMatrix u(field, n * n, 1);
  ExactMatrix e(field, 1, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    u.set(i * n + i, 0, Scalar(1));
    e.set(0, i * n + i, Scalar(1));
  }
  return DualityDatum(n, n, std::move(u), std::move(e));
}

DualityDatum DualityDatum::twisted(const ExactMatrix& g) const {
  if (g.rows() != n || g.cols() != n) throw ShapeMismatch("twist must be n × n");
  auto gi = inverse(g);
  if (!gi) throw InvalidStructure("twist matrix is singular");
  const Field& f = field();
  ExactMatrix idl = ExactMatrix::identity(f, n_dual);
  return DualityDatum(n, n_dual, g.kron(idl) * u, epsilon * idl.kron(*gi));
}

ExactMatrix evaluate_with(const DualityDatum& d, const Cobordism1& x) {
  const Field& f = d.field();
  std::vector<Scalar> u(d.n * d.n_dual, Scalar(0)), e(d.n * d.n_dual, Scalar(0));
  for (std::size_t r = 0; r < d.u.rows(); ++r) {
    for (const auto& en : d.u.row(r)) u[r] = en.value;
  }
  for (const auto& en : d.epsilon.row(0)) e[en.index] = en.value;
  Scalar trace(0);
  for (std::size_t v = 0; v < d.n; ++v) {
    for (std::size_t l = 0; l < d.n_dual; ++l) trace = f.add(trace, f.mul(u[v * d.n_dual + l], e[l * d.n + v]));
  }
  Contraction c{d.n, d.n_dual, [&](std::size_t v, std::size_t l) { return u[v * d.n_dual + l]; },
                [&](std::size_t l, std::size_t v) { return e[l * d.n + v]; }, trace};
  return contract(c, x, f);
}

DualityReport duality_check(const DualityDatum& d) {
  const Field& f = d.field();
  ExactMatrix iv = ExactMatrix::identity(f, d.n);
  ExactMatrix il = ExactMatrix::identity(f, d.n_dual);
  ExactMatrix snake_plus = iv.kron(d.epsilon) * d.u.kron(iv);
  ExactMatrix snake_minus = d.epsilon.kron(il) * il.kron(d.u);
  DualityReport r{false, iv - snake_plus, il - snake_minus};
  r.passed = r.residual_plus.is_zero() && r.residual_minus.is_zero();
  return r;
}

std::pair<ExactMatrix, ExactMatrix> snakes_via_cobordisms(const DualityDatum& d) {
  auto run = [&](const std::vector<Cobordism1>& factors) {
    ExactMatrix acc = evaluate_with(d, factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k) acc = evaluate_with(d, factors[k]) * acc;
    return acc;
  };
  return {run(zorro_factors_plus()), run(zorro_factors_minus())};
}

DualizabilityVerdict full_dualizable_vect(std::optional<std::size_t> n, Field field) {
  DualizabilityVerdict v;
  if (!n) {
    v.passed = false;
    v.explanation =
        "no coevaluation exists: u(1) is a finite sum of pure tensors, so (id ⊗ ε)(u ⊗ id) has image in the span of "
        "finitely many vectors and cannot be the identity of an infinite-dimensional space";
    return v;
  }
  DualityDatum d = DualityDatum::canonical(*n, field);
  v.passed = duality_check(d).passed;
  v.explanation = "canonical coevaluation Σ eᵢ ⊗ eᵢ* and evaluation pairing satisfy both snake identities";
  v.witness = std::move(d);
  return v;
}

}  // namespace facthom
