// Command-line front end: facthom <subcommand> [options]
#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "facthom/bar.hpp"
#include "facthom/errors.hpp"
#include "facthom/formats.hpp"
#include "facthom/hochschild.hpp"
#include "facthom/simplicial.hpp"
#include "facthom/tft.hpp"

using namespace facthom;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Report {
  Json doc;
  std::ostringstream text;
  std::optional<bool> verdict;

  void input(const std::string& path, const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    doc["inputs"].push_back({{"path", path}, {"sha256", hex.str()}});
  }
};

std::string load(Report& r, const std::string& path) {
  std::string bytes = formats::slurp(path);
  r.input(path, bytes);
  return bytes;
}

Json dims_json(const std::map<int, std::size_t>& dims) {
  Json j = Json::object();
  for (auto [n, d] : dims) j[std::to_string(n)] = d;
  return j;
}

std::string dims_text(const std::map<int, std::size_t>& dims) {
  std::string s;
  for (auto [n, d] : dims) s += (s.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(d);
  return s;
}

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().format(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " empty)\n";
  return m.to_string();
}

Field parse_field(const std::string& name) {
  if (name == "Q") return Field::rationals();
  if (name.size() > 1 && name[0] == 'F' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
    return Field::prime(std::stoull(name.substr(1)));
  }
  throw Error("unknown field '" + name + "' (use Q or F<p>)");
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------------------
// input selection

struct AlgebraSource {
  std::string file;
  std::string corpus_name;
  std::string field = "Q";

  void attach(CLI::App* app) {
    auto* f = app->add_option("--algebra", file, "algebra file");
    auto* c = app->add_option("--corpus", corpus_name, "bundled algebra: ground, split, dual, x3, m2, upper, s3");
    f->excludes(c);
    app->add_option("--field", field, "field for --corpus: Q or F<p>");
  }

  Algebra load(Report& r) const {
    if (!file.empty()) {
      Algebra a = formats::read_algebra(::load(r, file));
      r.doc["algebra"] = {{"source", file}, {"field", a.field().name()}, {"dim", a.dim()}};
      return a;
    }
    if (corpus_name.empty()) throw Error("one of --algebra or --corpus is required");
    for (auto& [name, a] : corpus::all(parse_field(field))) {
      if (name == corpus_name) {
        r.doc["algebra"] = {{"source", "corpus:" + name}, {"field", a.field().name()}, {"dim", a.dim()}};
        return a;
      }
    }
    throw Error("unknown corpus algebra '" + corpus_name + "'");
  }
};

struct SimplicialSource {
  std::string file;
  std::string model;
  std::string category_file;
  std::string category;
  int level = 3;

  void attach(CLI::App* app, int default_level) {
    level = default_level;
    auto* a = app->add_option("--sset", file, "simplicial set file");
    auto* b = app->add_option("--model", model, "bundled model: point, simplex:<n>, boundary:<n>, horn:<n>:<k>, circle, circle2, sphere, sphere2, torus");
    auto* c = app->add_option("--category", category_file, "category file (uses its nerve)");
    auto* d = app->add_option("--corpus-category", category, "bundled category: terminal, poset2, z2, iso, idempotent");
    a->excludes(b)->excludes(c)->excludes(d);
    b->excludes(c)->excludes(d);
    c->excludes(d);
    app->add_option("--level", level, "truncation level for models and nerves")->check(CLI::Range(0, 12));
  }

  SimplicialSet load(Report& r) const {
    if (!file.empty()) {
      r.doc["simplicial_set"] = {{"source", file}};
      return formats::read_simplicial_set(::load(r, file));
    }
    if (!model.empty()) {
      r.doc["simplicial_set"] = {{"source", "model:" + model}, {"level", level}};
      return models::by_name(model, level);
    }
    FinCategory c = load_category(r);
    return nerve(c, level);
  }

  FinCategory load_category(Report& r) const {
    if (!category_file.empty()) {
      r.doc["simplicial_set"] = {{"source", "nerve:" + category_file}, {"level", level}};
      return formats::read_category(::load(r, category_file));
    }
    if (category.empty()) throw Error("one of --sset, --model, --category or --corpus-category is required");
    r.doc["simplicial_set"] = {{"source", "nerve:corpus:" + category}, {"level", level}};
    if (category == "terminal") return categories::terminal();
    if (category == "poset2") return categories::poset(2);
    if (category == "z2") return categories::z2_groupoid();
    if (category == "iso") return categories::walking_isomorphism();
    if (category == "idempotent") return categories::idempotent();
    throw Error("unknown corpus category '" + category + "'");
  }
};

std::size_t default_budget() {
  if (const char* env = std::getenv("FACTHOM_BUDGET")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("FACTHOM_BUDGET must be a positive integer");
    }
    return std::stoull(s);
  }
  return kDefaultBudget;
}

// ---------------------------------------------------------------------------
// subcommands

void run_hh(Report& r, const AlgebraSource& src, int maxdeg, std::size_t budget) {
  Algebra a = src.load(r);
  auto dims = hh_dims(a, maxdeg, budget);
  std::size_t cc = cocenter(a).dim;
  r.doc["result"] = {{"maxdeg", maxdeg}, {"hh", dims_json(dims)}, {"cocenter_dim", cc}};
  r.text << "HH through degree " << maxdeg - 1 << " (truncation " << maxdeg << ")\n" << dims_text(dims) << "\n";
  r.text << "cocenter dim " << cc << "\n";
}

void run_hh_graded(Report& r, std::size_t vars, std::size_t weight, const std::string& field, std::size_t budget) {
  GradedAlgebra p = polynomial_algebra(vars, weight, parse_field(field));
  auto dims = graded_hh_dims(p, weight, budget);
  r.doc["result"] = {{"vars", vars}, {"weight", weight}, {"field", p.field().name()}, {"hh", dims_json(dims)}};
  r.text << "HH of k[x_1..x_" << vars << "] at weight " << weight << "\n" << dims_text(dims) << "\n";
}

void run_cocenter(Report& r, const AlgebraSource& src, std::size_t budget) {
  Algebra a = src.load(r);
  Cocenter c = cocenter(a);
  auto hh0 = hh_dims(a, 1, budget).at(0);
  Json reps = Json::array();
  for (auto i : c.representatives) reps.push_back(a.labels()[i]);
  r.verdict = hh0 == c.dim;
  r.doc["result"] = {{"cocenter_dim", c.dim}, {"representatives", reps}, {"hh0", hh0}};
  r.text << "dim A/[A,A] = " << c.dim << "\nrepresentatives";
  for (auto i : c.representatives) r.text << ' ' << a.labels()[i];
  r.text << "\nHH_0 = " << hh0 << "\n";
}

void run_excision(Report& r, const AlgebraSource& src, int maxdeg, std::size_t budget) {
  Algebra a = src.load(r);
  auto rep = excision_circle_check(a, maxdeg, budget);
  Json rows = Json::array();
  r.text << "convention: " << kExcisionConvention << "\n";
  r.text << std::setw(6) << "degree" << std::setw(8) << "Tor" << std::setw(8) << "HH" << "\n";
  for (const auto& row : rep.rows) {
    rows.push_back({{"degree", row.degree}, {"tor", row.tor}, {"hh", row.hh}, {"agree", row.agree()}});
    r.text << std::setw(6) << row.degree << std::setw(8) << row.tor << std::setw(8) << row.hh << "\n";
  }
  r.verdict = rep.passed();
  r.doc["result"] = {{"convention", kExcisionConvention}, {"rows", rows}};
}

void run_hkr(Report& r, std::size_t vars, std::size_t weight, std::size_t budget) {
  GradedAlgebra p = polynomial_algebra(vars, weight, Field::rationals());
  auto hh = graded_hh_dims(p, weight, budget);
  std::map<int, std::size_t> omega;
  Json checks = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i <= weight; ++i) {
    omega[static_cast<int>(i)] = i <= vars ? kaehler_dims(vars, i, weight) : 0;
    if (i <= vars && i <= weight) {
      auto c = hkr_check(p, i, weight);
      checks.push_back({{"form_degree", i},
                        {"kaehler_dim", c.kaehler_dim},
                        {"hh_dim", c.hh_dim},
                        {"cycles", c.columns_are_cycles},
                        {"injective", c.injective_on_homology},
                        {"surjective", c.surjective_on_homology}});
      ok = ok && c.passed();
    }
  }
  ok = ok && hh == omega;
  r.verdict = ok;
  r.doc["result"] = {{"vars", vars}, {"weight", weight}, {"hh", dims_json(hh)}, {"omega", dims_json(omega)}, {"hkr_map", checks}};
  r.text << "HH " << dims_text(hh) << "\nΩ  " << dims_text(omega) << "\n";
  for (const auto& c : checks) {
    r.text << "hkr degree " << c["form_degree"].get<std::size_t>() << ": "
           << (c["cycles"].get<bool>() && c["injective"].get<bool>() && c["surjective"].get<bool>() ? "iso" : "not iso")
           << "\n";
  }
}

void run_connes(Report& r, const AlgebraSource& src, int maxdeg, std::size_t weights, std::size_t budget) {
  bool ok = true;
  Json result = Json::object();
  if (!src.file.empty() || !src.corpus_name.empty()) {
    Algebra a = src.load(r);
    auto h = HochschildComplex::build(a, maxdeg, budget);
    auto id = check_differential_identities(h, connes_b(h));
    result["identities"] = {{"maxdeg", maxdeg},
                            {"bb", id.b_squared_zero},
                            {"BB", id.B_squared_zero},
                            {"bB+Bb", id.bB_plus_Bb_zero}};
    r.text << "b∘b = 0: " << pass_fail(id.b_squared_zero) << "\nB∘B = 0: " << pass_fail(id.B_squared_zero)
           << "\nbB + Bb = 0: " << pass_fail(id.bB_plus_Bb_zero) << "\n";
    if (id.first_failure) r.text << "first failure in degree " << *id.first_failure << "\n";
    ok = id.ok();
  }
  if (weights > 0) {
    Json rows = Json::array();
    for (std::size_t w = 1; w <= weights; ++w) {
      auto c = circle_action_check(w);
      rows.push_back({{"weight", w}, {"passed", c.passed}, {"sign", c.sign}});
      r.text << "[B(x^" << w << ")] = " << (c.sign < 0 ? "-" : "") << w << "·[x^" << w - 1 << " ⊗ x]: "
             << pass_fail(c.passed) << "\n";
      ok = ok && c.passed;
    }
    result["circle_action"] = rows;
  }
  if (result.empty()) throw Error("connes-check needs --algebra/--corpus or --weights");
  r.verdict = ok;
  r.doc["result"] = result;
}

void run_kan(Report& r, const SimplicialSource& src, int max_n, const std::string& require) {
  SimplicialSet x = src.load(r);
  const int top = std::min(max_n, x.level());
  if (top < 1) throw DegreeOutOfRange("horn checks need level >= 1");
  bool kan = true, inner = true, unique = true;
  Json rows = Json::array();
  r.text << std::setw(3) << "n" << std::setw(3) << "k" << std::setw(8) << "horns" << std::setw(9) << "fillable"
         << std::setw(6) << "min" << std::setw(6) << "max" << "\n";
  std::optional<Json> witness;
  for (int n = 1; n <= top; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto h = horn_check(x, n, k);
      const bool is_inner = k > 0 && k < n;
      kan = kan && h.all_fillable();
      if (is_inner) {
        inner = inner && h.all_fillable();
        unique = unique && h.unique_fillers();
      }
      Json row = {{"n", n}, {"k", k}, {"horns", h.horns}, {"fillable", h.fillable}, {"min_fillers", h.min_fillers},
                  {"max_fillers", h.max_fillers}};
      if (h.unfillable) {
        Json faces = Json::array();
        for (auto f : *h.unfillable) faces.push_back(x.name(n - 1, f));
        row["unfillable"] = faces;
        if (!witness) witness = Json{{"n", n}, {"k", k}, {"faces", faces}};
      }
      rows.push_back(row);
      r.text << std::setw(3) << n << std::setw(3) << k << std::setw(8) << h.horns << std::setw(9) << h.fillable
             << std::setw(6) << h.min_fillers << std::setw(6) << h.max_fillers << "\n";
    }
  }
  r.text << "kan " << (kan ? "yes" : "no") << ", inner-kan " << (inner ? "yes" : "no") << ", unique inner fillers "
         << (unique ? "yes" : "no") << "\n";
  if (witness) {
    r.text << "unfillable horn Λ^" << (*witness)["n"].get<int>() << "_" << (*witness)["k"].get<int>() << " faces";
    for (const auto& f : (*witness)["faces"]) r.text << ' ' << f.get<std::string>();
    r.text << "\n";
  }
  r.doc["result"] = {{"rows", rows}, {"kan", kan}, {"inner_kan", inner}, {"unique_inner", unique}};
  if (witness) r.doc["result"]["witness"] = *witness;
  if (require == "kan") r.verdict = kan;
  if (require == "inner") r.verdict = inner;
  if (require == "unique") r.verdict = unique;
  if (!require.empty() && require != "none") r.doc["result"]["require"] = require;
}

void run_nerve(Report& r, const SimplicialSource& src, bool list) {
  FinCategory c = src.load_category(r);
  SimplicialSet x = nerve(c, src.level);
  Json sizes = Json::array();
  Json levels = Json::array();
  for (int n = 0; n <= x.level(); ++n) {
    sizes.push_back(x.size(n));
    r.text << "level " << n << ": " << x.size(n) << " simplices, " << x.nondegenerate(n).size() << " nondegenerate\n";
    if (list) {
      Json names = Json::array();
      for (std::size_t e = 0; e < x.size(n); ++e) {
        names.push_back(x.name(n, e));
        r.text << "  " << x.name(n, e) << (x.is_degenerate(n, e) ? " (degenerate)" : "") << "\n";
      }
      levels.push_back(names);
    }
  }
  r.doc["result"] = {{"objects", c.object_count()}, {"morphisms", c.morphism_count()}, {"groupoid", c.is_groupoid()},
                     {"sizes", sizes}};
  if (list) r.doc["result"]["simplices"] = levels;
}

void run_chains(Report& r, const SimplicialSource& src, const std::string& field) {
  SimplicialSet x = src.load(r);
  ChainComplex c = normalized_chains(x, parse_field(field));
  std::map<int, std::size_t> cells;
  for (int n = 0; n <= x.level(); ++n) cells[n] = c.dim(n);
  auto h = homology_dims(c, 0, x.level() - 1);
  r.doc["result"] = {{"field", field}, {"nondegenerate", dims_json(cells)}, {"homology", dims_json(h)}};
  r.text << "nondegenerate " << dims_text(cells) << "\nH " << dims_text(h) << "\n";
}

void run_loday(Report& r, const AlgebraSource& asrc, const SimplicialSource& ssrc, int maxdeg, std::size_t budget) {
  Algebra a = asrc.load(r);
  SimplicialSet x = ssrc.load(r);
  auto lc = LodayComplex::build(a, x, maxdeg, budget);
  std::map<int, std::size_t> chains;
  for (int n = 0; n <= maxdeg; ++n) chains[n] = lc.complex().dim(n);
  auto h = homology_dims(lc.complex(), 0, maxdeg - 1);
  r.doc["result"] = {{"maxdeg", maxdeg}, {"chains", dims_json(chains)}, {"homology", dims_json(h)}};
  r.text << "normalized chains " << dims_text(chains) << "\nH " << dims_text(h) << "\n";
}

void run_torus(Report& r, const AlgebraSource& src, int maxdeg, std::size_t budget) {
  Algebra a = src.load(r);
  auto t = torus_check(a, maxdeg, budget);
  r.verdict = t.torus.at(0) == t.h0_coequalizer;
  r.doc["result"] = {{"maxdeg", maxdeg}, {"torus", dims_json(t.torus)}, {"circle", dims_json(t.circle)},
                     {"h0_coequalizer", t.h0_coequalizer}};
  r.text << "T² " << dims_text(t.torus) << "\nS¹ " << dims_text(t.circle) << "\nH_0 by coequalizer " << t.h0_coequalizer
         << "\n";
}

void run_tft_eval(Report& r, const std::string& file, std::size_t n, const std::string& field) {
  Cobordism1 x = formats::read_cobordism(load(r, file));
  ExactMatrix m = evaluate(n, x, parse_field(field));
  r.doc["result"] = {{"source", x.source().to_string()}, {"target", x.target().to_string()}, {"circles", x.circles()},
                     {"dim", n}, {"rows", m.rows()}, {"cols", m.cols()}, {"matrix", matrix_json(m)}};
  r.text << "Z(X): k^" << m.cols() << " -> k^" << m.rows() << "\n" << matrix_text(m);
}

void run_tft_zorro(Report& r, std::size_t n) {
  auto factors = zorro_factors_plus();
  Cobordism1 snake = compose(factors[1], factors[0]);
  ExactMatrix m = evaluate(n, factors[1]) * evaluate(n, factors[0]);
  const bool strict = snake == Cobordism1::identity(SignedPoints::parse("+"));
  const bool ok = strict && m == ExactMatrix::identity(Field::rationals(), n);
  r.verdict = ok;
  r.doc["result"] = {{"dim", n}, {"composite_is_identity_strand", strict}, {"matrix", matrix_json(m)}};
  r.text << "(id ⊔ ε)∘(u ⊔ id) = " << (strict ? "identity strand" : "not the identity strand") << "\n" << matrix_text(m);
}

ExactMatrix random_invertible(std::size_t n, const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  while (true) {
    ExactMatrix g(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g.set(i, j, f.from_int(dist(rng)));
    }
    if (inverse(g)) return g;
  }
}

void run_tft_dual(Report& r, const std::string& file, std::optional<std::size_t> n, bool infinite,
                  std::optional<std::uint64_t> twist, const std::string& field) {
  if (infinite) {
    auto v = full_dualizable_vect(std::nullopt);
    r.verdict = v.passed;
    r.doc["result"] = {{"dim", "infinite"}, {"explanation", v.explanation}};
    r.text << "infinite-dimensional: not dualizable\n" << v.explanation << "\n";
    return;
  }
  std::optional<DualityDatum> d;
  if (!file.empty()) {
    d = formats::read_duality(load(r, file));
  } else {
    if (!n) throw Error("tft dual needs --datum, --dim or --infinite");
    d = full_dualizable_vect(*n, parse_field(field)).witness;
    if (twist) {
      std::mt19937_64 rng(*twist);
      d = d->twisted(random_invertible(*n, d->field(), rng));
    }
  }
  auto rep = duality_check(*d);
  auto [sp, sm] = snakes_via_cobordisms(*d);
  const bool cob = sp == ExactMatrix::identity(d->field(), d->n) && sm == ExactMatrix::identity(d->field(), d->n_dual);
  r.verdict = rep.passed && cob;
  r.doc["result"] = {{"field", d->field().name()}, {"dim", d->n}, {"dual_dim", d->n_dual},
                     {"u", matrix_json(d->u)}, {"epsilon", matrix_json(d->epsilon)},
                     {"matrix_snakes", rep.passed}, {"cobordism_snakes", cob}};
  r.text << "V dim " << d->n << ", V_L dim " << d->n_dual << " over " << d->field().name() << "\n";
  r.text << "snake identities (matrices): " << pass_fail(rep.passed) << "\n";
  r.text << "snake identities (cobordisms): " << pass_fail(cob) << "\n";
  if (!rep.passed) {
    r.doc["result"]["residual_plus"] = matrix_json(rep.residual_plus);
    r.doc["result"]["residual_minus"] = matrix_json(rep.residual_minus);
    r.text << "residual id_V - snake:\n" << matrix_text(rep.residual_plus);
    r.text << "residual id_VL - snake:\n" << matrix_text(rep.residual_minus);
  }
}

void run_eh(Report& r, const std::string& file, std::size_t scan) {
  if (!file.empty()) {
    MonoidPair m = formats::read_monoids(load(r, file));
    try {
      auto rep = eckmann_hilton_check(m);
      r.verdict = rep.passed();
      r.doc["result"] = {{"size", m.size}, {"interchange", true}, {"ops_equal", rep.ops_equal},
                         {"commutative", rep.commutative}, {"op1_associative", rep.op1_associative},
                         {"op2_associative", rep.op2_associative}};
      r.text << "interchange holds; op1 = op2: " << (rep.ops_equal ? "yes" : "no")
             << "; commutative: " << (rep.commutative ? "yes" : "no") << "\n";
      if (rep.counterexample) {
        r.doc["result"]["counterexample"] = {(*rep.counterexample)[0], (*rep.counterexample)[1]};
        r.text << "counterexample (" << (*rep.counterexample)[0] << ", " << (*rep.counterexample)[1] << ")\n";
      }
    } catch (const InterchangeViolation& v) {
      const auto& w = v.witness();
      r.verdict = false;
      r.doc["result"] = {{"size", m.size}, {"interchange", false}, {"witness", {w[0], w[1], w[2], w[3]}}};
      r.text << "interchange fails at (a, b, c, d) = (" << w[0] << ", " << w[1] << ", " << w[2] << ", " << w[3] << ")\n";
    }
    return;
  }
  if (scan == 0) throw Error("eh-check needs --monoids or --scan");
  auto s = eckmann_hilton_scan(scan);
  r.verdict = s.failures == 0;
  r.doc["result"] = {{"max_size", s.max_size}, {"pairs_examined", s.pairs_examined},
                     {"interchange_pairs", s.interchange_pairs},
                     {"associative_interchange_pairs", s.associative_interchange_pairs}, {"failures", s.failures}};
  r.text << "sizes 1.." << s.max_size << ": " << s.pairs_examined << " unital pairs, " << s.interchange_pairs
         << " satisfy interchange, " << s.failures << " of those non-commutative or with op1 != op2\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hochschild, bar, Loday and 1-dimensional TFT computations"};
  app.require_subcommand(1);
  bool json = false;
  std::size_t budget = 0;
  app.fallthrough();
  app.add_flag("--json", json, "emit one JSON document instead of text");
  auto* budget_opt = app.add_option("--budget", budget, "maximum basis elements per complex (env FACTHOM_BUDGET)");
  budget_opt->check(CLI::PositiveNumber);

  AlgebraSource asrc;
  SimplicialSource ssrc;
  int maxdeg = 4;
  std::size_t vars = 1, weight = 1, weights = 0, scan = 0, dim = 1;
  std::string field = "Q", require, file;
  bool list = false, infinite = false;
  std::optional<std::size_t> dual_dim;
  std::optional<std::uint64_t> twist;
  int max_n = 3;

  auto* hh = app.add_subcommand("hh", "Hochschild homology dims of an algebra");
  asrc.attach(hh);
  hh->add_option("--maxdeg", maxdeg, "truncation degree N (reports 0..N-1)")->check(CLI::Range(1, 64));

  auto* hhg = app.add_subcommand("hh-graded", "weight-graded HH of a polynomial algebra");
  hhg->add_option("--vars", vars)->check(CLI::Range(1, 4));
  hhg->add_option("--weight", weight)->required()->check(CLI::Range(0, 12));
  hhg->add_option("--field", field, "Q or F<p>");

  auto* coc = app.add_subcommand("cocenter", "A/[A,A] compared with HH_0");
  asrc.attach(coc);

  auto* exc = app.add_subcommand("excision", "Tor over A⊗A^op of (A, A) against HH");
  asrc.attach(exc);
  exc->add_option("--maxdeg", maxdeg)->check(CLI::Range(1, 16));

  auto* hkr = app.add_subcommand("hkr", "HKR: graded HH against Kähler forms");
  hkr->add_option("--vars", vars)->check(CLI::Range(1, 4));
  hkr->add_option("--weight", weight)->required()->check(CLI::Range(0, 12));

  auto* con = app.add_subcommand("connes-check", "b² = B² = bB + Bb = 0 and the circle action on Q[x]");
  asrc.attach(con);
  con->add_option("--maxdeg", maxdeg)->check(CLI::Range(1, 16));
  con->add_option("--weights", weights, "check [B(x^w)] for w = 1..W")->check(CLI::Range(0, 10));

  auto* kan = app.add_subcommand("kan", "horn filling table");
  ssrc.attach(kan, 3);
  kan->add_option("--max-n", max_n, "largest horn dimension")->check(CLI::Range(1, 12));
  kan->add_option("--require", require, "exit 1 unless: kan, inner, unique")
      ->check(CLI::IsMember({"none", "kan", "inner", "unique"}));

  auto* ner = app.add_subcommand("nerve", "nerve of a finite category");
  ssrc.attach(ner, 3);
  ner->add_flag("--list", list, "list every simplex");

  auto* chn = app.add_subcommand("chains", "normalized chains and homology of a simplicial set");
  ssrc.attach(chn, 3);
  chn->add_option("--field", field, "Q or F<p>");

  auto* lod = app.add_subcommand("loday", "Loday construction of a commutative algebra over a simplicial set");
  lod->add_option("--algebra", asrc.file, "algebra file");
  lod->add_option("--corpus", asrc.corpus_name, "bundled algebra");
  lod->add_option("--field", asrc.field, "field for --corpus");
  lod->add_option("--sset", ssrc.file, "simplicial set file");
  lod->add_option("--model", ssrc.model, "bundled simplicial model");
  lod->add_option("--level", ssrc.level, "model truncation (defaults to maxdeg)");
  lod->add_option("--maxdeg", maxdeg)->check(CLI::Range(1, 12));

  auto* tor = app.add_subcommand("torus", "Loday construction over the torus, with H_0 by coequalizer");
  asrc.attach(tor);
  tor->add_option("--maxdeg", maxdeg, "truncation degree (default 2)")->check(CLI::Range(1, 6));

  auto* tft = app.add_subcommand("tft", "oriented 1-dimensional cobordisms");
  tft->require_subcommand(1);
  auto* tev = tft->add_subcommand("eval", "evaluate a cobordism on k^n");
  tev->add_option("--cobordism", file)->required();
  tev->add_option("--dim", dim)->check(CLI::Range(0, 16));
  tev->add_option("--field", field);
  auto* tzo = tft->add_subcommand("zorro", "snake identity on k^n");
  tzo->add_option("--dim", dim)->check(CLI::Range(0, 16));
  auto* tdu = tft->add_subcommand("dual", "duality datum check");
  auto* datum_opt = tdu->add_option("--datum", file, "duality datum file");
  tdu->add_option("--dim", dual_dim, "canonical datum on k^n")->excludes(datum_opt)->check(CLI::Range(0, 16));
  tdu->add_option("--twist", twist, "twist the canonical datum by a random invertible matrix from this seed");
  tdu->add_flag("--infinite", infinite, "infinite-dimensional space");
  tdu->add_option("--field", field);

  auto* eh = app.add_subcommand("eh-check", "Eckmann-Hilton check");
  auto* mon = eh->add_option("--monoids", file, "monoid pair file");
  eh->add_option("--scan", scan, "exhaustive scan up to this set size")->excludes(mon)->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Report r;
  Json command = Json::array();
  for (int i = 1; i < argc; ++i) command.push_back(argv[i]);
  r.doc["command"] = command;
  r.doc["inputs"] = Json::array();
  try {
    if (!budget_opt->count()) budget = default_budget();
    r.doc["budget"] = budget;
    if (*hh) run_hh(r, asrc, maxdeg, budget);
    if (*hhg) run_hh_graded(r, vars, weight, field, budget);
    if (*coc) run_cocenter(r, asrc, budget);
    if (*exc) run_excision(r, asrc, exc->count("--maxdeg") ? maxdeg : 3, budget);
    if (*hkr) run_hkr(r, vars, weight, budget);
    if (*con) run_connes(r, asrc, maxdeg, weights, budget);
    if (*kan) run_kan(r, ssrc, max_n, require);
    if (*ner) run_nerve(r, ssrc, list);
    if (*chn) run_chains(r, ssrc, field);
    if (*lod) {
      const int deg = lod->count("--maxdeg") ? maxdeg : 3;
      if (!lod->count("--level")) ssrc.level = deg;
      run_loday(r, asrc, ssrc, deg, budget);
    }
    if (*tor) run_torus(r, asrc, tor->count("--maxdeg") ? maxdeg : 2, budget);
    if (*tev) run_tft_eval(r, file, dim, field);
    if (*tzo) run_tft_zorro(r, dim);
    if (*tdu) run_tft_dual(r, file, dual_dim, infinite, twist, field);
    if (*eh) run_eh(r, file, scan);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise with --budget or FACTHOM_BUDGET)\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  r.doc["verdict"] = r.verdict ? Json(pass_fail(*r.verdict)) : Json(nullptr);
  if (json) {
    std::cout << r.doc.dump(2) << "\n";
  } else {
    std::cout << "facthom";
    for (int i = 1; i < argc; ++i) std::cout << ' ' << argv[i];
    std::cout << "\n";
    for (const auto& in : r.doc["inputs"]) {
      std::cout << "input " << in["path"].get<std::string>() << " sha256:" << in["sha256"].get<std::string>() << "\n";
    }
    std::cout << r.text.str();
    if (r.verdict) std::cout << "verdict " << pass_fail(*r.verdict) << "\n";
  }
  return r.verdict.value_or(true) ? kExitOk : kExitCheckFailed;
}
