#include "facthom/formats.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "facthom/errors.hpp"

namespace facthom::formats {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
  const std::string& keyword() const { return tokens.front().text; }
};

std::vector<Line> lex(const std::string& text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    ++number;
    std::string raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, std::size_t token, const std::string& what) {
  std::size_t column = token < line.tokens.size() ? line.tokens[token].column : 1;
  throw ParseError(line.number, column, what);
}

void expect_arity(const Line& line, std::size_t count) {
  if (line.tokens.size() != count + 1) {
    fail(line, std::min(line.tokens.size() - 1, count + 1),
         "'" + line.keyword() + "' takes " + std::to_string(count) + " argument(s), got " +
             std::to_string(line.tokens.size() - 1));
  }
}

std::size_t to_size(const Line& line, std::size_t token) {
  const std::string& t = line.tokens.at(token).text;
  std::size_t value = 0;
  if (t.empty() || t.size() > 18) fail(line, token, "expected a non-negative integer, got '" + t + "'");
  for (char c : t) {
    if (c < '0' || c > '9') fail(line, token, "expected a non-negative integer, got '" + t + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

std::size_t bounded(const Line& line, std::size_t token, std::size_t limit, const std::string& what) {
  std::size_t v = to_size(line, token);
  if (v >= limit) fail(line, token, what + " " + std::to_string(v) + " out of range (must be < " + std::to_string(limit) + ")");
  return v;
}

Scalar to_scalar(const Field& f, const Line& line, std::size_t token) {
  try {
    return f.parse(line.tokens.at(token).text);
  } catch (const Error&) {
    fail(line, token, "expected a rational number, got '" + line.tokens[token].text + "'");
  }
}

Field read_field(const Line& line) {
  if (line.tokens.size() == 2 && line.tokens[1].text == "Q") return Field::rationals();
  if (line.tokens.size() == 3 && line.tokens[1].text == "F") {
    std::size_t p = to_size(line, 2);
    if (!is_prime(p)) fail(line, 2, std::to_string(p) + " is not prime");
    return Field::prime(p);
  }
  fail(line, 1, "expected 'field Q' or 'field F <p>'");
}

std::string field_line(const Field& f) {
  return f.is_rational() ? "field Q\n" : "field F " + std::to_string(f.characteristic()) + "\n";
}

std::string plain(const Field& f, const Scalar& x) { return f.reduce(x).get_str(); }

[[noreturn]] void missing(const std::string& what) { throw ParseError(1, 1, "missing '" + what + "' line"); }

}  // namespace

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// algebra

Algebra read_algebra(const std::string& text) {
  std::optional<Field> field;
  std::optional<std::size_t> dim;
  std::vector<std::string> labels;
  std::optional<std::vector<Scalar>> unit;
  std::vector<Scalar> constants;
  std::map<std::array<std::size_t, 3>, std::size_t> seen;
  for (const auto& line : lex(text)) {
    const std::string& kw = line.keyword();
    if (kw == "field") {
      if (field) fail(line, 0, "duplicate 'field' line");
      field = read_field(line);
    } else if (kw == "dim") {
      if (dim) fail(line, 0, "duplicate 'dim' line");
      expect_arity(line, 1);
      dim = to_size(line, 1);
      if (*dim == 0) fail(line, 1, "dimension must be positive");
      if (*dim > 64) fail(line, 1, "dimension above 64 is not supported");
      constants.assign(*dim * *dim * *dim, Scalar(0));
    } else if (!field || !dim) {
      fail(line, 0, "'field' and 'dim' must come before '" + kw + "'");
    } else if (kw == "basis") {
      expect_arity(line, *dim);
      if (!labels.empty()) fail(line, 0, "duplicate 'basis' line");
      for (std::size_t i = 1; i < line.tokens.size(); ++i) labels.push_back(line.tokens[i].text);
    } else if (kw == "unit") {
      expect_arity(line, *dim);
      if (unit) fail(line, 0, "duplicate 'unit' line");
      unit.emplace();
      for (std::size_t i = 1; i < line.tokens.size(); ++i) unit->push_back(to_scalar(*field, line, i));
    } else if (kw == "mul") {
      expect_arity(line, 4);
      std::size_t i = bounded(line, 1, *dim, "index");
      std::size_t j = bounded(line, 2, *dim, "index");
      std::size_t k = bounded(line, 3, *dim, "index");
      if (!seen.emplace(std::array{i, j, k}, line.number).second) fail(line, 1, "duplicate structure constant");
      constants[(i * *dim + j) * *dim + k] = to_scalar(*field, line, 4);
    } else {
      fail(line, 0, "unknown keyword '" + kw + "'");
    }
  }
  if (!field) missing("field");
  if (!dim) missing("dim");
  if (!unit) missing("unit");
  if (labels.empty()) {
    for (std::size_t i = 0; i < *dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  return Algebra(*field, std::move(labels), std::move(constants), std::move(*unit));
}

std::string write_algebra(const Algebra& a) {
  const Field& f = a.field();
  std::ostringstream out;
  out << field_line(f) << "dim " << a.dim() << "\nbasis";
  for (const auto& l : a.labels()) out << ' ' << l;
  out << "\nunit";
  for (const auto& u : a.unit()) out << ' ' << plain(f, u);
  out << '\n';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (a.constant(i, j, k) != 0) out << "mul " << i << ' ' << j << ' ' << k << ' ' << plain(f, a.constant(i, j, k)) << '\n';
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// monoids

MonoidPair read_monoids(const std::string& text) {
  auto lines = lex(text);
  MonoidPair m;
  bool have_set = false, have_unit = false, have1 = false, have2 = false;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& kw = line.keyword();
    if (kw == "set") {
      expect_arity(line, 1);
      m.size = to_size(line, 1);
      if (m.size == 0 || m.size > 16) fail(line, 1, "set size must be between 1 and 16");
      have_set = true;
    } else if (!have_set) {
      fail(line, 0, "'set' must come first");
    } else if (kw == "unit") {
      expect_arity(line, 1);
      m.unit = bounded(line, 1, m.size, "unit");
      have_unit = true;
    } else if (kw == "op1" || kw == "op2") {
      expect_arity(line, 0);
      auto& table = kw == "op1" ? m.op1 : m.op2;
      (kw == "op1" ? have1 : have2) = true;
      table.clear();
      for (std::size_t r = 0; r < m.size; ++r) {
        if (li + 1 >= lines.size()) fail(line, 0, "table '" + kw + "' needs " + std::to_string(m.size) + " rows");
        const Line& row = lines[++li];
        if (row.tokens.size() != m.size) {
          fail(row, 0, "table row needs " + std::to_string(m.size) + " entries, got " + std::to_string(row.tokens.size()));
        }
        for (std::size_t c = 0; c < m.size; ++c) table.push_back(bounded(row, c, m.size, "element"));
      }
    } else {
      fail(line, 0, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_set) missing("set");
  if (!have_unit) missing("unit");
  if (!have1) missing("op1");
  if (!have2) missing("op2");
  return m;
}

std::string write_monoids(const MonoidPair& m) {
  std::ostringstream out;
  out << "set " << m.size << "\nunit " << m.unit << '\n';
  for (int k = 1; k <= 2; ++k) {
    const auto& table = k == 1 ? m.op1 : m.op2;
    out << "op" << k << '\n';
    for (std::size_t r = 0; r < m.size; ++r) {
      for (std::size_t c = 0; c < m.size; ++c) out << (c ? " " : "") << table[r * m.size + c];
      out << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// simplicial sets

SimplicialSet read_simplicial_set(const std::string& text) {
  auto lines = lex(text);
  std::optional<std::size_t> top;
  std::vector<std::vector<std::string>> names;
  std::vector<std::map<std::string, std::size_t>> index;
  SimplicialSet::Table faces, degens;
  std::vector<std::vector<std::vector<bool>>> face_set, degen_set;
  auto elem = [&](const Line& line, std::size_t token, std::size_t n) {
    if (n >= names.size()) fail(line, token, "level " + std::to_string(n) + " has no 'elems' line yet");
    auto it = index[n].find(line.tokens[token].text);
    if (it == index[n].end()) fail(line, token, "unknown element '" + line.tokens[token].text + "' at level " + std::to_string(n));
    return it->second;
  };
  for (const auto& line : lines) {
    const std::string& kw = line.keyword();
    if (kw == "levels") {
      expect_arity(line, 1);
      if (top) fail(line, 0, "duplicate 'levels' line");
      top = to_size(line, 1);
      if (*top > 12) fail(line, 1, "at most 12 levels are supported");
    } else if (!top) {
      fail(line, 0, "'levels' must come first");
    } else if (kw == "elems") {
      if (names.size() > *top) fail(line, 0, "more 'elems' lines than levels");
      const std::size_t n = names.size();
      std::vector<std::string> level;
      std::map<std::string, std::size_t> idx;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (!idx.emplace(line.tokens[i].text, level.size()).second) fail(line, i, "duplicate element name");
        level.push_back(line.tokens[i].text);
      }
      if (level.empty()) fail(line, 0, "level " + std::to_string(n) + " is empty");
      const std::size_t nf = n == 0 ? 0 : n + 1;
      const std::size_t nd = n == *top ? 0 : n + 1;
      faces.emplace_back(nf, std::vector<std::size_t>(level.size(), 0));
      face_set.emplace_back(nf, std::vector<bool>(level.size(), false));
      degens.emplace_back(nd, std::vector<std::size_t>(level.size(), 0));
      degen_set.emplace_back(nd, std::vector<bool>(level.size(), false));
      names.push_back(std::move(level));
      index.push_back(std::move(idx));
    } else if (kw == "face" || kw == "degen") {
      expect_arity(line, 4);
      const bool is_face = kw == "face";
      std::size_t n = to_size(line, 1);
      if (n > *top || (is_face && n == 0) || (!is_face && n == *top)) fail(line, 1, "level out of range for '" + kw + "'");
      std::size_t i = bounded(line, 2, n + 1, "index");
      std::size_t x = elem(line, 3, n);
      std::size_t y = elem(line, 4, is_face ? n - 1 : n + 1);
      auto& set = is_face ? face_set : degen_set;
      if (set[n][i][x]) fail(line, 0, "duplicate '" + kw + "' entry");
      set[n][i][x] = true;
      (is_face ? faces : degens)[n][i][x] = y;
    } else {
      fail(line, 0, "unknown keyword '" + kw + "'");
    }
  }
  if (!top) missing("levels");
  if (names.size() != *top + 1) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                     "expected " + std::to_string(*top + 1) + " 'elems' lines, got " + std::to_string(names.size()));
  }
  for (std::size_t n = 0; n <= *top; ++n) {
    for (int kind = 0; kind < 2; ++kind) {
      const auto& set = kind == 0 ? face_set[n] : degen_set[n];
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t x = 0; x < set[i].size(); ++x) {
          if (!set[i][x]) {
            throw ParseError(lines.back().number, 1,
                             std::string("missing ") + (kind == 0 ? "face" : "degen") + " " + std::to_string(n) + " " +
                                 std::to_string(i) + " " + names[n][x]);
          }
        }
      }
    }
  }
  return SimplicialSet(std::move(names), std::move(faces), std::move(degens));
}

std::string write_simplicial_set(const SimplicialSet& x) {
  std::ostringstream out;
  out << "levels " << x.level() << '\n';
  for (int n = 0; n <= x.level(); ++n) {
    out << "elems";
    for (std::size_t e = 0; e < x.size(n); ++e) out << ' ' << x.name(n, e);
    out << '\n';
  }
  for (int n = 1; n <= x.level(); ++n) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      for (std::size_t e = 0; e < x.size(n); ++e) {
        out << "face " << n << ' ' << i << ' ' << x.name(n, e) << ' ' << x.name(n - 1, x.face(n, i, e)) << '\n';
      }
    }
  }
  for (int n = 0; n < x.level(); ++n) {
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
      for (std::size_t e = 0; e < x.size(n); ++e) {
        out << "degen " << n << ' ' << i << ' ' << x.name(n, e) << ' ' << x.name(n + 1, x.degeneracy(n, i, e)) << '\n';
      }
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// categories

FinCategory read_category(const std::string& text) {
  std::vector<std::string> objects;
  std::map<std::string, std::size_t> obj_index;
  std::vector<FinCategory::Morphism> morphisms;
  std::map<std::string, std::size_t> mor_index;
  std::map<std::size_t, std::size_t> identity;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> compose;
  bool have_objects = false;
  auto object = [&](const Line& line, std::size_t token) {
    auto it = obj_index.find(line.tokens[token].text);
    if (it == obj_index.end()) fail(line, token, "unknown object '" + line.tokens[token].text + "'");
    return it->second;
  };
  auto morphism = [&](const Line& line, std::size_t token) {
    auto it = mor_index.find(line.tokens[token].text);
    if (it == mor_index.end()) fail(line, token, "unknown morphism '" + line.tokens[token].text + "'");
    return it->second;
  };
  for (const auto& line : lex(text)) {
    const std::string& kw = line.keyword();
    if (kw == "objects") {
      if (have_objects) fail(line, 0, "duplicate 'objects' line");
      have_objects = true;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        if (!obj_index.emplace(line.tokens[i].text, objects.size()).second) fail(line, i, "duplicate object");
        objects.push_back(line.tokens[i].text);
      }
      if (objects.empty()) fail(line, 0, "a category needs at least one object");
    } else if (!have_objects) {
      fail(line, 0, "'objects' must come first");
    } else if (kw == "morphisms" || kw == "morphism") {
      expect_arity(line, 3);
      if (!mor_index.emplace(line.tokens[1].text, morphisms.size()).second) fail(line, 1, "duplicate morphism");
      morphisms.push_back({line.tokens[1].text, object(line, 2), object(line, 3)});
    } else if (kw == "id") {
      expect_arity(line, 2);
      std::size_t o = object(line, 1);
      std::size_t m = morphism(line, 2);
      if (morphisms[m].source != o || morphisms[m].target != o) fail(line, 2, "identity must be an endomorphism");
      if (!identity.emplace(o, m).second) fail(line, 1, "duplicate identity");
    } else if (kw == "compose") {
      expect_arity(line, 3);
      std::size_t g = morphism(line, 1);
      std::size_t f = morphism(line, 2);
      std::size_t gf = morphism(line, 3);
      if (morphisms[f].target != morphisms[g].source) fail(line, 1, "morphisms are not composable");
      if (!compose.emplace(std::pair{g, f}, gf).second) fail(line, 1, "duplicate composite");
    } else {
      fail(line, 0, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_objects) missing("objects");
  std::vector<std::size_t> ids(objects.size());
  for (std::size_t o = 0; o < objects.size(); ++o) {
    auto it = identity.find(o);
    if (it == identity.end()) throw ParseError(1, 1, "object '" + objects[o] + "' has no 'id' line");
    ids[o] = it->second;
  }
  for (std::size_t m = 0; m < morphisms.size(); ++m) {
    compose.emplace(std::pair{m, ids[morphisms[m].source]}, m);
    compose.emplace(std::pair{ids[morphisms[m].target], m}, m);
  }
  return FinCategory(std::move(objects), std::move(morphisms), std::move(ids), std::move(compose));
}

std::string write_category(const FinCategory& c) {
  std::ostringstream out;
  out << "objects";
  for (std::size_t o = 0; o < c.object_count(); ++o) out << ' ' << c.object(o);
  out << '\n';
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    const auto& mor = c.morphism(m);
    out << "morphisms " << mor.name << ' ' << c.object(mor.source) << ' ' << c.object(mor.target) << '\n';
  }
  std::vector<bool> is_id(c.morphism_count(), false);
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    out << "id " << c.object(o) << ' ' << c.morphism(c.identity(o)).name << '\n';
    is_id[c.identity(o)] = true;
  }
  for (std::size_t g = 0; g < c.morphism_count(); ++g) {
    for (std::size_t f = 0; f < c.morphism_count(); ++f) {
      if (is_id[g] || is_id[f] || c.morphism(f).target != c.morphism(g).source) continue;
      out << "compose " << c.morphism(g).name << ' ' << c.morphism(f).name << ' ' << c.morphism(c.compose(g, f)).name << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// cobordisms

Cobordism1 read_cobordism(const std::string& text) {
  std::optional<SignedPoints> source, target;
  std::size_t circles = 0;
  bool have_circles = false;
  std::vector<std::pair<const Line*, std::size_t>> arc_lines;
  auto lines = lex(text);
  for (const auto& line : lines) {
    const std::string& kw = line.keyword();
    if (kw == "source" || kw == "target") {
      auto& side = kw == "source" ? source : target;
      if (side) fail(line, 0, "duplicate '" + kw + "' line");
      if (line.tokens.size() > 2) fail(line, 2, "signs must be one word, e.g. '++-'");
      try {
        side = SignedPoints::parse(line.tokens.size() == 2 ? line.tokens[1].text : "");
      } catch (const Error& e) {
        fail(line, 1, e.what());
      }
    } else if (kw == "arc") {
      expect_arity(line, 2);
      arc_lines.push_back({&line, 0});
    } else if (kw == "circles") {
      expect_arity(line, 1);
      if (have_circles) fail(line, 0, "duplicate 'circles' line");
      have_circles = true;
      circles = to_size(line, 1);
    } else {
      fail(line, 0, "unknown keyword '" + kw + "'");
    }
  }
  if (!source) missing("source");
  if (!target) missing("target");
  const std::size_t a = source->size();
  const std::size_t total = a + target->size();
  std::vector<std::size_t> partner(total, SIZE_MAX);
  auto point = [&](const Line& line, std::size_t token) {
    const std::string& t = line.tokens[token].text;
    if (t.size() < 2 || (t[0] != 's' && t[0] != 't') || t.size() > 8 ||
        t.find_first_not_of("0123456789", 1) != std::string::npos) {
      fail(line, token, "expected s<i> or t<j>, got '" + t + "'");
    }
    const bool src = t[0] == 's';
    std::size_t i = std::stoul(t.substr(1));
    if (i >= (src ? a : target->size())) fail(line, token, "point '" + t + "' out of range");
    return src ? i : a + i;
  };
  for (auto [line, unused] : arc_lines) {
    std::size_t p = point(*line, 1);
    std::size_t q = point(*line, 2);
    if (p == q) fail(*line, 2, "arc joins a point to itself");
    if (partner[p] != SIZE_MAX) fail(*line, 1, "point already used by another arc");
    if (partner[q] != SIZE_MAX) fail(*line, 2, "point already used by another arc");
    partner[p] = q;
    partner[q] = p;
  }
  for (std::size_t p = 0; p < total; ++p) {
    if (partner[p] == SIZE_MAX) {
      throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                       "point " + (p < a ? "s" + std::to_string(p) : "t" + std::to_string(p - a)) + " has no arc");
    }
  }
  return Cobordism1(std::move(*source), std::move(*target), std::move(partner), circles);
}

std::string write_cobordism(const Cobordism1& x) {
  const std::size_t a = x.source().size();
  auto name = [&](std::size_t p) { return p < a ? "s" + std::to_string(p) : "t" + std::to_string(p - a); };
  std::ostringstream out;
  out << "source";
  if (a) out << ' ' << x.source().to_string();
  out << "\ntarget";
  if (x.target().size()) out << ' ' << x.target().to_string();
  out << '\n';
  for (std::size_t p = 0; p < x.matching().size(); ++p) {
    if (x.partner(p) > p) out << "arc " << name(p) << ' ' << name(x.partner(p)) << '\n';
  }
  out << "circles " << x.circles() << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// duality data

DualityDatum read_duality(const std::string& text) {
  std::optional<Field> field;
  std::optional<std::pair<std::size_t, std::size_t>> dims;
  std::optional<ExactMatrix> u, e;
  for (const auto& line : lex(text)) {
    const std::string& kw = line.keyword();
    if (kw == "field") {
      if (field) fail(line, 0, "duplicate 'field' line");
      field = read_field(line);
    } else if (kw == "dims") {
      expect_arity(line, 2);
      dims = {to_size(line, 1), to_size(line, 2)};
      if (dims->first > 16 || dims->second > 16) fail(line, 1, "dimensions above 16 are not supported");
    } else if (!field || !dims) {
      fail(line, 0, "'field' and 'dims' must come before '" + kw + "'");
    } else if (kw == "u" || kw == "epsilon") {
      const std::size_t len = dims->first * dims->second;
      expect_arity(line, len);
      ExactMatrix m = kw == "u" ? ExactMatrix(*field, len, 1) : ExactMatrix(*field, 1, len);
      for (std::size_t i = 0; i < len; ++i) {
        Scalar v = to_scalar(*field, line, i + 1);
        if (kw == "u") {
          m.set(i, 0, v);
        } else {
          m.set(0, i, v);
        }
      }
      (kw == "u" ? u : e) = std::move(m);
    } else {
      fail(line, 0, "unknown keyword '" + kw + "'");
    }
  }
  if (!field) missing("field");
  if (!dims) missing("dims");
  if (!u) missing("u");
  if (!e) missing("epsilon");
  return DualityDatum(dims->first, dims->second, std::move(*u), std::move(*e));
}

std::string write_duality(const DualityDatum& d) {
  const Field& f = d.field();
  std::ostringstream out;
  out << field_line(f) << "dims " << d.n << ' ' << d.n_dual << "\nu";
  for (std::size_t i = 0; i < d.u.rows(); ++i) out << ' ' << plain(f, d.u.at(i, 0));
  out << "\nepsilon";
  for (std::size_t i = 0; i < d.epsilon.cols(); ++i) out << ' ' << plain(f, d.epsilon.at(0, i));
  out << '\n';
  return out.str();
}

}  // namespace facthom::formats
