#include "qca/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qca/error.hpp"

namespace qca {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object())
    throw ParseError(std::string("expected an object holding \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer())
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0)
      throw ParseError("invalid integer \"" + j.get<std::string>() + "\"");
    return v;
  }
  throw ParseError("expected an integer or a decimal string");
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array())
    throw ParseError("expected an integer array");
  IntVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer())
      throw ParseError("expected an integer array");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

std::vector<std::size_t> labels_from_json(const Json& j) {
  std::vector<std::size_t> out;
  for (auto x : vector_from_json(j)) {
    if (x < 1)
      throw ParseError("labels are 1-based positive integers");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

} // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line and column (1-based).
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON (" + e.what() + ")");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::ios_base::failure("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_json(os.str(), path.string());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::ios_base::failure("cannot write " + path.string());
  out << text;
  if (!out)
    throw std::ios_base::failure("write failed for " + path.string());
}

Json to_json(const QLaurent& x) {
  Json out = Json::array();
  for (const auto& [h, c] : x.terms())
    out.push_back(Json::array({h, c.get_str()}));
  return out;
}

QLaurent qlaurent_from_json(const Json& j) {
  return guarded("coefficient", [&] {
    if (!j.is_array())
      throw ParseError("coefficient must be an array of [h, c] pairs");
    std::vector<QLaurent::Term> terms;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
        throw ParseError("coefficient term must be [h, c]");
      terms.emplace_back(t[0].get<std::int64_t>(), integer_from_json(t[1]));
    }
    return QLaurent::from_terms(terms);
  });
}

Json to_json(const IntMatrix& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i)
    out.push_back(a.row(i));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array())
      throw ParseError("matrix must be an array of rows");
    std::vector<IntVector> rows;
    for (const auto& r : j)
      rows.push_back(vector_from_json(r));
    try {
      return IntMatrix::from_rows(rows);
    } catch (const PreconditionViolation&) {
      throw ParseError("matrix rows have different lengths");
    }
  });
}

Json terms_to_json(const TorusElement& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms())
    terms.push_back(Json{{"e", e}, {"coeff", to_json(c)}});
  return terms;
}

TorusElement terms_from_json(const SkewFormPtr& form, const Json& j) {
  return guarded("torus element", [&] {
    if (!j.is_array())
      throw ParseError("terms must be an array");
    TorusElement out(form);
    for (const auto& t : j) {
      Exponent e = vector_from_json(field(t, "e"));
      if (e.size() != form->dim())
        throw ParseError("exponent length " + std::to_string(e.size()) + " differs from m = " +
                         std::to_string(form->dim()));
      out += TorusElement::basis(form, std::move(e), qlaurent_from_json(field(t, "coeff")));
    }
    return out;
  });
}

Json to_json(const TorusElement& x) {
  return Json{{"m", x.dim()}, {"lambda", to_json(x.form()->matrix())}, {"terms", terms_to_json(x)}};
}

TorusElement torus_from_json(const Json& j) {
  SkewFormPtr form = guarded("torus element", [&] {
    IntMatrix lam = matrix_from_json(field(j, "lambda"));
    if (j.contains("m") && field(j, "m").get<std::size_t>() != lam.rows())
      throw ParseError("\"m\" disagrees with the size of \"lambda\"");
    return make_form(std::move(lam));
  });
  return terms_from_json(form, field(j, "terms"));
}

Json to_json(const CompatiblePair& p, const std::optional<GradingMatrix>& sigma) {
  Json out{{"m", p.m()},
           {"n", p.btilde.n()},
           {"ex", p.ex()},
           {"b", to_json(p.btilde.matrix())},
           {"lambda", to_json(p.lambda->matrix())},
           {"d", p.d}};
  if (sigma)
    out["sigma"] = to_json(sigma->matrix());
  return out;
}

ExchangeMatrix exchange_from_json(const Json& j) {
  return guarded("exchange matrix", [&] {
    IntMatrix b = matrix_from_json(field(j, "b"));
    std::vector<std::size_t> ex = labels_from_json(field(j, "ex"));
    if (j.contains("m") && field(j, "m").get<std::size_t>() != b.rows())
      throw ParseError("\"m\" disagrees with the number of rows of \"b\"");
    if (j.contains("n") && field(j, "n").get<std::size_t>() != b.cols())
      throw ParseError("\"n\" disagrees with the number of columns of \"b\"");
    return ExchangeMatrix(std::move(ex), std::move(b));
  });
}

CompatiblePair pair_from_json(const Json& j) {
  ExchangeMatrix bt = exchange_from_json(j);
  SkewFormPtr lambda =
      guarded("pair", [&] { return make_form(matrix_from_json(field(j, "lambda"))); });
  CompatiblePair p = check_compatible(lambda, bt);
  if (j.contains("d")) {
    IntVector d = guarded("pair", [&] { return vector_from_json(j["d"]); });
    if (d != p.d)
      throw NotCompatible("pair: stored \"d\" differs from the diagonal of B~^T Lambda");
  }
  return p;
}

std::optional<GradingMatrix> sigma_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sigma") || j["sigma"].is_null())
    return std::nullopt;
  return GradingMatrix(matrix_from_json(j["sigma"]));
}

Json to_json(const QuantumSeed& s) {
  Json initial{{"lambda", to_json(s.initial_form->matrix())}};
  if (s.initial_sigma)
    initial["sigma"] = to_json(s.initial_sigma->matrix());
  Json frame = Json::array();
  for (const auto& x : s.frame)
    frame.push_back(terms_to_json(x));
  return Json{{"pair", to_json(s.pair, s.sigma)},
              {"initial", std::move(initial)},
              {"frame", std::move(frame)},
              {"history", s.history}};
}

QuantumSeed seed_from_json(const Json& j) {
  if (j.is_object() && !j.contains("pair") && j.contains("b"))
    return initial_seed(pair_from_json(j), sigma_from_json(j));
  const Json& pj = field(j, "pair");
  CompatiblePair pair = pair_from_json(pj);
  std::optional<GradingMatrix> sigma = sigma_from_json(pj);
  if (!j.contains("frame")) {
    // A bare pair document: start from the initial seed.
    return initial_seed(pair, sigma);
  }
  const Json& ij = field(j, "initial");
  SkewFormPtr initial = make_form(matrix_from_json(field(ij, "lambda")));
  if (initial->dim() != pair.m())
    throw ParseError("seed: initial Lambda has the wrong size");
  std::optional<GradingMatrix> initial_sigma = sigma_from_json(ij);
  QuantumSeed s{pair, initial, initial_sigma, {}, sigma, {}};
  guarded("seed", [&] {
    const Json& fj = field(j, "frame");
    if (!fj.is_array() || fj.size() != pair.m())
      throw ParseError("seed: \"frame\" must list m elements");
    for (const auto& x : fj)
      s.frame.push_back(terms_from_json(initial, x));
    if (j.contains("history"))
      s.history = labels_from_json(j["history"]);
    return 0;
  });
  if (s.sigma.has_value() != s.initial_sigma.has_value())
    throw ParseError("seed: grading must be given for both the current and initial data");
  return s;
}

CartanInput cartan_from_json(const Json& j) {
  IntMatrix a = matrix_from_json(field(j, "cartan"));
  std::optional<IntVector> d;
  if (j.contains("d") && !j["d"].is_null())
    d = guarded("cartan", [&] { return vector_from_json(j["d"]); });
  CartanData cd = validate_cartan(a, d);
  std::vector<std::int64_t> word = guarded("cartan", [&] { return vector_from_json(field(j, "word")); });
  return {cd, DoubleWord(std::move(word), cd.rank())};
}

Json to_json(const CartanData& cd, const DoubleWord& dw) {
  return Json{{"cartan", to_json(cd.a)}, {"d", cd.d}, {"word", dw.entries()}};
}

Json to_json(const ExchangeGraph& g) {
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const QuantumSeed& s = g.vertices[v];
    Json cluster = Json::array();
    for (auto k : s.ex())
      cluster.push_back(s.x(k).render());
    vertices.push_back(Json{{"id", v},
                            {"depth", g.depth[v]},
                            {"history", s.history},
                            {"cluster", std::move(cluster)}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back(Json{{"from", e.from}, {"direction", e.direction}, {"to", e.to}});
  return Json{{"initial", g.initial},
              {"truncated", g.truncated},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)}};
}

std::string to_dot(const ExchangeGraph& g, const std::string& symbol) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const QuantumSeed& s = g.vertices[v];
    std::string label;
    for (auto k : s.ex()) {
      if (!label.empty())
        label += "\\n";
      label += s.x(k).render(symbol);
    }
    os << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : g.edges) {
    auto key = std::minmax(e.from, e.to);
    if (!seen.insert(key).second)
      continue;
    os << "  v" << key.first << " -- v" << key.second << " [label=\"" << e.direction << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

Workspace::Workspace(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path Workspace::path_of(const std::string& name) const {
  if (name.empty() || name.find('/') != std::string::npos || name.front() == '.')
    throw PreconditionViolation("workspace: invalid name \"" + name + "\"");
  return dir_ / (name + ".json");
}

bool Workspace::contains(const std::string& name) const {
  return std::filesystem::exists(path_of(name));
}

void Workspace::save(const std::string& name, const Json& doc) const {
  write_text_file(path_of(name), dump_json(doc));
}

Json Workspace::load(const std::string& name) const { return read_json_file(path_of(name)); }

} // namespace qca
