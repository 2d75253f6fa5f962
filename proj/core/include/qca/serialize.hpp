#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qca/cartan.hpp"
#include "qca/pairs.hpp"
#include "qca/seeds.hpp"

namespace qca {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError with "source:line:col".
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);
/// Two-space indented dump with a trailing newline; keys are sorted, so equal
/// values give identical bytes.
std::string dump_json(const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

Json to_json(const QLaurent& x);
QLaurent qlaurent_from_json(const Json& j);

Json to_json(const IntMatrix& a);
IntMatrix matrix_from_json(const Json& j);

/// {"m", "lambda", "terms": [{"e": [...], "coeff": [[h, "c"], ...]}]}
Json to_json(const TorusElement& x);
TorusElement torus_from_json(const Json& j);
/// Only the "terms" array, for elements whose form is known from context.
Json terms_to_json(const TorusElement& x);
TorusElement terms_from_json(const SkewFormPtr& form, const Json& j);

/// {"m", "n", "ex", "b", "lambda", "d", "sigma"?}
Json to_json(const CompatiblePair& p, const std::optional<GradingMatrix>& sigma = std::nullopt);
/// Exchange matrix from "m", "ex", "b" alone (no Lambda needed).
ExchangeMatrix exchange_from_json(const Json& j);
CompatiblePair pair_from_json(const Json& j);
std::optional<GradingMatrix> sigma_from_json(const Json& j);

/// {"pair", "initial": {"lambda", "sigma"?}, "frame": [terms...], "history"}
Json to_json(const QuantumSeed& s);
/// Also accepts a bare pair document, or {"pair"} without a frame, and returns
/// the initial seed.
QuantumSeed seed_from_json(const Json& j);

/// {"cartan", "d"?, "word"}
struct CartanInput {
  CartanData cartan;
  DoubleWord word;
};
CartanInput cartan_from_json(const Json& j);
Json to_json(const CartanData& cd, const DoubleWord& dw);

Json to_json(const ExchangeGraph& g);
/// Undirected DOT rendering; vertex labels list the exchangeable variables.
std::string to_dot(const ExchangeGraph& g, const std::string& symbol = "X");

/// Named JSON documents stored as <dir>/<name>.json.
class Workspace {
public:
  explicit Workspace(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_of(const std::string& name) const;
  bool contains(const std::string& name) const;
  void save(const std::string& name, const Json& doc) const;
  Json load(const std::string& name) const;

private:
  std::filesystem::path dir_;
};

} // namespace qca
