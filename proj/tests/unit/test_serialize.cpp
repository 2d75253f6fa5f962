#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "qca/cartan.hpp"
#include "qca/error.hpp"
#include "qca/serialize.hpp"

using namespace qca;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qca-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

} // namespace

TEST_CASE("coefficients and matrices") {
  const QLaurent x = QLaurent::parse("q^(1/2) - 3 + 12345678901234567890*q^(-2)");
  CHECK(qlaurent_from_json(to_json(x)) == x);
  CHECK(qlaurent_from_json(Json::parse(R"([[1, "1"], [0, -3]])")) == QLaurent::parse("q^(1/2) - 3"));
  const IntMatrix a{{1, -2}, {3, 0}};
  CHECK(matrix_from_json(to_json(a)) == a);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2], [3]]")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2.5]]")), ParseError);
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_json("{\n  \"m\": 2,\n  oops\n}", "doc.json");
    FAIL("no exception");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("doc.json:3:", 0) == 0);
  }
  CHECK_THROWS_AS(read_json_file("/nonexistent/qca.json"), std::ios_base::failure);
}

TEST_CASE("pair documents") {
  const CompatiblePair p = test::sl3_pair();
  const Json j = to_json(p);
  CHECK(j["d"] == Json::array({2, 2, 2, 2}));
  CHECK(pair_from_json(j) == p);
  CHECK(dump_json(to_json(pair_from_json(j))) == dump_json(j));
  Json bad = j;
  bad["d"] = Json::array({1, 2, 2, 2});
  CHECK_THROWS_AS(pair_from_json(bad), NotCompatible);
  bad = j;
  bad["m"] = 7;
  CHECK_THROWS_AS(pair_from_json(bad), ParseError);
  bad = j;
  bad.erase("lambda");
  CHECK_THROWS_AS(pair_from_json(bad), ParseError);
  CHECK(pair_from_json(read_json_file(QCA_DATA_DIR "/sl3_pair.json")) == p);
}

TEST_CASE("seed round trip is byte identical") {
  QuantumSeed s = seed_from_cartan(validate_cartan(IntMatrix{{2, -1}, {-3, 2}}),
                                   DoubleWord({1, 2, 1, 2, 1, 2, -1, -2}, 2));
  for (auto k : {s.ex()[0], s.ex().back(), s.ex()[0]})
    s = mutate(s, k);
  const std::string first = dump_json(to_json(s));
  const QuantumSeed back = seed_from_json(Json::parse(first));
  CHECK(back == s);
  CHECK(back.history == s.history);
  CHECK(dump_json(to_json(back)) == first);

  // a bare pair document yields the initial seed
  const QuantumSeed init = seed_from_json(to_json(test::sl3_pair()));
  CHECK(init == initial_seed(test::sl3_pair()));
  CHECK(seed_from_json(Json{{"pair", to_json(test::sl3_pair())}}) == init);
}

TEST_CASE("torus elements and Cartan input") {
  const QuantumSeed s = mutate(initial_seed(rank2_pair(1, 2)), 1);
  const TorusElement& x = s.x(1);
  CHECK(torus_from_json(to_json(x)) == x);
  CHECK(terms_from_json(x.form(), terms_to_json(x)) == x);

  const Json in = read_json_file(QCA_DATA_DIR "/sl3_word.json");
  const CartanInput ci = cartan_from_json(in);
  CHECK(ci.word.entries() == std::vector<std::int64_t>{1, 2, 1, 2, 1, -1, -2, -1});
  CHECK(dump_json(to_json(ci.cartan, ci.word)) == dump_json(in));
  const CartanInput g2 = cartan_from_json(read_json_file(QCA_DATA_DIR "/g2_word.json"));
  CHECK(g2.cartan.d == IntVector{3, 1});
}

TEST_CASE("graph output") {
  const ExchangeGraph g = explore(initial_seed(rank2_pair(1, 1)));
  const Json j = to_json(g);
  CHECK(j["vertices"].size() == 5);
  const std::string dot = to_dot(g, "Y");
  CHECK(dot.rfind("graph exchange {", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos)
    ++edges;
  CHECK(edges == 5);
  CHECK(dot.find("Y^(-1,1) + Y^(-1,0)") != std::string::npos);
}

TEST_CASE("workspace") {
  const auto dir = scratch_dir("ws");
  Workspace ws(dir);
  const Json doc = to_json(test::sl3_pair());
  ws.save("sl3", doc);
  CHECK(ws.contains("sl3"));
  CHECK_FALSE(ws.contains("other"));
  CHECK(ws.load("sl3") == doc);
  ws.save("sl3-again", ws.load("sl3"));
  CHECK(dump_json(ws.load("sl3-again")) == dump_json(doc));
  CHECK_THROWS_AS(ws.path_of("../escape"), PreconditionViolation);
  CHECK_THROWS_AS(ws.load("missing"), std::ios_base::failure);
  std::filesystem::remove_all(dir);
}
