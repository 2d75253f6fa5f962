#include <doctest.h>

#ifdef QCA_HAVE_CLI

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "qca/serialize.hpp"

using namespace qca;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run qca_run(std::vector<std::string> args) {
  args.insert(args.begin(), "qca");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(QCA_DATA_DIR) + "/" + name; }

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name)
      : path(std::filesystem::temp_directory_path() / ("qca-cli-" + name)) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name, const std::string& text = {}) const {
    const auto p = path / name;
    if (!text.empty())
      std::ofstream(p) << text;
    return p.string();
  }
};

std::vector<std::string> lines_starting(const std::string& text, const std::string& prefix) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0)
      out.push_back(line);
  return out;
}

} // namespace

TEST_CASE("cli compat") {
  const Run r = qca_run({"compat", "check", "-i", data("sl3_pair.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("D = diag(2, 2, 2, 2) on columns {3, 4, 5, 6}") != std::string::npos);

  TempDir tmp("compat");
  Json zero = read_json_file(data("sl3_pair.json"));
  zero["lambda"] = to_json(IntMatrix(8, 8));
  const Run z = qca_run({"compat", "check", "-i", tmp.file("zero.json", dump_json(zero))});
  CHECK(z.code == cli::math);
  CHECK(z.err.find("error:") != std::string::npos);

  const Run bad = qca_run({"compat", "check", "-i", tmp.file("bad.json", "{\"m\": 2,,}")});
  CHECK(bad.code == cli::io_or_parse);
  CHECK(bad.err.find(":1:") != std::string::npos);

  CHECK(qca_run({"compat", "check", "-i", tmp.file("none.json")}).code == cli::io_or_parse);

  Json no_lambda = read_json_file(data("sl3_pair.json"));
  no_lambda.erase("lambda");
  const std::string out = tmp.file("solved.json");
  const Run s = qca_run({"compat", "solve", "-i", tmp.file("nl.json", dump_json(no_lambda)), "-o", out});
  CHECK(s.code == cli::ok);
  CHECK(s.out.find("Lambda =") != std::string::npos);
  // without "d" the principal part's minimal symmetrizer is used
  CHECK(pair_from_json(read_json_file(out)).d == IntVector{1, 1, 1, 1});
  no_lambda["d"] = Json::array({2, 2, 2, 2});
  const Run s2 = qca_run({"compat", "solve", "-i", tmp.file("nl2.json", dump_json(no_lambda)), "-o", out});
  CHECK(s2.code == cli::ok);
  CHECK(pair_from_json(read_json_file(out)).d == IntVector{2, 2, 2, 2});
}

TEST_CASE("cli mutate prints the G2 sequence") {
  TempDir tmp("mutate");
  const std::string out = tmp.file("seed.json");
  const Run r = qca_run({"mutate", "-i", data("rank2_g2.json"), "-d", "1,2,1,2,1,2,1", "--symbol",
                         "Y", "-o", out});
  REQUIRE(r.code == cli::ok);
  const auto steps = lines_starting(r.out, "step ");
  REQUIRE(steps.size() == 7);
  const auto goldens = test::rank2_goldens()[2];
  const SkewFormPtr form = make_form(IntMatrix{{0, 1}, {-1, 0}});
  const auto ys = test::rank2_sequence(1, 3, 9);
  for (std::size_t p = 0; p < 7; ++p) {
    const std::string printed = steps[p].substr(steps[p].find(": ") + 2);
    CHECK(printed == ys[p + 2].render("Y"));
    if (p < goldens.expansions.size())
      CHECK(test::parse_expansion(form, printed) == test::parse_expansion(form, goldens.expansions[p]));
  }
  CHECK(steps[6].find("Y^(1,0)") != std::string::npos);

  const QuantumSeed s = seed_from_json(read_json_file(out));
  CHECK(s.history.size() == 7);

  CHECK(qca_run({"mutate", "-i", data("rank2_g2.json"), "-d", "3"}).code == cli::math);
  const Run none = qca_run({"mutate", "-i", data("rank2_g2.json"), "-o", tmp.file("same.json")});
  CHECK(none.code == cli::ok);
  CHECK(seed_from_json(read_json_file(tmp.file("same.json"))) ==
        initial_seed(rank2_pair(1, 3)));
}

TEST_CASE("cli explore") {
  TempDir tmp("explore");
  const Run r = qca_run({"explore", "-i", data("rank2_a2.json")});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find("graph exchange {") != std::string::npos);
  CHECK(r.out.find("seeds: 5, edges: 5, truncated: no") != std::string::npos);

  const std::string dot = tmp.file("g.dot"), js = tmp.file("g.json");
  const Run f = qca_run({"explore", "-i", data("rank2_g2.json"), "--dot", dot, "-o", js,
                         "--threads", "2"});
  CHECK(f.code == cli::ok);
  CHECK(f.out.find("seeds: 8, edges: 8") != std::string::npos);
  CHECK(std::filesystem::exists(dot));
  CHECK(read_json_file(js)["vertices"].size() == 8);

  const Run t = qca_run({"explore", "-i", data("rank2_a2.json"), "--max-seeds", "2", "--dot", dot});
  CHECK(t.out.find("truncated: yes") != std::string::npos);
}

TEST_CASE("cli cartan and workspace") {
  TempDir tmp("cartan");
  const std::string ws = (tmp.path / "ws").string();
  const Run r = qca_run({"cartan", "-i", data("sl3_word.json"), "--workspace", ws, "--seed-name", "sl3"});
  REQUIRE(r.code == cli::ok);
  CHECK(r.out.find("word condition: strong") != std::string::npos);
  CHECK(r.out.find("ex = {3, 4, 5, 6}") != std::string::npos);
  const QuantumSeed s = seed_from_json(Workspace(ws).load("sl3"));
  CHECK(s.pair == test::sl3_pair());

  // mutate the stored seed and store it again
  const Run m = qca_run({"mutate", "-i", Workspace(ws).path_of("sl3").string(), "-d", "3,4",
                         "--workspace", ws, "--seed-name", "sl3-mu"});
  CHECK(m.code == cli::ok);
  const std::string saved = dump_json(Workspace(ws).load("sl3-mu"));
  CHECK(dump_json(to_json(seed_from_json(Json::parse(saved)))) == saved);

  CHECK(qca_run({"center", "-i", Workspace(ws).path_of("sl3").string()}).out.find("center rank = 2") !=
        std::string::npos);

  const Run neither = qca_run({"cartan", "-i", tmp.file("n.json", R"({"cartan": [[2,-1],[-1,2]], "word": [2,2,-2,1]})")});
  CHECK(neither.code == cli::math);
  const Run notcartan = qca_run({"cartan", "-i", tmp.file("c.json", R"({"cartan": [[2,1],[1,2]], "word": [1]})")});
  CHECK(notcartan.code == cli::math);
}

TEST_CASE("cli verify and usage errors") {
  const Run v = qca_run({"verify", "--suite", "cartan-identities", "--cases", "10"});
  CHECK(v.code == cli::ok);
  CHECK(v.out.find("cartan-identities: passed 10, failed 0") != std::string::npos);
  CHECK(qca_run({"verify", "--suite", "nonsense"}).code == cli::io_or_parse);
  CHECK(qca_run({}).code == cli::io_or_parse);
  CHECK(qca_run({"frobnicate"}).code == cli::io_or_parse);
  CHECK(qca_run({"mutate"}).code == cli::io_or_parse);
  CHECK(qca_run({"--help"}).code == cli::ok);
}

#endif
