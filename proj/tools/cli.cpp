#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qca/cartan.hpp"
#include "qca/error.hpp"
#include "qca/seeds.hpp"
#include "qca/serialize.hpp"
#include "qca/suites.hpp"

namespace qca::cli {

namespace {

struct Common {
  std::string input;
  std::string output;
  std::string workspace = "qca-workspace";
  std::string seed_name;
};

Json load_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return parse_json(os.str(), "<stdin>");
  }
  return read_json_file(path);
}

// Writes a JSON result to -o and/or the workspace entry named by --seed-name.
void emit(const Common& c, const Json& doc) {
  if (!c.output.empty())
    write_text_file(c.output, dump_json(doc));
  if (!c.seed_name.empty())
    Workspace(c.workspace).save(c.seed_name, doc);
}

void print_matrix(std::ostream& out, const std::string& name, const IntMatrix& a) {
  out << name << " =\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << "  ";
    for (std::size_t j = 0; j < a.cols(); ++j)
      out << (j ? " " : "") << std::setw(3) << a(i, j);
    out << "\n";
  }
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

void cmd_compat(const std::string& mode, const Common& c, std::ostream& out) {
  const Json doc = load_input(c.input);
  if (mode == "check") {
    CompatiblePair p = pair_from_json(doc);
    out << "compatible: D = diag(" << join(p.d) << ") on columns {" << join(p.ex()) << "}\n";
    emit(c, to_json(p, sigma_from_json(doc)));
    return;
  }
  ExchangeMatrix bt = exchange_from_json(doc);
  IntVector d;
  if (doc.contains("d")) {
    for (const auto& x : doc["d"])
      d.push_back(x.get<std::int64_t>());
  } else {
    d = *is_skew_symmetrizable(bt.principal());
  }
  SkewFormPtr lambda = find_compatible_lambda(bt, d);
  CompatiblePair p = check_compatible(lambda, bt);
  print_matrix(out, "Lambda", lambda->matrix());
  out << "D = diag(" << join(p.d) << ")\n";
  emit(c, to_json(p));
}

void cmd_mutate(const std::vector<std::size_t>& directions, const std::string& symbol,
                bool cross_check, const Common& c, std::ostream& out) {
  QuantumSeed s = seed_from_json(load_input(c.input));
  MutationOptions opt;
  opt.cross_check = cross_check;
  std::size_t step = 0;
  for (auto k : directions) {
    s = mutate(s, k, opt);
    ++step;
    out << "step " << step << " (mu_" << k << "): " << s.x(k).render(symbol) << "\n";
  }
  emit(c, to_json(s));
}

void cmd_explore(std::size_t max_seeds, std::size_t max_depth, std::size_t threads,
                 const std::string& dot_path, const std::string& symbol, const Common& c,
                 std::ostream& out) {
  QuantumSeed s = seed_from_json(load_input(c.input));
  ExploreOptions opt;
  opt.max_seeds = max_seeds;
  opt.max_depth = max_depth;
  opt.threads = threads;
  ExchangeGraph g = explore(s, opt);
  std::size_t undirected = 0;
  for (const auto& e : g.edges)
    if (e.from < e.to)
      ++undirected;
  const std::string dot = to_dot(g, symbol);
  if (!dot_path.empty())
    write_text_file(dot_path, dot);
  else if (c.output.empty())
    out << dot;
  if (!c.output.empty())
    write_text_file(c.output, dump_json(to_json(g)));
  out << "seeds: " << g.vertices.size() << ", edges: " << undirected
      << ", truncated: " << (g.truncated ? "yes" : "no") << "\n";
}

void cmd_cartan(const Common& c, std::ostream& out) {
  CartanInput in = cartan_from_json(load_input(c.input));
  CartanIdentityReport rep = verify_cartan_identities(in.cartan, in.word);
  verify_b_eta_identity(in.cartan, in.word);
  out << "word condition: " << to_string(rep.condition) << "\n";
  out << "ex = {" << join(rep.pair.ex()) << "}\n";
  print_matrix(out, "B", rep.pair.btilde.matrix());
  print_matrix(out, "Lambda", rep.pair.lambda->matrix());
  print_matrix(out, "Sigma", rep.sigma.matrix());
  out << "D = diag(" << join(rep.pair.d) << ")\n";
  emit(c, to_json(initial_seed(rep.pair, rep.sigma)));
}

bool cmd_verify(const std::string& suite, const SuiteOptions& opt, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);
  bool all_ok = true;
  for (const auto& name : names) {
    SuiteReport r = run_suite(name, opt);
    out << name << ": passed " << r.passed << ", failed " << r.failed << "\n";
    for (const auto& f : r.failures)
      out << "  FAIL " << f << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok;
}

void cmd_center(const Common& c, std::ostream& out) {
  const Json doc = load_input(c.input);
  const Json* lam = nullptr;
  if (doc.contains("lambda"))
    lam = &doc["lambda"];
  else if (doc.contains("pair") && doc["pair"].contains("lambda"))
    lam = &doc["pair"]["lambda"];
  if (!lam)
    throw ParseError("center: input holds no \"lambda\"");
  SkewForm form(matrix_from_json(*lam));
  const auto basis = center_kernel(form);
  out << "rank(Lambda) = " << rank(form.matrix()) << ", center rank = " << basis.size() << "\n";
  Json doc_out{{"basis", basis}};
  for (const auto& f : basis)
    out << "  X^(" << join(f) << ")\n";
  if (!c.output.empty())
    write_text_file(c.output, dump_json(doc_out));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in quantum cluster algebras", "qca"};
  app.require_subcommand(1);

  Common common;
  auto add_io = [&](CLI::App* sub, bool input_required) {
    auto* opt = sub->add_option("-i,--input", common.input, "input JSON file ('-' for stdin)");
    if (input_required)
      opt->required();
    sub->add_option("-o,--output", common.output, "output file");
    sub->add_option("--workspace", common.workspace, "workspace directory for --seed-name");
    sub->add_option("--seed-name", common.seed_name, "also store the result in the workspace");
  };

  std::string compat_mode;
  auto* compat = app.add_subcommand("compat", "check a compatible pair or solve for Lambda");
  compat->add_option("mode", compat_mode, "check | solve")
      ->required()
      ->check(CLI::IsMember({"check", "solve"}));
  add_io(compat, true);

  std::vector<std::size_t> directions;
  std::string symbol = "X";
  bool cross_check = false;
  auto* mut = app.add_subcommand("mutate", "apply a sequence of seed mutations");
  add_io(mut, true);
  mut->add_option("-d,--directions", directions, "mutation directions, e.g. 1,2,1")
      ->delimiter(',');
  mut->add_option("--symbol", symbol, "basis symbol for printed variables");
  mut->add_flag("--cross-check", cross_check, "recompute each variable through both signs");

  std::size_t max_seeds = 10000, max_depth = 64, threads = 1;
  std::string dot_path;
  auto* exp = app.add_subcommand("explore", "enumerate the exchange graph");
  add_io(exp, true);
  exp->add_option("--max-seeds", max_seeds, "stop after this many seeds");
  exp->add_option("--max-depth", max_depth, "stop at this mutation distance");
  exp->add_option("--threads", threads, "parallel mutation tasks per level");
  exp->add_option("--dot", dot_path, "write the DOT rendering here");
  exp->add_option("--symbol", symbol, "basis symbol for vertex labels");

  auto* cart = app.add_subcommand("cartan", "build the graded seed of a double word");
  add_io(cart, true);

  std::string suite = "all";
  SuiteOptions suite_opt;
  auto* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("--suite", suite, "suite name or 'all'");
  ver->add_option("--cases", suite_opt.cases, "number of random cases");
  ver->add_option("--rng-seed", suite_opt.seed, "corpus seed");
  ver->add_option("--max-steps", suite_opt.max_steps, "longest mutation sequence");

  auto* cen = app.add_subcommand("center", "Z-basis of the center lattice ker Lambda");
  add_io(cen, true);

  std::vector<char*> argv;
  std::vector<std::string> storage = args;
  for (auto& a : storage)
    argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return io_or_parse;
  }

  try {
    if (*compat) {
      cmd_compat(compat_mode, common, out);
    } else if (*mut) {
      cmd_mutate(directions, symbol, cross_check, common, out);
    } else if (*exp) {
      cmd_explore(max_seeds, max_depth, threads, dot_path, symbol, common, out);
    } else if (*cart) {
      cmd_cartan(common, out);
    } else if (*ver) {
      if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) ==
                                suite_names().end()) {
        err << "error: unknown suite '" << suite << "'\n";
        return io_or_parse;
      }
      return cmd_verify(suite, suite_opt, out) ? ok : math;
    } else if (*cen) {
      cmd_center(common, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return io_or_parse;
  } catch (const std::ios_base::failure& e) {
    err << "I/O error: " << e.what() << "\n";
    return io_or_parse;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << "\n";
    return io_or_parse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return math;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
  return ok;
}

} // namespace qca::cli
