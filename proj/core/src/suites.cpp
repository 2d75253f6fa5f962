#include "qca/suites.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "qca/cartan.hpp"
#include "qca/corpus.hpp"
#include "qca/error.hpp"
#include "qca/seeds.hpp"

namespace qca {

namespace {

std::string describe(const CorpusWord& w) {
  std::ostringstream os;
  os << w.type << " (";
  for (std::size_t i = 0; i < w.word.size(); ++i)
    os << (i ? "," : "") << w.word.entries()[i];
  os << ")";
  return os.str();
}

std::string describe(const MutationCase& c) {
  std::ostringstream os;
  os << describe(c.word) << " mu";
  for (auto k : c.directions)
    os << " " << k;
  return os.str();
}

// Runs `check` on every case; a case fails on a false return or an exception.
template <class Case>
SuiteReport run_cases(const std::string& name, const std::vector<Case>& cases,
                      const std::function<bool(const Case&, std::string&)>& check) {
  SuiteReport rep{name, 0, 0, {}};
  for (const auto& c : cases) {
    std::string why;
    bool ok = false;
    try {
      ok = check(c, why);
    } catch (const std::exception& e) {
      why = e.what();
    }
    if (ok) {
      ++rep.passed;
    } else {
      ++rep.failed;
      rep.failures.push_back(describe(c) + ": " + why);
    }
  }
  return rep;
}

bool all_quasi_commute(const QuantumSeed& s, std::string& why) {
  const IntMatrix& lam = s.pair.lambda->matrix();
  for (std::size_t i = 0; i < s.m(); ++i)
    for (std::size_t j = i + 1; j < s.m(); ++j) {
      auto t = quasi_commutation_exponent(s.frame[i], s.frame[j]);
      if (!t || *t != 2 * lam(i, j)) {
        why = "entries " + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
              " do not quasi-commute with lambda = " + std::to_string(lam(i, j));
        return false;
      }
    }
  return true;
}

// Applies the case's directions, calling `step(before, k, after)` after each.
bool walk(const MutationCase& c, const MutationOptions& opt, std::string& why,
          const std::function<bool(const QuantumSeed&, std::size_t, const QuantumSeed&,
                                   std::string&)>& step) {
  QuantumSeed s = seed_from_cartan(c.word.cartan, c.word.word);
  for (auto k : c.directions) {
    QuantumSeed next = mutate(s, k, opt);
    if (!step(s, k, next, why)) {
      why = "after mu_" + std::to_string(k) + ": " + why;
      return false;
    }
    s = std::move(next);
  }
  return true;
}

using MutationCheck = std::function<bool(const MutationCase&, std::string&)>;
using WordCheck = std::function<bool(const CorpusWord&, std::string&)>;

const std::map<std::string, MutationCheck>& mutation_suites() {
  static const std::map<std::string, MutationCheck> suites{
      {"involutivity",
       [](const MutationCase& c, std::string& why) {
         return walk(c, {false, false}, why,
                     [](const QuantumSeed& s, std::size_t k, const QuantumSeed& t,
                        std::string& w) {
                       if (!(mutate(t, k, {false, false}) == s)) {
                         w = "seed mutation is not involutive";
                         return false;
                       }
                       if (!(pair_mutate(pair_mutate(s.pair, k), k) == s.pair)) {
                         w = "pair mutation is not involutive";
                         return false;
                       }
                       return true;
                     });
       }},
      {"epsilon-independence",
       [](const MutationCase& c, std::string& why) {
         return walk(c, {false, true}, why,
                     [](const QuantumSeed& s, std::size_t k, const QuantumSeed&, std::string& w) {
                       if (s.sigma && !(sigma_mutate(*s.sigma, s.pair.btilde, k, Sign::plus) ==
                                        sigma_mutate(*s.sigma, s.pair.btilde, k, Sign::minus))) {
                         w = "Sigma' depends on the sign";
                         return false;
                       }
                       return true;
                     });
       }},
      {"quasi-commutation",
       [](const MutationCase& c, std::string& why) {
         return walk(c, {false, false}, why,
                     [](const QuantumSeed&, std::size_t, const QuantumSeed& t, std::string& w) {
                       return all_quasi_commute(t, w);
                     });
       }},
      {"bar",
       [](const MutationCase& c, std::string& why) {
         return walk(c, {false, false}, why,
                     [](const QuantumSeed&, std::size_t, const QuantumSeed& t, std::string&) {
                       bar_check(t);
                       return true;
                     });
       }},
      {"grading",
       [](const MutationCase& c, std::string& why) {
         return walk(c, {false, false}, why,
                     [](const QuantumSeed&, std::size_t, const QuantumSeed& t, std::string&) {
                       grading_check(t);
                       return true;
                     });
       }},
      {"laurent",
       [](const MutationCase& c, std::string& why) {
         // mutate itself throws LaurentViolation when a division fails.
         return walk(c, {false, false}, why,
                     [](const QuantumSeed&, std::size_t, const QuantumSeed&, std::string&) {
                       return true;
                     });
       }},
  };
  return suites;
}

const std::map<std::string, WordCheck>& word_suites() {
  static const std::map<std::string, WordCheck> suites{
      {"cartan-identities",
       [](const CorpusWord& w, std::string& why) {
         if (check_word_condition(w.cartan, w.word) != WordCondition::strong) {
           why = "corpus word fails the strong condition";
           return false;
         }
         verify_cartan_identities(w.cartan, w.word);
         verify_b_eta_identity(w.cartan, w.word);
         const ExchangeMatrix b = btilde_matrix(w.cartan, w.word);
         for (Sign s : {Sign::plus, Sign::minus})
           if (!(btilde_via_s(w.cartan, w.word, s) == b)) {
             why = "btilde_via_s disagrees with the six-case formula";
             return false;
           }
         return true;
       }},
      {"quasi-commutator",
       [](const CorpusWord& w, std::string& why) {
         const QuantumSeed s = seed_from_cartan(w.cartan, w.word);
         for (auto j : s.ex())
           for (auto k : s.ex()) {
             if (j == k)
               continue;
             const QuasiCommutatorReport r = quasi_commutator_check(s, j, k);
             if (r.quasi_commute != (s.pair.btilde(j, k) == 0)) {
               why = "quasi-commutation reported for b_jk != 0";
               return false;
             }
           }
         return true;
       }},
  };
  return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "involutivity", "epsilon-independence", "quasi-commutation", "bar",
      "grading",      "laurent",              "cartan-identities", "quasi-commutator"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (auto it = mutation_suites().find(name); it != mutation_suites().end())
    return run_cases<MutationCase>(name, mutation_corpus(opt.cases, opt.seed, opt.max_steps),
                                   it->second);
  if (auto it = word_suites().find(name); it != word_suites().end())
    return run_cases<CorpusWord>(name, word_corpus(opt.cases, opt.seed), it->second);
  throw PreconditionViolation("unknown suite \"" + name + "\"");
}

} // namespace qca
