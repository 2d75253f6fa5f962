#include "qca/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "qca/error.hpp"

namespace qca {

std::vector<CartanType> standard_cartan_types() {
  return {
      {"A2", validate_cartan(IntMatrix{{2, -1}, {-1, 2}})},
      {"B2", validate_cartan(IntMatrix{{2, -1}, {-2, 2}})},
      {"G2", validate_cartan(IntMatrix{{2, -1}, {-3, 2}})},
      {"A1^(1)", validate_cartan(IntMatrix{{2, -2}, {-2, 2}})},
  };
}

namespace {

// Uniform integer in [lo, hi] from raw engine output, so the corpus does not
// depend on the standard library's distribution implementation.
std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(rng() % span);
}

CorpusWord random_word(std::mt19937_64& rng, const CartanType& t, std::size_t min_len,
                       std::size_t max_len) {
  const std::size_t r = t.cartan.rank();
  std::vector<std::int64_t> letters(r);
  std::iota(letters.begin(), letters.end(), 1);
  for (std::size_t i = r; i > 1; --i)
    std::swap(letters[i - 1], letters[static_cast<std::size_t>(pick(rng, 0, static_cast<std::int64_t>(i) - 1))]);
  for (auto& x : letters)
    if (pick(rng, 0, 1) == 1)
      x = -x;
  const auto len = static_cast<std::size_t>(
      pick(rng, static_cast<std::int64_t>(std::max(min_len, r)), static_cast<std::int64_t>(max_len)));
  while (letters.size() < len) {
    std::int64_t x = pick(rng, 1, static_cast<std::int64_t>(r));
    letters.push_back(pick(rng, 0, 1) == 1 ? -x : x);
  }
  return {t.name, t.cartan, DoubleWord(std::move(letters), r)};
}

} // namespace

std::vector<CorpusWord> word_corpus(std::size_t count, std::uint64_t seed, std::size_t min_len,
                                    std::size_t max_len) {
  if (min_len > max_len)
    throw PreconditionViolation("word_corpus: min_len exceeds max_len");
  const auto types = standard_cartan_types();
  std::mt19937_64 rng(seed);
  std::vector<CorpusWord> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_word(rng, types[i % types.size()], min_len, max_len));
  return out;
}

std::vector<MutationCase> mutation_corpus(std::size_t count, std::uint64_t seed,
                                          std::size_t max_steps) {
  const auto types = standard_cartan_types();
  std::mt19937_64 rng(seed);
  std::vector<MutationCase> out;
  std::size_t i = 0;
  while (out.size() < count) {
    CorpusWord w = random_word(rng, types[i % types.size()], 4, 7);
    const auto& ex = w.word.ex();
    if (ex.empty())
      continue;
    ++i;
    const auto steps = static_cast<std::size_t>(pick(rng, 1, static_cast<std::int64_t>(max_steps)));
    std::vector<std::size_t> dirs;
    while (dirs.size() < steps) {
      std::size_t k = ex[static_cast<std::size_t>(pick(rng, 0, static_cast<std::int64_t>(ex.size()) - 1))];
      if (!dirs.empty() && dirs.back() == k) {
        if (ex.size() == 1)
          break;
        continue;
      }
      dirs.push_back(k);
    }
    out.push_back({std::move(w), std::move(dirs)});
  }
  return out;
}

} // namespace qca
