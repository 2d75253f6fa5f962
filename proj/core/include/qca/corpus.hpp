#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qca/cartan.hpp"

namespace qca {

struct CartanType {
  std::string name;
  CartanData cartan;
};

/// A2, B2, G2 and the affine A1^(1).
std::vector<CartanType> standard_cartan_types();

struct CorpusWord {
  std::string type;
  CartanData cartan;
  DoubleWord word;
};

/// Reproducible random double words cycling through the standard types. Each
/// word starts with a signed permutation of 1..r, so the strong condition
/// holds, followed by random letters up to a length in [min_len, max_len].
std::vector<CorpusWord> word_corpus(std::size_t count, std::uint64_t seed,
                                    std::size_t min_len = 4, std::size_t max_len = 8);

struct MutationCase {
  CorpusWord word;
  /// Directions in ex, never the same twice in a row.
  std::vector<std::size_t> directions;
};

/// Words with nonempty ex together with random mutation sequences of length
/// 1..max_steps.
std::vector<MutationCase> mutation_corpus(std::size_t count, std::uint64_t seed,
                                          std::size_t max_steps = 6);

} // namespace qca
