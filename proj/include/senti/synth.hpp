#pragma once

#include <cstdint>

#include "senti/corpus.hpp"

namespace senti {

// Demo corpus generator. Records are split into three equal phases; each
// word slot draws independently:
//
//   phase    P(sentiment word)  P(positive | sentiment)
//   before   0.12               0.55
//   during   0.22               0.30
//   after    0.10               0.45
//
// Non-sentiment slots are stop words with probability 0.35, otherwise
// neutral topic words. Each record has 4..18 word slots. Surface noise:
// 12% leading @-mention, 8% trailing URL, 10% one word turned into a
// hashtag, 6% a contraction ("isn't"/"don't"), 4% a numeral phrase,
// 3% records with no lexical content at all. Capitalised first word and
// random end punctuation throughout.
struct SynthOptions {
  std::size_t records = 1000;
  std::uint64_t seed = 2021;
};

Corpus synthesize_corpus(const SynthOptions& options);

}  // namespace senti
