#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "senti/corpus.hpp"
#include "senti/lexicon.hpp"
#include "senti/textprep.hpp"

namespace senti {

class EmotionCounts {
 public:
  std::int64_t& operator[](Category c) { return counts_[static_cast<std::size_t>(c)]; }
  std::int64_t operator[](Category c) const { return counts_[static_cast<std::size_t>(c)]; }
  std::int64_t total() const;

  friend bool operator==(const EmotionCounts&, const EmotionCounts&) = default;

 private:
  std::array<std::int64_t, kCategoryCount> counts_{};
};

enum class CountPolicy { polarity_only, all_categories };

CountPolicy parse_count_policy(std::string_view name);
std::string_view to_string(CountPolicy policy);

struct RecordMetrics {
  RecordId record_id = 0;
  EmotionCounts nrc_counts;
  std::int64_t sentiment_count = 0;
  std::int64_t nrc_score = 0;
  std::int64_t bing_score = 0;
  // Not part of metrics.csv; used by --skip-unmatched and score bounds.
  std::int64_t token_count = 0;
  std::int64_t nrc_polarity_hits = 0;
  std::int64_t bing_hits = 0;

  friend bool operator==(const RecordMetrics&, const RecordMetrics&) = default;
};

// Every category of every matched token increments by one.
EmotionCounts emotion_counts(std::span<const Token> tokens, const Lexicon& nrc);

std::int64_t sentiment_count(const EmotionCounts& counts,
                             CountPolicy policy = CountPolicy::polarity_only);

// +1 per positive token, -1 per negative token; a token carrying both
// polarities contributes 0.
std::int64_t polarity_score(std::span<const Token> tokens, const Lexicon& lexicon);

// One entry per corpus record in corpus order, including records without
// tokens. Tokens may arrive in any order.
std::vector<RecordMetrics> score_corpus(const Corpus& corpus, std::span<const Token> tokens,
                                        const Lexicon& nrc, const Lexicon& bing,
                                        CountPolicy policy = CountPolicy::polarity_only);

void write_metrics_csv(std::ostream& out, std::span<const RecordMetrics> metrics);
// Reads only the documented columns; the extra hit counters stay zero.
std::vector<RecordMetrics> read_metrics_csv(std::istream& in);

inline constexpr std::string_view kMetricsHeader =
    "record_id,anger,anticipation,disgust,fear,joy,sadness,surprise,trust,negative,positive,"
    "sentiment_count,nrc_score,bing_score";

}  // namespace senti
