#include "senti/metrics.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "senti/csv.hpp"
#include "senti/errors.hpp"

namespace senti {

namespace {

int polarity_of(CategorySet cats) {
  return (cats.contains(Category::positive) ? 1 : 0) - (cats.contains(Category::negative) ? 1 : 0);
}

bool has_polarity(CategorySet cats) {
  return cats.contains(Category::positive) || cats.contains(Category::negative);
}

}  // namespace

std::int64_t EmotionCounts::total() const {
  std::int64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

CountPolicy parse_count_policy(std::string_view name) {
  if (name == "polarity_only") return CountPolicy::polarity_only;
  if (name == "all_categories") return CountPolicy::all_categories;
  throw InputError("unknown counting policy '" + std::string(name) +
                   "' (expected polarity_only or all_categories)");
}

std::string_view to_string(CountPolicy policy) {
  return policy == CountPolicy::polarity_only ? "polarity_only" : "all_categories";
}

EmotionCounts emotion_counts(std::span<const Token> tokens, const Lexicon& nrc) {
  EmotionCounts counts;
  for (const auto& tok : tokens) {
    for (auto c : nrc.lookup(tok.word).to_vector()) ++counts[c];
  }
  return counts;
}

std::int64_t sentiment_count(const EmotionCounts& counts, CountPolicy policy) {
  if (policy == CountPolicy::all_categories) return counts.total();
  return counts[Category::positive] + counts[Category::negative];
}

std::int64_t polarity_score(std::span<const Token> tokens, const Lexicon& lexicon) {
  std::int64_t score = 0;
  for (const auto& tok : tokens) score += polarity_of(lexicon.lookup(tok.word));
  return score;
}

std::vector<RecordMetrics> score_corpus(const Corpus& corpus, std::span<const Token> tokens,
                                        const Lexicon& nrc, const Lexicon& bing,
                                        CountPolicy policy) {
  const auto n = corpus.size();
  std::vector<std::vector<Token>> by_record(n);
  for (const auto& tok : tokens) {
    if (tok.record_id < 1 || static_cast<std::size_t>(tok.record_id) > n) {
      throw InputError("token references unknown record id " + std::to_string(tok.record_id));
    }
    by_record[static_cast<std::size_t>(tok.record_id - 1)].push_back(tok);
  }

  std::vector<RecordMetrics> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& toks = by_record[i];
    RecordMetrics m;
    m.record_id = corpus.records[i].id;
    m.nrc_counts = emotion_counts(toks, nrc);
    m.sentiment_count = sentiment_count(m.nrc_counts, policy);
    m.nrc_score = polarity_score(toks, nrc);
    m.bing_score = polarity_score(toks, bing);
    m.token_count = static_cast<std::int64_t>(toks.size());
    for (const auto& tok : toks) {
      if (has_polarity(nrc.lookup(tok.word))) ++m.nrc_polarity_hits;
      if (has_polarity(bing.lookup(tok.word))) ++m.bing_hits;
    }
    out.push_back(m);
  }
  return out;
}

void write_metrics_csv(std::ostream& out, std::span<const RecordMetrics> metrics) {
  out << kMetricsHeader << '\n';
  for (const auto& m : metrics) {
    out << m.record_id;
    for (auto c : kAllCategories) out << ',' << m.nrc_counts[c];
    out << ',' << m.sentiment_count << ',' << m.nrc_score << ',' << m.bing_score << '\n';
  }
}

std::vector<RecordMetrics> read_metrics_csv(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  std::string joined;
  if (header) {
    for (std::size_t i = 0; i < header->size(); ++i) joined += (i ? "," : "") + (*header)[i];
  }
  if (joined != kMetricsHeader) throw InputError("metrics CSV has an unexpected header");

  std::vector<RecordMetrics> out;
  while (auto row = reader.next()) {
    if (row->size() != kCategoryCount + 4) {
      throw InputError("metrics CSV line " + std::to_string(reader.line()) +
                       ": wrong field count");
    }
    try {
      RecordMetrics m;
      m.record_id = std::stoll((*row)[0]);
      for (std::size_t i = 0; i < kCategoryCount; ++i) {
        m.nrc_counts[kAllCategories[i]] = std::stoll((*row)[i + 1]);
      }
      m.sentiment_count = std::stoll((*row)[kCategoryCount + 1]);
      m.nrc_score = std::stoll((*row)[kCategoryCount + 2]);
      m.bing_score = std::stoll((*row)[kCategoryCount + 3]);
      out.push_back(m);
    } catch (const std::logic_error&) {
      throw InputError("metrics CSV line " + std::to_string(reader.line()) + ": bad number");
    }
  }
  return out;
}

}  // namespace senti
