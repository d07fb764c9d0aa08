#pragma once

#include <iosfwd>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "senti/corpus.hpp"

namespace senti {

// One normalized word in tidy (word-per-row) form.
struct Token {
  RecordId record_id = 0;
  std::size_t position = 0;  // 1-based, assigned before any filtering
  std::string word;

  friend bool operator==(const Token&, const Token&) = default;
};

// Lower-cases (simple case folding), removes scheme://... URLs and
// @-mentions, drops apostrophes, turns every other non letter/digit into a
// space and collapses runs of spaces. Idempotent.
std::string normalize(std::string_view text);

// Simple case folding only; used for lexicon and stop-list entries.
std::string fold_case(std::string_view text);

std::vector<Token> tokenize(const TextRecord& record);
std::vector<Token> tokenize(const Corpus& corpus);

enum class StopListSource { bundled, user_file, inline_list };

struct StopList {
  std::unordered_set<std::string> words;
  StopListSource source = StopListSource::inline_list;

  bool contains(const std::string& word) const { return words.count(word) != 0; }
};

// One word per line, '#' comment lines and blank lines ignored. Entries are
// normalized the same way as corpus text.
StopList parse_stoplist(std::string_view text, StopListSource source);
StopList load_stoplist(const std::filesystem::path& path);
// The English list compiled in from data/stopwords_en.txt.
StopList bundled_stoplist();

std::vector<Token> remove_stopwords(std::span<const Token> tokens, const StopList& stoplist,
                                    const std::unordered_set<std::string>& custom = {});

enum class DedupeScope { per_record, global };

// Keeps the first occurrence of each word within the scope.
std::vector<Token> drop_duplicate_tokens(std::span<const Token> tokens, DedupeScope scope);

// tokens.csv: header record_id,position,word
void write_tokens_csv(std::ostream& out, std::span<const Token> tokens);
std::vector<Token> read_tokens_csv(std::istream& in);

}  // namespace senti
