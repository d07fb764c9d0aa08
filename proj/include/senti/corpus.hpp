#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace senti {

using RecordId = std::int64_t;

struct TextRecord {
  RecordId id = 0;  // 1-based corpus position
  std::string text;
  std::optional<std::string> timestamp;  // carried, never sorted on
};

// Records in temporal (file row) order.
struct Corpus {
  std::vector<TextRecord> records;
  std::string source_path;

  std::size_t size() const { return records.size(); }
};

enum class CorpusFormat { jsonl, csv };

CorpusFormat parse_corpus_format(std::string_view name);
std::string_view to_string(CorpusFormat format);

// Throws InputError for unreadable files, malformed rows (with the row
// number), invalid UTF-8, and empty corpora.
Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format);

// Inverse of load_corpus for the same format.
std::string serialize_corpus(const Corpus& corpus, CorpusFormat format);

struct SequenceSlice {
  std::size_t index = 0;  // 1-based
  RecordId start_id = 0;  // inclusive
  RecordId end_id = 0;    // inclusive
  std::string label;

  std::size_t size() const { return static_cast<std::size_t>(end_id - start_id + 1); }
  bool contains(RecordId id) const { return id >= start_id && id <= end_id; }
};

// k contiguous slices over ids 1..n. When n % k == r the first r slices are
// one record longer. Labels default to before/during/after for k == 3 and
// seq1..seqk otherwise.
std::vector<SequenceSlice> split_sequences(std::size_t n, std::size_t k,
                                           std::span<const std::string> labels = {});

inline std::vector<SequenceSlice> split_sequences(const Corpus& corpus, std::size_t k,
                                                  std::span<const std::string> labels = {}) {
  return split_sequences(corpus.size(), k, labels);
}

std::vector<std::string> default_sequence_labels(std::size_t k);

// True when `bytes` is well-formed UTF-8.
bool is_valid_utf8(std::string_view bytes);

}  // namespace senti
