#include "senti/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>
#include <unicode/utf8.h>

#include "senti/csv.hpp"
#include "senti/errors.hpp"

namespace senti {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read corpus file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[noreturn]] void row_error(const std::filesystem::path& path, std::size_t row,
                            const std::string& what) {
  throw InputError(path.string() + ": row " + std::to_string(row) + ": " + what);
}

void load_jsonl(const std::filesystem::path& path, const std::string& bytes,
                Corpus& corpus) {
  std::istringstream in(bytes);
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!is_valid_utf8(line)) row_error(path, row, "invalid UTF-8");

    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      row_error(path, row, std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) row_error(path, row, "expected a JSON object");
    auto text = obj.find("text");
    if (text == obj.end() || !text->is_string()) {
      row_error(path, row, "missing string field 'text'");
    }
    TextRecord rec;
    rec.id = static_cast<RecordId>(corpus.records.size() + 1);
    rec.text = text->get<std::string>();
    if (auto ts = obj.find("timestamp"); ts != obj.end() && !ts->is_null()) {
      if (!ts->is_string()) row_error(path, row, "'timestamp' must be a string");
      rec.timestamp = ts->get<std::string>();
    }
    corpus.records.push_back(std::move(rec));
  }
}

void load_csv(const std::filesystem::path& path, const std::string& bytes, Corpus& corpus) {
  std::istringstream in(bytes);
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header) return;
  auto text_col = csv::column(*header, "text");
  if (!text_col) throw InputError(path.string() + ": CSV header has no 'text' column");
  auto ts_col = csv::column(*header, "timestamp");

  std::size_t row = 0;
  while (auto fields = reader.next()) {
    ++row;
    // A lone trailing blank line parses as one empty field.
    if (fields->size() == 1 && fields->front().empty() && header->size() > 1) continue;
    if (fields->size() != header->size()) {
      row_error(path, row,
                "expected " + std::to_string(header->size()) + " fields, got " +
                    std::to_string(fields->size()));
    }
    TextRecord rec;
    rec.id = static_cast<RecordId>(corpus.records.size() + 1);
    rec.text = std::move((*fields)[*text_col]);
    if (!is_valid_utf8(rec.text)) row_error(path, row, "invalid UTF-8");
    if (ts_col && !(*fields)[*ts_col].empty()) rec.timestamp = (*fields)[*ts_col];
    corpus.records.push_back(std::move(rec));
  }
}

}  // namespace

CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "jsonl") return CorpusFormat::jsonl;
  if (name == "csv") return CorpusFormat::csv;
  throw InputError("unknown corpus format '" + std::string(name) + "' (expected jsonl or csv)");
}

std::string_view to_string(CorpusFormat format) {
  return format == CorpusFormat::jsonl ? "jsonl" : "csv";
}

bool is_valid_utf8(std::string_view bytes) {
  const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
  const auto length = static_cast<int32_t>(bytes.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  const std::string bytes = read_file(path);
  Corpus corpus;
  corpus.source_path = path.string();
  if (format == CorpusFormat::jsonl) {
    load_jsonl(path, bytes, corpus);
  } else {
    load_csv(path, bytes, corpus);
  }
  if (corpus.records.empty()) throw InputError(path.string() + ": zero records");
  return corpus;
}

std::string serialize_corpus(const Corpus& corpus, CorpusFormat format) {
  std::ostringstream out;
  if (format == CorpusFormat::jsonl) {
    for (const auto& rec : corpus.records) {
      nlohmann::json obj = {{"text", rec.text}};
      if (rec.timestamp) obj["timestamp"] = *rec.timestamp;
      out << obj.dump() << '\n';
    }
  } else {
    csv::write_row(out, {"text", "timestamp"});
    for (const auto& rec : corpus.records) {
      csv::write_row(out, {rec.text, rec.timestamp.value_or("")});
    }
  }
  return out.str();
}

std::vector<std::string> default_sequence_labels(std::size_t k) {
  if (k == 3) return {"before", "during", "after"};
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= k; ++i) labels.push_back("seq" + std::to_string(i));
  return labels;
}

std::vector<SequenceSlice> split_sequences(std::size_t n, std::size_t k,
                                           std::span<const std::string> labels) {
  if (k < 1 || k > n) {
    throw InputError("number of sequences must be in [1, " + std::to_string(n) + "], got " +
                     std::to_string(k));
  }
  if (!labels.empty() && labels.size() != k) {
    throw InputError("expected " + std::to_string(k) + " sequence labels, got " +
                     std::to_string(labels.size()));
  }
  const auto names = labels.empty() ? default_sequence_labels(k)
                                    : std::vector<std::string>(labels.begin(), labels.end());
  const std::size_t base = n / k;
  const std::size_t extra = n % k;

  std::vector<SequenceSlice> slices;
  slices.reserve(k);
  RecordId next = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const auto size = static_cast<RecordId>(base + (i < extra ? 1 : 0));
    slices.push_back({i + 1, next, next + size - 1, names[i]});
    next += size;
  }
  return slices;
}

}  // namespace senti
