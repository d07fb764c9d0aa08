#include "senti/textprep.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include "senti/csv.hpp"
#include "senti/errors.hpp"

namespace senti {

extern const std::string_view kBundledStopwords;  // generated

namespace {

std::vector<UChar32> decode(std::string_view text) {
  std::vector<UChar32> cps;
  cps.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    cps.push_back(c < 0 ? 0xFFFD : c);
  }
  return cps;
}

void append_utf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), len, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

bool is_word_char(UChar32 c) {
  return u_isalpha(c) || u_isdigit(c) || (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0;
}

bool is_apostrophe(UChar32 c) { return c == U'\'' || c == 0x2019 || c == 0x02BC; }

bool is_space(UChar32 c) { return u_isUWhiteSpace(c); }

bool is_scheme_char(UChar32 c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '+' || c == '-' || c == '.';
}

bool is_handle_char(UChar32 c) { return c == '_' || u_isalpha(c) || u_isdigit(c); }

// Blanks out URLs and @-mentions in place (replaced by a single space).
void strip_urls_and_mentions(std::vector<UChar32>& cps) {
  const std::size_t n = cps.size();
  std::vector<bool> drop(n, false);

  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (cps[i] != ':' || cps[i + 1] != '/' || cps[i + 2] != '/') continue;
    std::size_t start = i;
    while (start > 0 && is_scheme_char(cps[start - 1])) --start;
    // scheme must start with an ASCII letter
    while (start < i && !((cps[start] >= 'a' && cps[start] <= 'z') ||
                          (cps[start] >= 'A' && cps[start] <= 'Z'))) {
      ++start;
    }
    if (start == i) continue;
    std::size_t end = i;
    while (end < n && !is_space(cps[end])) ++end;
    for (std::size_t j = start; j < end; ++j) drop[j] = true;
    i = end;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (drop[i] || cps[i] != '@') continue;
    if (i > 0 && !drop[i - 1] && is_handle_char(cps[i - 1])) continue;
    if (!is_handle_char(cps[i + 1])) continue;
    std::size_t end = i + 1;
    while (end < n && is_handle_char(cps[end])) ++end;
    for (std::size_t j = i; j < end; ++j) drop[j] = true;
    i = end - 1;
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (drop[i]) cps[i] = ' ';
  }
}

}  // namespace

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (UChar32 c : decode(text)) append_utf8(out, u_foldCase(c, U_FOLD_CASE_DEFAULT));
  return out;
}

std::string normalize(std::string_view text) {
  std::vector<UChar32> cps = decode(text);
  strip_urls_and_mentions(cps);

  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const UChar32 c = cps[i];
    if (is_word_char(c)) {
      if (pending_space && !out.empty()) out.push_back(' ');
      pending_space = false;
      append_utf8(out, u_foldCase(c, U_FOLD_CASE_DEFAULT));
      continue;
    }
    if (is_apostrophe(c)) {
      const bool intra_word = i > 0 && i + 1 < cps.size() && is_word_char(cps[i - 1]) &&
                              is_word_char(cps[i + 1]) && !pending_space;
      if (intra_word) continue;
    }
    pending_space = true;
  }
  return out;
}

std::vector<Token> tokenize(const TextRecord& record) {
  std::vector<Token> tokens;
  const std::string norm = normalize(record.text);
  std::size_t pos = 0;
  while (pos < norm.size()) {
    std::size_t end = norm.find(' ', pos);
    if (end == std::string::npos) end = norm.size();
    if (end > pos) {
      tokens.push_back({record.id, tokens.size() + 1, norm.substr(pos, end - pos)});
    }
    pos = end + 1;
  }
  return tokens;
}

std::vector<Token> tokenize(const Corpus& corpus) {
  std::vector<Token> all;
  for (const auto& rec : corpus.records) {
    auto tokens = tokenize(rec);
    all.insert(all.end(), std::make_move_iterator(tokens.begin()),
               std::make_move_iterator(tokens.end()));
  }
  return all;
}

StopList parse_stoplist(std::string_view text, StopListSource source) {
  StopList list;
  list.source = source;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string norm = normalize(line);
    std::size_t pos = 0;
    while (pos < norm.size()) {
      std::size_t end = norm.find(' ', pos);
      if (end == std::string::npos) end = norm.size();
      list.words.insert(norm.substr(pos, end - pos));
      pos = end + 1;
    }
  }
  return list;
}

StopList load_stoplist(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read stop-word file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_stoplist(buf.str(), StopListSource::user_file);
}

StopList bundled_stoplist() { return parse_stoplist(kBundledStopwords, StopListSource::bundled); }

std::vector<Token> remove_stopwords(std::span<const Token> tokens, const StopList& stoplist,
                                    const std::unordered_set<std::string>& custom) {
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (const auto& tok : tokens) {
    if (stoplist.contains(tok.word) || custom.count(tok.word)) continue;
    kept.push_back(tok);
  }
  return kept;
}

std::vector<Token> drop_duplicate_tokens(std::span<const Token> tokens, DedupeScope scope) {
  std::set<std::pair<RecordId, std::string>> seen;
  std::vector<Token> kept;
  kept.reserve(tokens.size());
  for (const auto& tok : tokens) {
    const RecordId key = scope == DedupeScope::per_record ? tok.record_id : 0;
    if (seen.emplace(key, tok.word).second) kept.push_back(tok);
  }
  return kept;
}

void write_tokens_csv(std::ostream& out, std::span<const Token> tokens) {
  csv::write_row(out, {"record_id", "position", "word"});
  for (const auto& tok : tokens) {
    csv::write_row(out, {std::to_string(tok.record_id), std::to_string(tok.position), tok.word});
  }
}

std::vector<Token> read_tokens_csv(std::istream& in) {
  csv::Reader reader(in);
  auto header = reader.next();
  if (!header || *header != csv::Row{"record_id", "position", "word"}) {
    throw InputError("tokens CSV must start with header record_id,position,word");
  }
  std::vector<Token> tokens;
  while (auto row = reader.next()) {
    if (row->size() != 3) {
      throw InputError("tokens CSV line " + std::to_string(reader.line()) + ": expected 3 fields");
    }
    try {
      tokens.push_back({std::stoll((*row)[0]), std::stoul((*row)[1]), (*row)[2]});
    } catch (const std::logic_error&) {
      throw InputError("tokens CSV line " + std::to_string(reader.line()) + ": bad number");
    }
  }
  return tokens;
}

}  // namespace senti
