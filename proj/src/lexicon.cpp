#include "senti/lexicon.hpp"

#include <bit>
#include <fstream>

#include "senti/errors.hpp"
#include "senti/textprep.hpp"

namespace senti {

namespace {

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "anger", "anticipation", "disgust", "fear",     "joy",
    "sadness", "surprise",   "trust",   "negative", "positive",
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot read lexicon file: " + path.string());
  return in;
}

std::vector<std::string> read_word_list(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto word = trim(line);
    if (word.empty() || word.front() == ';') continue;
    words.push_back(fold_case(word));
  }
  return words;
}

}  // namespace

std::string_view to_string(Category c) { return kCategoryNames[static_cast<std::size_t>(c)]; }

std::optional<Category> parse_category(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  }
  return std::nullopt;
}

std::size_t CategorySet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<Category> CategorySet::to_vector() const {
  std::vector<Category> out;
  for (auto c : kAllCategories) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

CategorySet legal_categories(LexiconKind kind) {
  if (kind == LexiconKind::bing) return {Category::positive, Category::negative};
  CategorySet all;
  for (auto c : kAllCategories) all.insert(c);
  return all;
}

Lexicon::Lexicon(LexiconKind kind, Entries entries) : kind_(kind), entries_(std::move(entries)) {}

CategorySet Lexicon::lookup(std::string_view word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? CategorySet{} : it->second;
}

Lexicon load_nrc(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  auto in = open_or_throw(path);
  Lexicon::Entries entries;
  std::string line;
  std::size_t line_no = 0;
  const auto fail = [&](const std::string& what) {
    throw LexiconError(path.string() + ": line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;

    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
      fail("expected 3 tab-separated fields");
    }
    const auto word = trim(std::string_view(line).substr(0, tab1));
    const auto cat_name = trim(std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1));
    const auto flag = trim(std::string_view(line).substr(tab2 + 1));
    if (word.empty()) fail("empty word");
    if (flag != "0" && flag != "1") fail("flag must be 0 or 1, got '" + std::string(flag) + "'");
    const auto cat = parse_category(cat_name);
    if (!cat) fail("unknown category '" + std::string(cat_name) + "'");
    if (flag == "0") continue;

    auto& set = entries[fold_case(word)];
    if (set.contains(*cat)) {
      if (warnings) {
        warnings->push_back(path.string() + ": line " + std::to_string(line_no) +
                            ": duplicate entry " + std::string(word) + "/" +
                            std::string(cat_name));
      }
      continue;
    }
    set.insert(*cat);
  }
  if (entries.empty()) throw LexiconError(path.string() + ": empty lexicon");
  return Lexicon(LexiconKind::nrc, std::move(entries));
}

Lexicon load_bing(const std::filesystem::path& positive_path,
                  const std::filesystem::path& negative_path) {
  Lexicon::Entries entries;
  for (auto& word : read_word_list(positive_path)) entries[word] = {Category::positive};
  for (auto& word : read_word_list(negative_path)) {
    auto [it, inserted] = entries.try_emplace(word, CategorySet{Category::negative});
    if (!inserted && it->second.contains(Category::positive)) {
      throw LexiconError("word '" + word + "' appears in both Bing lists (" +
                         positive_path.string() + ", " + negative_path.string() + ")");
    }
  }
  if (entries.empty()) throw LexiconError("empty lexicon: " + positive_path.string() + ", " +
                                          negative_path.string());
  return Lexicon(LexiconKind::bing, std::move(entries));
}

}  // namespace senti
