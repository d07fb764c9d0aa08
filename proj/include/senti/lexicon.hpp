#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace senti {

// Column order of metrics.csv.
enum class Category : std::uint8_t {
  anger,
  anticipation,
  disgust,
  fear,
  joy,
  sadness,
  surprise,
  trust,
  negative,
  positive,
};

inline constexpr std::size_t kCategoryCount = 10;

inline constexpr std::array<Category, kCategoryCount> kAllCategories = {
    Category::anger, Category::anticipation, Category::disgust, Category::fear,
    Category::joy,   Category::sadness,      Category::surprise, Category::trust,
    Category::negative, Category::positive,
};

std::string_view to_string(Category c);
std::optional<Category> parse_category(std::string_view name);

class CategorySet {
 public:
  constexpr CategorySet() = default;
  constexpr CategorySet(std::initializer_list<Category> cats) {
    for (auto c : cats) insert(c);
  }

  constexpr void insert(Category c) { bits_ |= bit(c); }
  constexpr bool contains(Category c) const { return (bits_ & bit(c)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(CategorySet other) const { return (bits_ & ~other.bits_) == 0; }
  std::size_t size() const;
  std::vector<Category> to_vector() const;

  friend constexpr bool operator==(CategorySet, CategorySet) = default;

 private:
  static constexpr std::uint16_t bit(Category c) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(c));
  }
  std::uint16_t bits_ = 0;
};

enum class LexiconKind { nrc, bing };

// All categories a lexicon of the given kind may emit.
CategorySet legal_categories(LexiconKind kind);

// Word -> category set, immutable after load. Words are stored case-folded.
class Lexicon {
 public:
  using Entries = std::map<std::string, CategorySet, std::less<>>;

  Lexicon(LexiconKind kind, Entries entries);

  LexiconKind kind() const { return kind_; }
  const Entries& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Exact match; empty set for unknown words.
  CategorySet lookup(std::string_view word) const;

 private:
  LexiconKind kind_;
  Entries entries_;
};

// NRC association TSV: word<TAB>category<TAB>flag per line. Only flag-1
// rows produce entries. Duplicate (word, category) rows append a warning.
// Throws LexiconError on malformed lines, unknown categories and an empty
// result.
Lexicon load_nrc(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);

// Two word lists, ';' comment lines ignored. A word on both lists is an error.
Lexicon load_bing(const std::filesystem::path& positive_path,
                  const std::filesystem::path& negative_path);

}  // namespace senti
