#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "senti/lexicon.hpp"
#include "senti/textprep.hpp"
#include "unit/test_support.hpp"

using namespace senti;

namespace {

std::vector<std::string> words_of(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.word);
  return out;
}

std::vector<Token> make_tokens(std::initializer_list<std::pair<RecordId, const char*>> items) {
  std::vector<Token> out;
  std::map<RecordId, std::size_t> pos;
  for (auto [id, w] : items) out.push_back({id, ++pos[id], w});
  return out;
}

}  // namespace

TEST_CASE("normalize examples") {
  CHECK(normalize("We the People LOVE you!") == "we the people love you");
  CHECK(normalize("this isn't a test") == "this isnt a test");
  CHECK(normalize("") == "");
}

TEST_CASE("normalize strips URLs, mentions and hashtag marks") {
  CHECK(normalize("@user12 look at https://t.co/abc?x=1 now") == "look at now");
  CHECK(normalize("#StopTheSteal is trending") == "stopthesteal is trending");
  CHECK(normalize("mail me@example.com") == "mail me example com");
  CHECK(normalize("50 states!!!") == "50 states");
  CHECK(normalize("  lots   of\tspace\n") == "lots of space");
  CHECK(normalize("'quoted' words") == "quoted words");
  CHECK(normalize("don\xE2\x80\x99t") == "dont");
  CHECK(normalize("ftp://host/x") == "");
}

TEST_CASE("normalize folds non-ASCII case and keeps letters") {
  CHECK(normalize("\xC3\x89T\xC3\x89 Stra\xC3\x9F" "e") == "\xC3\xA9t\xC3\xA9 stra\xC3\x9F" "e");
  CHECK(normalize("\xCE\xA3\xCE\x9F\xCE\xA6\xCE\x99\xCE\x91") ==
        "\xCF\x83\xCE\xBF\xCF\x86\xCE\xB9\xCE\xB1");
  // emoji are not letters
  CHECK(normalize("great \xF0\x9F\x98\x80 day") == "great day");
}

TEST_CASE("normalize is idempotent") {
  std::mt19937_64 eng(3);
  const std::vector<std::string> pieces = {
      "A", "b", " ", "  ", "'", "\xE2\x80\x99", "@", "@x", "#", "http://a.b/c", "://",
      "!", ".", ",", "1", "\xC3\x89", "\xCE\xA3", "\xF0\x9F\x98\x80", "_", "-", "\t", "ok"};
  for (int iter = 0; iter < 2000; ++iter) {
    std::string s;
    const std::size_t len = testing::below(eng, 16);
    for (std::size_t i = 0; i < len; ++i) s += pieces[testing::below(eng, pieces.size())];
    const std::string once = normalize(s);
    CHECK_MESSAGE(normalize(once) == once, "input: " << s);
  }
}

TEST_CASE("tokenize examples") {
  auto t = tokenize(TextRecord{7, "good good bad", {}});
  REQUIRE(t.size() == 3);
  CHECK(t[0] == Token{7, 1, "good"});
  CHECK(t[1] == Token{7, 2, "good"});
  CHECK(t[2] == Token{7, 3, "bad"});

  CHECK(tokenize(TextRecord{1, "", {}}).empty());

  auto u = tokenize(TextRecord{2, "A  b", {}});
  REQUIRE(u.size() == 2);
  CHECK(u[0] == Token{2, 1, "a"});
  CHECK(u[1] == Token{2, 2, "b"});
}

TEST_CASE("tokens satisfy the word invariants") {
  std::mt19937_64 eng(9);
  const std::vector<std::string> pieces = {"Hello", " ", "WORLD", "!", "@me", "x'y",
                                           "\xC3\x89", "\t", "#tag", "http://u.rl/ok", "7"};
  for (int iter = 0; iter < 500; ++iter) {
    std::string s;
    for (std::size_t i = 0; i < testing::below(eng, 10); ++i) {
      s += pieces[testing::below(eng, pieces.size())];
    }
    const auto toks = tokenize(TextRecord{3, s, {}});
    for (std::size_t i = 0; i < toks.size(); ++i) {
      CHECK(toks[i].position == i + 1);
      CHECK_FALSE(toks[i].word.empty());
      CHECK(toks[i].word.find_first_of(" \t\n") == std::string::npos);
      CHECK(fold_case(toks[i].word) == toks[i].word);
    }
  }
}

TEST_CASE("remove_stopwords filters without reordering") {
  const auto toks = make_tokens({{1, "we"}, {1, "the"}, {1, "people"}});
  StopList the{{"the"}, StopListSource::inline_list};
  auto kept = remove_stopwords(toks, the);
  CHECK(words_of(kept) == std::vector<std::string>{"we", "people"});
  CHECK(kept[1].position == 3);

  CHECK(remove_stopwords(toks, StopList{}) == toks);

  StopList and_is{{"and", "is"}, StopListSource::inline_list};
  CHECK(remove_stopwords(make_tokens({{1, "and"}, {1, "is"}}), and_is).empty());

  auto custom = remove_stopwords(toks, StopList{}, {"people"});
  CHECK(words_of(custom) == std::vector<std::string>{"we", "the"});
}

TEST_CASE("drop_duplicate_tokens scopes") {
  const auto a = make_tokens({{1, "good"}, {1, "good"}, {1, "bad"}});
  auto d = drop_duplicate_tokens(a, DedupeScope::per_record);
  CHECK(words_of(d) == std::vector<std::string>{"good", "bad"});
  CHECK(d[1].position == 3);

  const auto distinct = make_tokens({{1, "a"}, {1, "b"}, {2, "c"}});
  CHECK(drop_duplicate_tokens(distinct, DedupeScope::global) == distinct);

  const auto b = make_tokens({{1, "x"}, {2, "x"}});
  CHECK(drop_duplicate_tokens(b, DedupeScope::per_record) == b);
  auto g = drop_duplicate_tokens(b, DedupeScope::global);
  REQUIRE(g.size() == 1);
  CHECK(g[0].record_id == 1);
}

TEST_CASE("stop-word files") {
  auto list = parse_stoplist("# comment\nThe\n\n  and \nisn't\n", StopListSource::user_file);
  CHECK(list.words.size() == 3);
  CHECK(list.contains("the"));
  CHECK(list.contains("and"));
  CHECK(list.contains("isnt"));
  CHECK_FALSE(list.contains("# comment"));

  auto bundled = bundled_stoplist();
  CHECK(bundled.source == StopListSource::bundled);
  CHECK(bundled.contains("and"));
  CHECK(bundled.contains("is"));
  CHECK(bundled.contains("isnt"));
  CHECK(bundled.words.size() > 100);
}

TEST_CASE("bundled stop words never shadow fixture lexicon words") {
  const auto bundled = bundled_stoplist();
  const auto nrc = load_nrc(testing::lexicon_dir() / "nrc_fixture.tsv");
  const auto bing = load_bing(testing::lexicon_dir() / "bing_positive.txt",
                              testing::lexicon_dir() / "bing_negative.txt");
  for (const auto* lex : {&nrc, &bing}) {
    for (const auto& [word, cats] : lex->entries()) CHECK_FALSE(bundled.contains(word));
  }
}

TEST_CASE("tokens CSV round trip") {
  const auto toks = make_tokens({{1, "a"}, {1, "b"}, {3, "\xC3\xA9t\xC3\xA9"}});
  std::stringstream buf;
  write_tokens_csv(buf, toks);
  CHECK(buf.str().rfind("record_id,position,word\n", 0) == 0);
  CHECK(read_tokens_csv(buf) == toks);
}
