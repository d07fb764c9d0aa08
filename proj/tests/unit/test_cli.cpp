#include <doctest.h>

#include <sstream>

#include "senti/cli.hpp"
#include "senti/errors.hpp"
#include "unit/test_support.hpp"

using namespace senti;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "senti");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lexicon_args() {
  const auto dir = testing::lexicon_dir();
  return {"--nrc", (dir / "nrc_fixture.tsv").string(), "--bing-pos",
          (dir / "bing_positive.txt").string(), "--bing-neg", (dir / "bing_negative.txt").string()};
}

std::string demo_corpus() { return (testing::source_dir() / "data/demo/corpus.jsonl").string(); }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

Outcome analyze(const testing::TempDir& dir, std::vector<std::string> extra) {
  std::vector<std::string> args{"analyze", "--input", demo_corpus(), "--out",
                                (dir.path() / "run").string()};
  for (auto& a : lexicon_args()) args.push_back(a);
  for (auto& a : extra) args.push_back(a);
  return run(args);
}

}  // namespace

TEST_CASE("missing input exits 2 and names the path") {
  testing::TempDir dir;
  const auto missing = (dir.path() / "nope.jsonl").string();
  const auto r = run({"tokenize", "--input", missing, "--out", dir.path().string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(missing) != std::string::npos);
}

TEST_CASE("--sequences 0 is a usage error") {
  testing::TempDir dir;
  const auto r = analyze(dir, {"--sequences", "0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--sequences") != std::string::npos);
}

TEST_CASE("lexicon errors exit 3") {
  testing::TempDir dir;
  const auto bad = dir.write("bad.tsv", "abandon\tfear\t2\n");
  auto args = std::vector<std::string>{"analyze", "--input", demo_corpus(), "--out",
                                       (dir.path() / "run").string()};
  auto lex = lexicon_args();
  lex[1] = bad.string();
  for (auto& a : lex) args.push_back(a);
  const auto r = run(args);
  CHECK(r.code == 3);
  CHECK(r.err.find("bad.tsv") != std::string::npos);
}

TEST_CASE("error classes carry their exit codes") {
  CHECK(InputError("x").exit_code() == 2);
  CHECK(LexiconError("x").exit_code() == 3);
  CHECK(NumericalError("x").exit_code() == 4);
}

TEST_CASE("too few records for the smoother is an input error naming the sequence") {
  testing::TempDir dir;
  const auto corpus = dir.write("tiny.jsonl",
                                "{\"text\": \"good\"}\n{\"text\": \"bad\"}\n{\"text\": \"fine\"}\n");
  auto args = std::vector<std::string>{"analyze", "--input", corpus.string(), "--out",
                                       (dir.path() / "run").string(), "--sequences", "1"};
  for (auto& a : lexicon_args()) args.push_back(a);
  const auto r = run(args);
  CHECK(r.code == 2);
  CHECK(r.err.find("sequence 1") != std::string::npos);
}

TEST_CASE("an empty stop-word file behaves like --stopwords none") {
  testing::TempDir dir;
  const auto empty = dir.write("empty.txt", "");
  const auto a = run({"tokenize", "--input", demo_corpus(), "--stopwords", empty.string(),
                      "--out", (dir.path() / "a").string()});
  const auto b = run({"tokenize", "--input", demo_corpus(), "--stopwords", "none", "--out",
                      (dir.path() / "b").string()});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(testing::slurp(dir.path() / "a/tokens.csv") == testing::slurp(dir.path() / "b/tokens.csv"));
}

TEST_CASE("demo tokens match the reviewed golden file") {
  testing::TempDir dir;
  const auto r = run({"tokenize", "--input", demo_corpus(), "--out", dir.path().string()});
  REQUIRE(r.code == 0);
  const auto golden = std::filesystem::path(SENTI_TEST_DATA) / "demo_tokens.csv";
  CHECK(testing::slurp(dir.path() / "tokens.csv") == testing::slurp(golden));
}

TEST_CASE("analyze writes every artifact and plot renders one panel per metric and sequence") {
  testing::TempDir dir;
  const auto r = analyze(dir, {"--sequences", "4"});
  REQUIRE_MESSAGE(r.code == 0, r.err);
  for (const char* f : {"metrics.csv", "smoothed.csv", "flags.csv", "extrema.csv", "summary.json",
                        "run_meta.json"}) {
    CHECK_MESSAGE(std::filesystem::exists(dir.path() / "run" / f), f);
  }
  const auto p = run({"plot", "--input", (dir.path() / "run").string()});
  REQUIRE_MESSAGE(p.code == 0, p.err);
  const auto svg = testing::slurp(dir.path() / "run/report.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "class=\"frame\"") == 12);
  CHECK(count(svg, "class=\"fit\"") == 12);
  CHECK(count(svg, "class=\"mean\"") == 12);
  CHECK(count(svg, "class=\"band\"") == 12);
}

TEST_CASE("plot still renders with an empty flags file") {
  testing::TempDir dir;
  REQUIRE(analyze(dir, {}).code == 0);
  const auto flags = dir.path() / "run/flags.csv";
  const auto text = testing::slurp(flags);
  dir.write("run/flags.csv", text.substr(0, text.find('\n') + 1));
  const auto p = run({"plot", "--input", (dir.path() / "run").string(), "--out",
                      (dir.path() / "fig").string()});
  REQUIRE_MESSAGE(p.code == 0, p.err);
  const auto svg = testing::slurp(dir.path() / "fig/report.svg");
  CHECK(count(svg, "class=\"fit\"") == 9);
  CHECK(count(svg, "class=\"band\"") == 9);
  CHECK(count(svg, "class=\"above\"") == 0);
}

TEST_CASE("synth is reproducible from its seed") {
  testing::TempDir dir;
  REQUIRE(run({"synth", "--out", (dir.path() / "a").string(), "--seed", "7", "--records", "50"})
              .code == 0);
  REQUIRE(run({"synth", "--out", (dir.path() / "b").string(), "--seed", "7", "--records", "50"})
              .code == 0);
  const auto a = testing::slurp(dir.path() / "a/corpus.jsonl");
  CHECK(a == testing::slurp(dir.path() / "b/corpus.jsonl"));
  CHECK(count(a, "\n") == 50);
  CHECK(testing::slurp(testing::source_dir() / "data/demo/corpus.jsonl") ==
        [&] {
          REQUIRE(run({"synth", "--out", (dir.path() / "d").string()}).code == 0);
          return testing::slurp(dir.path() / "d/corpus.jsonl");
        }());
}
