#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "senti/corpus.hpp"
#include "senti/metrics.hpp"
#include "senti/smoother.hpp"
#include "senti/textprep.hpp"

namespace senti {

inline constexpr std::string_view kVersion = "1.0.0";

struct RunConfig {
  std::filesystem::path input;
  CorpusFormat format = CorpusFormat::jsonl;
  std::filesystem::path nrc;
  std::filesystem::path bing_pos;
  std::filesystem::path bing_neg;
  std::size_t sequences = 3;
  std::vector<std::string> labels;
  SmoothParams smooth;
  CountPolicy policy = CountPolicy::polarity_only;
  std::string stopwords = "bundled";  // "bundled", "none" or a file path
  std::vector<std::string> custom_words;
  std::optional<DedupeScope> dedupe;
  bool skip_unmatched = false;
  bool zeros_as_agree = false;
  std::optional<double> k_sigma;
  std::filesystem::path out = "out";
  std::uint64_t seed = 2021;
  std::size_t records = 1000;
};

// Normalize, stop-word filter and (optionally) dedupe, per the config.
std::vector<Token> prepare_tokens(const Corpus& corpus, const RunConfig& config);

// Each writes into config.out (created if missing) and returns a one-line
// summary. Errors surface as senti::Error subclasses.
std::string run_tokenize(const RunConfig& config);
std::string run_analyze(const RunConfig& config);
std::string run_synth(const RunConfig& config);
// Reads an analysis directory, writes report.svg into out_dir.
std::string run_plot(const std::filesystem::path& analysis_dir,
                     const std::filesystem::path& out_dir);

// Full command-line entry point. Exit codes: 0 ok, 2 input/usage,
// 3 lexicon, 4 numerical.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace senti
