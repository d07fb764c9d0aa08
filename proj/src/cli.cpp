#include "senti/cli.hpp"

#include <ostream>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>

#include "senti/artifacts.hpp"
#include "senti/errors.hpp"
#include "senti/insight.hpp"
#include "senti/lexicon.hpp"
#include "senti/report.hpp"
#include "senti/synth.hpp"

namespace senti {

namespace {

using ordered_json = nlohmann::ordered_json;

struct MetricSpec {
  std::string_view name;
  bool is_count;
};

constexpr std::array<MetricSpec, 3> kMetrics = {{
    {"sentiment_count", true},
    {"nrc_score", false},
    {"bing_score", false},
}};

std::string_view to_string(DedupeScope s) {
  return s == DedupeScope::per_record ? "per_record" : "global";
}

StopList resolve_stoplist(const RunConfig& config) {
  if (config.stopwords == "bundled") return bundled_stoplist();
  if (config.stopwords == "none") return StopList{{}, StopListSource::inline_list};
  return load_stoplist(config.stopwords);
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["input"] = c.input.generic_string();
  j["format"] = to_string(c.format);
  j["nrc"] = c.nrc.generic_string();
  j["bing_pos"] = c.bing_pos.generic_string();
  j["bing_neg"] = c.bing_neg.generic_string();
  j["sequences"] = c.sequences;
  j["labels"] = c.labels.empty() ? default_sequence_labels(c.sequences) : c.labels;
  j["span"] = c.smooth.span;
  j["degree"] = c.smooth.degree;
  j["ci_level"] = c.smooth.ci_level;
  if (c.smooth.grid.all_x) {
    j["grid"] = "all";
  } else {
    j["grid"] = c.smooth.grid.points;
  }
  j["policy"] = to_string(c.policy);
  j["stopwords"] = c.stopwords;
  j["custom_words"] = c.custom_words;
  j["dedupe"] = c.dedupe ? std::string(to_string(*c.dedupe)) : std::string("none");
  j["skip_unmatched"] = c.skip_unmatched;
  j["zeros_as_agree"] = c.zeros_as_agree;
  if (c.k_sigma) {
    j["k_sigma"] = *c.k_sigma;
  } else {
    j["k_sigma"] = nullptr;
  }
  j["seed"] = c.seed;
  return j;
}

ordered_json file_json(const std::filesystem::path& p) {
  return {{"path", p.generic_string()}, {"sha256", sha256_file(p)}};
}

std::string to_text(const auto& writer, const auto& rows) {
  std::ostringstream out;
  writer(out, rows);
  return out.str();
}

ordered_json summary_json(const SequenceSummary& s) {
  return {{"n", s.n},
          {"mean", s.mean},
          {"variance", s.variance},
          {"fit_min", s.fit_min},
          {"fit_max", s.fit_max},
          {"amplitude", s.amplitude}};
}

ordered_json agreement_json(const AgreementReport& r, bool zeros_as_agree) {
  ordered_json j;
  if (r.agreement) {
    j["agreement"] = *r.agreement;
  } else {
    j["agreement"] = nullptr;
  }
  j["defined"] = r.agreement.has_value();
  j["records"] = r.records;
  j["compared"] = r.compared;
  j["agreeing"] = r.agreeing;
  j["nrc_zero"] = r.nrc_zero;
  j["bing_zero"] = r.bing_zero;
  j["zeros_as_agree"] = zeros_as_agree;
  return j;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

std::vector<Token> prepare_tokens(const Corpus& corpus, const RunConfig& config) {
  const StopList stoplist = resolve_stoplist(config);
  std::unordered_set<std::string> custom;
  for (const auto& w : config.custom_words) {
    const std::string norm = normalize(w);
    if (!norm.empty()) custom.insert(norm);
  }
  auto tokens = remove_stopwords(tokenize(corpus), stoplist, custom);
  if (config.dedupe) tokens = drop_duplicate_tokens(tokens, *config.dedupe);
  return tokens;
}

std::string run_tokenize(const RunConfig& config) {
  const Corpus corpus = load_corpus(config.input, config.format);
  const auto tokens = prepare_tokens(corpus, config);
  std::filesystem::create_directories(config.out);
  write_file_atomic(config.out / "tokens.csv", to_text(write_tokens_csv, std::span(tokens)));
  return "tokenized " + std::to_string(corpus.size()) + " records into " +
         std::to_string(tokens.size()) + " tokens";
}

std::string run_analyze(const RunConfig& config) {
  validate(config.smooth);
  const Corpus corpus = load_corpus(config.input, config.format);
  std::vector<std::string> nrc_warnings;
  const Lexicon nrc = load_nrc(config.nrc, &nrc_warnings);
  const Lexicon bing = load_bing(config.bing_pos, config.bing_neg);
  const auto slices = split_sequences(corpus, config.sequences, config.labels);

  const auto tokens = prepare_tokens(corpus, config);
  const auto metrics = score_corpus(corpus, tokens, nrc, bing, config.policy);

  std::vector<SmoothedTable> tables;
  std::vector<RecordFlag> flags;
  std::vector<Extremum> extrema;
  ordered_json sequences_json = ordered_json::array();

  for (const auto& slice : slices) {
    ordered_json seq_json;
    seq_json["index"] = slice.index;
    seq_json["label"] = slice.label;
    seq_json["start_id"] = slice.start_id;
    seq_json["end_id"] = slice.end_id;
    seq_json["size"] = slice.size();
    ordered_json metric_json;

    for (const auto& spec : kMetrics) {
      std::vector<SeriesPoint> points;
      std::vector<double> values;
      for (RecordId id = slice.start_id; id <= slice.end_id; ++id) {
        const auto& m = metrics[static_cast<std::size_t>(id - 1)];
        if (config.skip_unmatched && !spec.is_count) {
          const auto hits = spec.name == "nrc_score" ? m.nrc_polarity_hits : m.bing_hits;
          if (hits == 0) continue;
        }
        const double y = metric_value(m, spec.name);
        points.push_back({static_cast<double>(id), y});
        values.push_back(y);
      }

      SmoothedTable table;
      table.sequence = slice.index;
      table.metric = std::string(spec.name);
      table.clamp_at_zero = spec.is_count;
      try {
        table.series = smooth_series(points, config.smooth);
      } catch (const NumericalError& e) {
        throw NumericalError("sequence " + std::to_string(slice.index) + " (" + slice.label +
                             "), metric " + table.metric + ": " + e.what());
      } catch (const InputError& e) {
        throw InputError("sequence " + std::to_string(slice.index) + " (" + slice.label +
                         "), metric " + table.metric + ": " + e.what());
      }

      auto f = flag_records(points, table.series, spec.name, config.k_sigma);
      flags.insert(flags.end(), f.begin(), f.end());
      auto ex = find_extrema(table.series, slice.index, spec.name);
      extrema.insert(extrema.end(), ex.begin(), ex.end());

      auto summary = summarize_sequence(slice, values, table.series);
      auto sj = summary_json(summary);
      sj["sigma2"] = table.series.sigma2;
      sj["df"] = table.series.df;
      metric_json[std::string(spec.name)] = std::move(sj);
      tables.push_back(std::move(table));
    }
    seq_json["metrics"] = std::move(metric_json);
    sequences_json.push_back(std::move(seq_json));
  }

  const auto agreement = lexicon_agreement(metrics, config.zeros_as_agree);

  ordered_json summary;
  summary["counting_policy"] = to_string(config.policy);
  summary["records"] = corpus.size();
  summary["sequences"] = std::move(sequences_json);
  summary["agreement"] = agreement_json(agreement, config.zeros_as_agree);

  ordered_json meta;
  meta["tool"] = "senti";
  meta["version"] = kVersion;
  meta["command"] = "analyze";
  meta["config"] = config_json(config);
  ordered_json inputs;
  inputs["corpus"] = file_json(config.input);
  inputs["corpus"]["records"] = corpus.size();
  inputs["nrc"] = file_json(config.nrc);
  inputs["nrc"]["entries"] = nrc.size();
  inputs["nrc"]["warnings"] = nrc_warnings;
  inputs["bing_pos"] = file_json(config.bing_pos);
  inputs["bing_neg"] = file_json(config.bing_neg);
  inputs["bing_entries"] = bing.size();
  if (config.stopwords != "bundled" && config.stopwords != "none") {
    inputs["stopwords"] = file_json(config.stopwords);
  } else {
    inputs["stopwords"] = {{"source", config.stopwords}};
  }
  meta["inputs"] = std::move(inputs);
  meta["tokens"] = tokens.size();
  meta["counting_policy"] = to_string(config.policy);
  meta["smoother"] = {{"kernel", "tricube"},
                      {"bandwidth_factor", 1.01},
                      {"df_rule", "n - 1.25*(degree+1)/span, min 1"},
                      {"variance", "global residual"}};

  std::filesystem::create_directories(config.out);
  write_file_atomic(config.out / "metrics.csv", to_text(write_metrics_csv, std::span(metrics)));
  write_file_atomic(config.out / "smoothed.csv", to_text(write_smoothed_csv, std::span(tables)));
  write_file_atomic(config.out / "flags.csv", to_text(write_flags_csv, std::span(flags)));
  write_file_atomic(config.out / "extrema.csv", to_text(write_extrema_csv, std::span(extrema)));
  write_file_atomic(config.out / "summary.json", summary.dump(2) + "\n");
  write_file_atomic(config.out / "run_meta.json", meta.dump(2) + "\n");

  return "analyzed " + std::to_string(corpus.size()) + " records in " +
         std::to_string(slices.size()) + " sequences";
}

std::string run_synth(const RunConfig& config) {
  const Corpus corpus = synthesize_corpus({config.records, config.seed});
  std::filesystem::create_directories(config.out);
  write_file_atomic(config.out / "corpus.jsonl", serialize_corpus(corpus, CorpusFormat::jsonl));
  return "wrote " + std::to_string(corpus.size()) + " records (seed " +
         std::to_string(config.seed) + ")";
}

std::string run_plot(const std::filesystem::path& analysis_dir,
                     const std::filesystem::path& out_dir) {
  const auto smoothed_path = analysis_dir / "smoothed.csv";
  const auto summary_path = analysis_dir / "summary.json";
  if (!std::filesystem::exists(smoothed_path) || !std::filesystem::exists(summary_path)) {
    throw InputError("missing smoothed.csv or summary.json in " + analysis_dir.string());
  }

  ReportInput in;
  {
    std::istringstream s(read_file(smoothed_path));
    in.tables = read_smoothed_csv(s);
  }
  nlohmann::json summary;
  try {
    summary = nlohmann::json::parse(read_file(summary_path));
    for (const auto& m : kMetrics) in.metrics.emplace_back(m.name);
    for (const auto& seq : summary.at("sequences")) {
      in.sequences.push_back({seq.at("index").get<std::size_t>(),
                              seq.at("label").get<std::string>(),
                              seq.at("start_id").get<RecordId>(),
                              seq.at("end_id").get<RecordId>()});
      std::vector<double> means;
      for (const auto& m : in.metrics) {
        means.push_back(seq.at("metrics").at(m).at("mean").get<double>());
      }
      in.means.push_back(std::move(means));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed summary.json: " + std::string(e.what()));
  }
  if (const auto p = analysis_dir / "metrics.csv"; std::filesystem::exists(p)) {
    std::istringstream s(read_file(p));
    in.records = read_metrics_csv(s);
  }
  if (const auto p = analysis_dir / "flags.csv"; std::filesystem::exists(p)) {
    std::istringstream s(read_file(p));
    in.flags = read_flags_csv(s);
  }

  std::filesystem::create_directories(out_dir);
  write_file_atomic(out_dir / "report.svg", render_report_svg(in));
  return "wrote " + (out_dir / "report.svg").string() + " (" +
         std::to_string(in.sequences.size() * in.metrics.size()) + " panels)";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Longitudinal lexicon-based sentiment analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig cfg;
  std::string format = "jsonl";
  std::string policy = "polarity_only";
  std::string grid = "80";
  std::string dedupe = "none";
  std::string labels;
  std::string custom;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "Corpus file")->required();
    sub->add_option("--format", format, "Corpus format")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
  };
  const auto add_textprep = [&](CLI::App* sub) {
    sub->add_option("--stopwords", cfg.stopwords, "Stop-word file, 'bundled' or 'none'")
        ->capture_default_str();
    sub->add_option("--custom-words", custom, "Comma-separated extra words to drop");
    sub->add_option("--dedupe", dedupe, "Drop duplicate tokens: none, per_record, global")
        ->check(CLI::IsMember({"none", "per_record", "global"}))
        ->capture_default_str();
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Output directory")->capture_default_str();
  };

  auto* tok = app.add_subcommand("tokenize", "Write tidy tokens.csv");
  add_input(tok);
  add_textprep(tok);
  add_out(tok);

  auto* ana = app.add_subcommand("analyze", "Score, smooth and flag a corpus");
  add_input(ana);
  add_textprep(ana);
  add_out(ana);
  ana->add_option("--nrc", cfg.nrc, "NRC word-emotion lexicon (TSV)")->required();
  ana->add_option("--bing-pos", cfg.bing_pos, "Bing positive word list")->required();
  ana->add_option("--bing-neg", cfg.bing_neg, "Bing negative word list")->required();
  ana->add_option("--sequences", cfg.sequences, "Number of temporal sequences")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  ana->add_option("--labels", labels, "Comma-separated sequence labels");
  ana->add_option("--span", cfg.smooth.span, "Local window fraction")->capture_default_str();
  ana->add_option("--degree", cfg.smooth.degree, "Local polynomial degree")
      ->check(CLI::Range(0, 2))
      ->capture_default_str();
  ana->add_option("--ci", cfg.smooth.ci_level, "Confidence level")->capture_default_str();
  ana->add_option("--grid", grid, "Grid points, or 'all'")->capture_default_str();
  ana->add_option("--policy", policy, "Counting policy")
      ->check(CLI::IsMember({"polarity_only", "all_categories"}))
      ->capture_default_str();
  ana->add_flag("--skip-unmatched", cfg.skip_unmatched,
                "Leave records without lexicon hits out of score smoothing");
  ana->add_flag("--zeros-as-agree", cfg.zeros_as_agree,
                "Count records with both scores zero as agreeing");
  ana->add_option("--k-sigma", cfg.k_sigma, "Flag against fit +/- k*sqrt(cond_var)");

  auto* plot = app.add_subcommand("plot", "Render report.svg from an analysis directory");
  std::filesystem::path plot_input;
  std::filesystem::path plot_out;
  plot->add_option("--input", plot_input, "Analysis directory")->required();
  plot->add_option("--out", plot_out, "Output directory (defaults to --input)");

  auto* syn = app.add_subcommand("synth", "Generate the synthetic demo corpus");
  add_out(syn);
  syn->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  syn->add_option("--records", cfg.records, "Number of records")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.format = parse_corpus_format(format);
    cfg.policy = parse_count_policy(policy);
    if (grid == "all") {
      cfg.smooth.grid = GridSpec::all();
    } else {
      std::size_t pos = 0;
      unsigned long g = 0;
      try {
        g = std::stoul(grid, &pos);
      } catch (const std::logic_error&) {
        pos = 0;
      }
      if (pos != grid.size()) throw InputError("--grid must be an integer or 'all'");
      cfg.smooth.grid = GridSpec::evenly(g);
    }
    if (dedupe == "per_record") cfg.dedupe = DedupeScope::per_record;
    if (dedupe == "global") cfg.dedupe = DedupeScope::global;
    cfg.labels = split_list(labels);
    cfg.custom_words = split_list(custom);

    std::string msg;
    if (*tok) {
      msg = run_tokenize(cfg);
    } else if (*ana) {
      msg = run_analyze(cfg);
    } else if (*plot) {
      msg = run_plot(plot_input, plot_out.empty() ? plot_input : plot_out);
    } else {
      msg = run_synth(cfg);
    }
    out << msg << '\n';
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace senti
