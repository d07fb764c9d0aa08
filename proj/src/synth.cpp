#include "senti/synth.hpp"

#include <array>
#include <ctime>
#include <random>
#include <string_view>

#include "senti/errors.hpp"

namespace senti {

namespace {

constexpr std::array<std::string_view, 18> kPositive = {
    "love",    "hope",     "peace",   "trust",   "happy",   "proud",
    "support", "safe",     "great",   "thank",   "beautiful", "win",
    "freedom", "justice",  "celebrate", "patriot", "peaceful", "revolution",
};

constexpr std::array<std::string_view, 20> kNegative = {
    "hate",    "fear",      "angry",     "violence", "attack",   "riot",   "shame",
    "terrorism", "disgrace", "chaos",    "sad",      "death",    "destroy", "mob",
    "insurrection", "traitor", "dangerous", "crisis", "storm", "revolution",
};

constexpr std::array<std::string_view, 24> kStop = {
    "the", "and", "is",   "a",    "to",  "of",   "in",   "this",
    "that", "we", "are",  "it",   "for", "on",   "was",  "be",
    "they", "with", "not", "have", "our", "what", "just", "all",
};

constexpr std::array<std::string_view, 28> kNeutral = {
    "capitol", "people",  "today",    "election", "vote",     "senate",  "congress",
    "president", "building", "police", "crowd",   "news",     "washington", "america",
    "country", "state",   "watch",    "live",     "video",    "house",   "national",
    "guard",   "members", "count",    "certify",  "results",  "january", "streets",
};

constexpr std::array<std::string_view, 5> kEndings = {".", "!", "!!", "?", ""};

struct PhaseRates {
  double sentiment;
  double positive;
};

constexpr std::array<PhaseRates, 3> kPhases = {{{0.12, 0.55}, {0.22, 0.30}, {0.10, 0.45}}};

constexpr double kStopRate = 0.35;

// Maps engine output onto ranges by hand; std distributions are
// implementation-defined and would make the demo corpus library-dependent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
  }
  bool chance(double p) { return uniform() < p; }

  template <typename Array>
  std::string_view pick(const Array& a) {
    return a[below(a.size())];
  }

 private:
  std::mt19937_64 engine_;
};

std::string iso_timestamp(std::time_t t) {
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string capitalize(std::string_view w) {
  std::string out(w);
  if (!out.empty() && out[0] >= 'a' && out[0] <= 'z') out[0] = static_cast<char>(out[0] - 32);
  return out;
}

std::string make_text(Rng& rng, const PhaseRates& rates) {
  if (rng.chance(0.03)) {
    // no lexical content
    switch (rng.below(3)) {
      case 0: return "";
      case 1: return "https://t.co/" + std::to_string(100000 + rng.below(900000));
      default: return "@user" + std::to_string(rng.below(1000)) + " !!!";
    }
  }

  std::vector<std::string> words;
  const std::size_t slots = 4 + rng.below(15);
  for (std::size_t i = 0; i < slots; ++i) {
    if (rng.chance(rates.sentiment)) {
      words.emplace_back(rng.chance(rates.positive) ? rng.pick(kPositive) : rng.pick(kNegative));
    } else if (rng.chance(kStopRate)) {
      words.emplace_back(rng.pick(kStop));
    } else {
      words.emplace_back(rng.pick(kNeutral));
    }
  }
  if (rng.chance(0.06)) {
    words.insert(words.begin() + static_cast<std::ptrdiff_t>(rng.below(words.size())),
                 rng.chance(0.5) ? "isn't" : "don't");
  }
  if (rng.chance(0.04)) {
    words.insert(words.begin() + static_cast<std::ptrdiff_t>(rng.below(words.size())),
                 std::to_string(2 + rng.below(99)) + " states");
  }
  if (rng.chance(0.10)) {
    auto& w = words[rng.below(words.size())];
    w = "#" + w;
  }
  words.front() = capitalize(words.front());

  std::string text;
  if (rng.chance(0.12)) text = "@user" + std::to_string(rng.below(1000)) + " ";
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) text += rng.chance(0.08) ? ", " : " ";
    text += words[i];
  }
  text += rng.pick(kEndings);
  if (rng.chance(0.08)) text += " https://t.co/" + std::to_string(100000 + rng.below(900000));
  return text;
}

}  // namespace

Corpus synthesize_corpus(const SynthOptions& options) {
  if (options.records == 0) throw InputError("synth needs at least one record");
  Rng rng(options.seed);
  // 2021-01-06T09:00:00Z
  constexpr std::time_t kStart = 1609923600;

  Corpus corpus;
  corpus.source_path = "synth:seed=" + std::to_string(options.seed);
  corpus.records.reserve(options.records);
  for (std::size_t i = 0; i < options.records; ++i) {
    const std::size_t phase = i * kPhases.size() / options.records;
    TextRecord rec;
    rec.id = static_cast<RecordId>(i + 1);
    rec.text = make_text(rng, kPhases[phase]);
    rec.timestamp = iso_timestamp(kStart + static_cast<std::time_t>(i) * 45);
    corpus.records.push_back(std::move(rec));
  }
  return corpus;
}

}  // namespace senti
