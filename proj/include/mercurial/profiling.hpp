#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mercurial/corpus.hpp"
#include "mercurial/lexicon.hpp"
#include "mercurial/metrics.hpp"
#include "mercurial/netbuild.hpp"

namespace mercurial {

/// Two-tailed significance threshold at alpha = 0.05.
inline constexpr double kSignificanceZ = 1.96;

/// Observed emotion richness of a stem multiset: r(i) counts distinct
/// lexicon-covered stems eliciting emotion i.
struct EmotionProfile {
  std::size_t m = 0;              // distinct covered stems
  std::size_t distinct = 0;       // distinct stems in the input
  std::size_t total_units = 1;    // normalization base
  std::array<std::uint32_t, kEmotionCount> richness{};
  std::array<double, kEmotionCount> normalized{};
};

/// Flattens a tweet to its stem sequence with negated stems swapped for the
/// stem of the surface word's antonym. Unmapped targets pass through and
/// bump *misses.
std::vector<std::string> substitute_negated(const ProcessedTweet& tweet,
                                            const AntonymLexicon& antonyms,
                                            const Stemmer& stemmer,
                                            std::size_t* misses = nullptr);

EmotionProfile emotion_profile(const std::vector<std::string>& stems,
                               const EmotionLexicon& lexicon,
                               std::size_t total_units);

/// Null expectation from `trials` uniform samples of m lexicon words drawn
/// without replacement: per-emotion mean r*(i), sample standard deviation
/// sigma*(i), and a KS check of each emotion's trial distribution against a
/// normal with the sample moments. Trial t draws from substream (seed, t),
/// so results do not depend on scheduling.
struct NullModel {
  std::size_t m = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::array<double, kEmotionCount> r_star{};
  std::array<double, kEmotionCount> sigma_star{};
  std::array<bool, kEmotionCount> ks_pass{};
};

/// Throws std::invalid_argument when m exceeds the vocabulary.
NullModel null_model(std::size_t m, const EmotionLexicon& lexicon, int trials,
                     std::uint64_t seed);

enum class Direction { above, below, compatible };
std::string_view to_string(Direction d);

/// z = (r - r*) / sigma*; sigma* == 0 degenerates to z = 0 when r == r* and
/// to +/-infinity otherwise. Significant iff |z| > 1.96 (two-tailed 0.05).
struct ZTestResult {
  std::array<double, kEmotionCount> z{};
  std::array<bool, kEmotionCount> significant{};
  std::array<Direction, kEmotionCount> direction{};
};

/// Throws std::invalid_argument when profile.m != null.m.
ZTestResult z_test(const EmotionProfile& profile, const NullModel& null);

/// 2-D histogram of rescaled (valence, arousal) stem coordinates over
/// [-1, 1]^2, with the neutrality rectangle spanned by the per-axis
/// interquartile range of the full norms lexicon.
struct CircumplexDensity {
  int grid = 0;
  std::vector<std::uint32_t> cells;  // row-major, index = ay * grid + vx
  double valence_low = 0.0, valence_high = 0.0;
  double arousal_low = 0.0, arousal_high = 0.0;
  std::size_t covered_words = 0;
};

CircumplexDensity circumplex_density(const std::vector<std::string>& stems,
                                     const AffectNorms& norms, int grid);

/// Greedy longest-match split of a hashtag against a surface vocabulary;
/// falls back to the whole string when the tag cannot be fully consumed.
std::vector<std::string> segment_hashtag(std::string_view tag,
                                         const std::set<std::string>& vocabulary);

struct HashtagNetworkProfile {
  EmotionProfile profile;
  NullModel null;
  ZTestResult ztest;
  CircumplexDensity circumplex;
  std::size_t segmentation_fallbacks = 0;
  std::vector<std::string> warnings;
};

/// Hashtag-level profiling: each hashtag is segmented into words, stemmed
/// and pooled; total_units is the hashtag count of the network.
HashtagNetworkProfile profile_hashtag_network(const HashtagNetwork& net,
                                              const EmotionLexicon& lexicon,
                                              const AffectNorms& norms,
                                              const Stemmer& stemmer,
                                              int trials, std::uint64_t seed,
                                              int grid);

struct WordCloudEntry {
  std::string stem;
  double closeness = 0.0;
};

struct WordNetworkProfile {
  EmotionProfile profile;
  NullModel null;
  ZTestResult ztest;
  CircumplexDensity circumplex;
  std::array<std::vector<WordCloudEntry>, kEmotionCount> word_cloud;
  double median_closeness = 0.0;
  std::vector<std::string> warnings;
};

/// Word-level profiling over the stems whose closeness lies strictly above
/// the component median; the word cloud lists the qualifying stems per
/// emotion weighted by closeness. `metrics` must describe `net`'s nodes.
WordNetworkProfile profile_word_network(const WordNetwork& net,
                                        const std::vector<NodeMetrics>& metrics,
                                        const EmotionLexicon& lexicon,
                                        const AffectNorms& norms, int trials,
                                        std::uint64_t seed, int grid);

}  // namespace mercurial
