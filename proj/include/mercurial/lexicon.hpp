#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mercurial/stemming.hpp"

namespace mercurial {

inline constexpr std::size_t kEmotionCount = 8;

/// The profiling universe, in the canonical report order.
inline constexpr std::array<std::string_view, kEmotionCount> kEmotionNames{
    "anger", "anticipation", "disgust", "fear",
    "joy",   "sadness",      "surprise", "trust"};

std::optional<std::size_t> emotion_index(std::string_view name);

using EmotionMask = std::uint8_t;  // bit i set = elicits kEmotionNames[i]

/// Word -> emotion associations with stem-level aggregation. The polarity
/// categories (positive/negative) shipped with the standard resource are
/// parsed into `polarity` but excluded from the emotion universe.
struct EmotionLexicon {
  std::map<std::string, EmotionMask> entries;
  std::map<std::string, EmotionMask> stem_entries;  // union over member words
  std::map<std::string, int> polarity;              // +1 / -1, advisory only
  std::size_t vocabulary_size() const { return entries.size(); }
};

/// Parses `word<TAB>emotion<TAB>{0|1}` lines ('#' comments allowed). Rows
/// naming an unknown category are skipped with a warning. Throws
/// std::runtime_error on an unreadable or empty lexicon.
EmotionLexicon load_emotion_lexicon(const std::string& path,
                                    const Stemmer& stemmer,
                                    std::vector<std::string>* warnings = nullptr);

struct ValenceArousal {
  double valence = 0.0;
  double arousal = 0.0;
};

/// Word -> (valence, arousal) on the raw 1..9 scale; the stem score is the
/// unweighted mean over the words sharing the stem.
struct AffectNorms {
  std::map<std::string, ValenceArousal> entries;
  std::map<std::string, ValenceArousal> stem_entries;
};

/// Parses `word<TAB>valence<TAB>arousal`; rows with scores outside [1, 9]
/// are rejected with a warning.
AffectNorms load_affect_norms(const std::string& path, const Stemmer& stemmer,
                              std::vector<std::string>* warnings = nullptr);

/// Affine map from the raw 1..9 scale to the circumplex square [-1, 1]^2.
std::pair<double, double> rescale_to_circumplex(double valence,
                                                double arousal);

struct AntonymLexicon {
  std::map<std::string, std::string> entries;
};

/// Parses `word<TAB>antonym` lines.
AntonymLexicon load_antonym_lexicon(const std::string& path,
                                    std::vector<std::string>* warnings = nullptr);

std::optional<std::string> antonym_of(std::string_view word,
                                      const AntonymLexicon& antonyms);

/// Advisory round-trip check: w -> antonym -> antonym should land on a word
/// of w's polarity when both carry one. Returns one warning per violation.
std::vector<std::string> antonym_polarity_warnings(
    const AntonymLexicon& antonyms, const EmotionLexicon& lexicon);

}  // namespace mercurial
