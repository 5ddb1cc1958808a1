#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mercurial/stemming.hpp"

namespace mercurial {

/// One raw corpus record: a tweet-like unit of text.
struct TweetRecord {
  std::string id;
  std::string text;
  std::string lang;  // empty when the record carries no language tag
};

struct PipelineConfig {
  std::unordered_set<std::string> stopwords;
  std::unordered_set<std::string> negation_markers{"no", "non", "nessuno"};
  int negation_window = 3;
  std::vector<std::string> focal_hashtags;
  std::string language = "it";  // records tagged otherwise are dropped
  std::uint64_t seed = 0;
  int trials = 1000;
};

/// Position of a stem within ProcessedTweet::sentences.
struct TokenIndex {
  std::uint32_t sentence = 0;
  std::uint32_t token = 0;
  auto operator<=>(const TokenIndex&) const = default;
};

/// Preprocessed record: lowercased, stop-word free, stemmed, with hashtags
/// extracted and negated positions marked. `surface` keeps the pre-stem
/// token ('#'-stripped for hashtags) so negated stems can later be swapped
/// for the stem of the surface word's antonym.
struct ProcessedTweet {
  std::string id;
  std::set<std::string> hashtags;                   // lowercase, no '#'
  std::vector<std::vector<std::string>> sentences;  // stems
  std::vector<std::vector<std::string>> surface;    // parallel to sentences
  std::set<TokenIndex> negation_targets;
};

struct LoadReport {
  std::size_t lines = 0;
  std::size_t malformed = 0;
  std::size_t duplicate_text = 0;
  std::size_t duplicate_id = 0;
  std::size_t language_dropped = 0;
  std::size_t kept = 0;
  std::vector<std::string> warnings;
};

/// Reads a newline-delimited corpus file (one JSON object per line with
/// string fields "id", "text" and optional "lang"). Records duplicating an
/// earlier text or id are dropped (first occurrence wins), as are records
/// whose lang tag mismatches the configured language; untagged records are
/// trusted. Malformed lines are skipped and counted.
/// Throws std::runtime_error when the file cannot be read.
std::vector<TweetRecord> load_corpus(const std::string& path,
                                     const PipelineConfig& config,
                                     LoadReport& report);

/// Splits text into sentences of cleaned surface tokens: lowercased, URLs
/// and mentions and the literal "rt" removed, sentences cut at . ! ?, tokens
/// cut at whitespace and ASCII punctuation except '#', '@' and apostrophes
/// inside words, stop-words dropped. Negation markers survive cleaning; they
/// are consumed later by mark_negations.
std::vector<std::vector<std::string>> tokenize_and_clean(
    std::string_view text, const PipelineConfig& config);

/// Removes negation-marker tokens in place and returns the positions of up
/// to config.negation_window content tokens following each marker within the
/// same sentence. Positions refer to the marker-free token lists.
std::set<TokenIndex> mark_negations(
    std::vector<std::vector<std::string>>& sentences,
    const PipelineConfig& config);

/// Full per-record pipeline: tokenize_and_clean, mark_negations, hashtag
/// extraction, stemming. Hashtag tokens stay in the sentence stream as the
/// stem of their '#'-stripped form.
ProcessedTweet preprocess(const TweetRecord& record,
                          const PipelineConfig& config, const Stemmer& stemmer);

/// Loads a word list: one surface form per line, '#' comment lines and blank
/// lines ignored, entries lowercased.
std::unordered_set<std::string> load_wordlist(const std::string& path);

/// Lowercases ASCII and Latin-1 letters in UTF-8 text; other bytes pass
/// through unchanged.
std::string lowercase_utf8(std::string_view text);

}  // namespace mercurial
