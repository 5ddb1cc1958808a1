#include "mercurial/lexicon.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "mercurial/corpus.hpp"

namespace mercurial {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find('\t', start);
    if (pos == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, pos - start)));
    start = pos + 1;
  }
  return fields;
}

bool parse_double(std::string_view s, double& out) {
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc{} && res.ptr == end;
}

// Applies fn to every data line of a tab-separated file.
template <typename Fn>
void for_each_row(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    fn(split_tabs(t), line_no);
  }
}

void warn(std::vector<std::string>* warnings, std::string message) {
  if (warnings) warnings->push_back(std::move(message));
}

}  // namespace

std::optional<std::size_t> emotion_index(std::string_view name) {
  for (std::size_t i = 0; i < kEmotionNames.size(); ++i) {
    if (kEmotionNames[i] == name) return i;
  }
  return std::nullopt;
}

EmotionLexicon load_emotion_lexicon(const std::string& path,
                                    const Stemmer& stemmer,
                                    std::vector<std::string>* warnings) {
  EmotionLexicon lex;
  for_each_row(path, [&](const std::vector<std::string_view>& fields,
                         std::size_t line_no) {
    if (fields.size() != 3 || fields[0].empty()) {
      warn(warnings, "emotion lexicon: malformed row at line " +
                         std::to_string(line_no));
      return;
    }
    const std::string word = lowercase_utf8(fields[0]);
    const std::string category(fields[1]);
    const std::string_view flag = fields[2];
    if (flag != "0" && flag != "1") {
      warn(warnings, "emotion lexicon: bad flag at line " +
                         std::to_string(line_no));
      return;
    }
    if (category == "positive" || category == "negative") {
      // polarity rows are recognized but stay outside the emotion universe
      lex.entries.try_emplace(word, 0);
      if (flag == "1") lex.polarity[word] = category == "positive" ? 1 : -1;
      return;
    }
    const auto idx = emotion_index(category);
    if (!idx) {
      warn(warnings, "emotion lexicon: unknown emotion '" + category +
                         "' at line " + std::to_string(line_no));
      return;
    }
    auto& mask = lex.entries[word];
    if (flag == "1") mask |= static_cast<EmotionMask>(1u << *idx);
  });

  if (lex.entries.empty()) {
    throw std::runtime_error("emotion lexicon is empty: " + path);
  }
  for (const auto& [word, mask] : lex.entries) {
    lex.stem_entries[stemmer.stem(word)] |= mask;
  }
  return lex;
}

AffectNorms load_affect_norms(const std::string& path, const Stemmer& stemmer,
                              std::vector<std::string>* warnings) {
  AffectNorms norms;
  for_each_row(path, [&](const std::vector<std::string_view>& fields,
                         std::size_t line_no) {
    double valence = 0.0;
    double arousal = 0.0;
    if (fields.size() != 3 || fields[0].empty() ||
        !parse_double(fields[1], valence) || !parse_double(fields[2], arousal)) {
      warn(warnings,
           "affect norms: malformed row at line " + std::to_string(line_no));
      return;
    }
    if (valence < 1.0 || valence > 9.0 || arousal < 1.0 || arousal > 9.0) {
      warn(warnings, "affect norms: score out of [1,9] at line " +
                         std::to_string(line_no));
      return;
    }
    const std::string word = lowercase_utf8(fields[0]);
    if (!norms.entries.try_emplace(word, ValenceArousal{valence, arousal})
             .second) {
      warn(warnings, "affect norms: duplicate word '" + word + "' at line " +
                         std::to_string(line_no));
    }
  });

  std::map<std::string, std::pair<ValenceArousal, std::size_t>> sums;
  for (const auto& [word, va] : norms.entries) {
    auto& [sum, count] = sums[stemmer.stem(word)];
    sum.valence += va.valence;
    sum.arousal += va.arousal;
    ++count;
  }
  for (const auto& [stem, acc] : sums) {
    norms.stem_entries[stem] = {acc.first.valence / acc.second,
                                acc.first.arousal / acc.second};
  }
  return norms;
}

std::pair<double, double> rescale_to_circumplex(double valence,
                                                double arousal) {
  return {(valence - 5.0) / 4.0, (arousal - 5.0) / 4.0};
}

AntonymLexicon load_antonym_lexicon(const std::string& path,
                                    std::vector<std::string>* warnings) {
  AntonymLexicon antonyms;
  for_each_row(path, [&](const std::vector<std::string_view>& fields,
                         std::size_t line_no) {
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      warn(warnings,
           "antonyms: malformed row at line " + std::to_string(line_no));
      return;
    }
    antonyms.entries[lowercase_utf8(fields[0])] = lowercase_utf8(fields[1]);
  });
  return antonyms;
}

std::optional<std::string> antonym_of(std::string_view word,
                                      const AntonymLexicon& antonyms) {
  const auto it = antonyms.entries.find(std::string(word));
  if (it == antonyms.entries.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> antonym_polarity_warnings(
    const AntonymLexicon& antonyms, const EmotionLexicon& lexicon) {
  std::vector<std::string> warnings;
  for (const auto& [word, first] : antonyms.entries) {
    const auto second = antonym_of(first, antonyms);
    if (!second) continue;
    const auto p1 = lexicon.polarity.find(word);
    const auto p2 = lexicon.polarity.find(*second);
    if (p1 == lexicon.polarity.end() || p2 == lexicon.polarity.end()) continue;
    if (p1->second != p2->second) {
      warnings.push_back("antonym round trip flips polarity: " + word +
                         " -> " + first + " -> " + *second);
    }
  }
  return warnings;
}

}  // namespace mercurial
