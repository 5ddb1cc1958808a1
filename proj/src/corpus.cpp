#include "mercurial/corpus.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace mercurial {

namespace {

bool is_ascii_space(unsigned char c) { return std::isspace(c) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Byte kept inside a token: alphanumeric, '#', '@', or any non-ASCII byte
// (multibyte UTF-8 sequences pass through intact).
bool is_token_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c == '#' || c == '@' || c >= 0x80;
}

bool starts_url(std::string_view s, std::size_t i) {
  return s.compare(i, 7, "http://") == 0 || s.compare(i, 8, "https://") == 0 ||
         s.compare(i, 4, "www.") == 0;
}

std::string strip_urls(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (starts_url(text, i)) {
      while (i < text.size() &&
             !is_ascii_space(static_cast<unsigned char>(text[i])))
        ++i;
      continue;
    }
    out.push_back(text[i++]);
  }
  return out;
}

std::string strip_leading_hashes(std::string_view token) {
  std::size_t i = 0;
  while (i < token.size() && token[i] == '#') ++i;
  return std::string(token.substr(i));
}

}  // namespace

std::string lowercase_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c >= 'A' && c <= 'Z') {
      out.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if (c == 0xC3 && i + 1 < text.size()) {
      // Latin-1 supplement: 0xC380..0xC39E upper-cases to 0xC3A0..0xC3BE,
      // except the multiplication sign 0xC397.
      const auto d = static_cast<unsigned char>(text[i + 1]);
      out.push_back(static_cast<char>(c));
      if (d >= 0x80 && d <= 0x9E && d != 0x97) {
        out.push_back(static_cast<char>(d + 0x20));
      } else {
        out.push_back(static_cast<char>(d));
      }
      ++i;
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::vector<TweetRecord> load_corpus(const std::string& path,
                                     const PipelineConfig& config,
                                     LoadReport& report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);

  std::vector<TweetRecord> records;
  std::unordered_set<std::string> seen_texts;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    ++report.lines;

    TweetRecord rec;
    try {
      const auto j = nlohmann::json::parse(line);
      rec.id = j.at("id").get<std::string>();
      rec.text = j.at("text").get<std::string>();
      if (j.contains("lang")) rec.lang = j.at("lang").get<std::string>();
    } catch (const nlohmann::json::exception&) {
      ++report.malformed;
      report.warnings.push_back("malformed record at line " +
                                std::to_string(line_no));
      continue;
    }
    if (rec.id.empty() || trim(rec.text).empty()) {
      ++report.malformed;
      report.warnings.push_back("empty id or text at line " +
                                std::to_string(line_no));
      continue;
    }
    if (!rec.lang.empty() && rec.lang != config.language) {
      ++report.language_dropped;
      continue;
    }
    if (!seen_texts.insert(rec.text).second) {
      ++report.duplicate_text;
      continue;
    }
    if (!seen_ids.insert(rec.id).second) {
      ++report.duplicate_id;
      report.warnings.push_back("duplicate id '" + rec.id + "' at line " +
                                std::to_string(line_no));
      continue;
    }
    records.push_back(std::move(rec));
  }
  report.kept = records.size();
  return records;
}

std::vector<std::vector<std::string>> tokenize_and_clean(
    std::string_view text, const PipelineConfig& config) {
  const std::string cleaned = strip_urls(lowercase_utf8(text));

  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> current;

  auto flush_sentence = [&] {
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };

  std::string token;
  auto flush_token = [&] {
    if (token.empty()) return;
    std::string t = std::move(token);
    token.clear();
    // apostrophes are token-internal only
    while (!t.empty() && t.front() == '\'') t.erase(t.begin());
    while (!t.empty() && t.back() == '\'') t.pop_back();
    if (t.empty()) return;
    if (t.front() == '@') return;          // mention
    if (t == "rt") return;                 // retweet prefix
    if (t.front() == '#' && strip_leading_hashes(t).empty()) return;
    if (config.stopwords.contains(t) && !config.negation_markers.contains(t))
      return;
    current.push_back(std::move(t));
  };

  for (std::size_t i = 0; i < cleaned.size(); ++i) {
    const auto c = static_cast<unsigned char>(cleaned[i]);
    if (c == '.' || c == '!' || c == '?') {
      flush_token();
      flush_sentence();
    } else if (is_token_byte(c)) {
      token.push_back(static_cast<char>(c));
    } else if (c == '\'' && !token.empty() && i + 1 < cleaned.size() &&
               is_token_byte(static_cast<unsigned char>(cleaned[i + 1]))) {
      token.push_back('\'');
    } else {
      flush_token();
    }
  }
  flush_token();
  flush_sentence();
  return sentences;
}

std::set<TokenIndex> mark_negations(
    std::vector<std::vector<std::string>>& sentences,
    const PipelineConfig& config) {
  std::set<TokenIndex> targets;
  for (std::uint32_t s = 0; s < sentences.size(); ++s) {
    std::vector<std::string> kept;
    kept.reserve(sentences[s].size());
    int remaining = 0;
    for (auto& tok : sentences[s]) {
      if (config.negation_markers.contains(tok)) {
        remaining = config.negation_window;
        continue;
      }
      if (remaining > 0) {
        targets.insert({s, static_cast<std::uint32_t>(kept.size())});
        --remaining;
      }
      kept.push_back(std::move(tok));
    }
    sentences[s] = std::move(kept);
  }
  return targets;
}

ProcessedTweet preprocess(const TweetRecord& record,
                          const PipelineConfig& config,
                          const Stemmer& stemmer) {
  ProcessedTweet out;
  out.id = record.id;

  auto surfaces = tokenize_and_clean(record.text, config);
  auto targets = mark_negations(surfaces, config);

  // Compact empty sentences while remapping target sentence indices.
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < surfaces.size(); ++s) {
    if (surfaces[s].empty()) continue;
    std::vector<std::string> stems;
    std::vector<std::string> bare;
    stems.reserve(surfaces[s].size());
    bare.reserve(surfaces[s].size());
    for (std::uint32_t t = 0; t < surfaces[s].size(); ++t) {
      std::string word = surfaces[s][t];
      if (word.front() == '#') {
        word = strip_leading_hashes(word);
        out.hashtags.insert(word);
      }
      if (targets.contains({s, t})) out.negation_targets.insert({next, t});
      stems.push_back(stemmer.stem(word));
      bare.push_back(std::move(word));
    }
    out.sentences.push_back(std::move(stems));
    out.surface.push_back(std::move(bare));
    ++next;
  }
  return out;
}

std::unordered_set<std::string> load_wordlist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open word list: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    words.insert(lowercase_utf8(t));
  }
  return words;
}

}  // namespace mercurial
