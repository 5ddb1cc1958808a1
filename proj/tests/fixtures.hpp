// Shared test fixtures: temp-dir management, corpus/lexicon writers, and
// network construction shortcuts.
#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mercurial/corpus.hpp"
#include "mercurial/network.hpp"
#include "oracles.hpp"

namespace fixtures {

class TempDir {
 public:
  explicit TempDir(const std::string& name)
      : path_(std::filesystem::current_path() / ("tmp_" + name)) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::string write(const std::string& filename, const std::string& content) {
    const auto file = path_ / filename;
    std::ofstream out(file, std::ios::binary);
    out << content;
    return file.string();
  }

 private:
  std::filesystem::path path_;
};

inline std::string corpus_line(const std::string& id, const std::string& text,
                               const std::string& lang = "it") {
  std::string line = "{\"id\":\"" + id + "\",\"text\":\"" + text + "\"";
  if (!lang.empty()) line += ",\"lang\":\"" + lang + "\"";
  line += "}";
  return line + "\n";
}

inline mercurial::Network make_network(
    std::initializer_list<std::pair<const char*, const char*>> edges,
    std::initializer_list<const char*> isolated = {}) {
  mercurial::NetworkBuilder builder;
  for (const auto& [a, b] : edges) builder.add_edge(a, b);
  for (const char* n : isolated) builder.add_node(n);
  return builder.build();
}

inline mercurial::Network from_oracle(const oracle::SimpleGraph& g) {
  mercurial::NetworkBuilder builder;
  for (int i = 0; i < g.n; ++i) builder.add_node(oracle::node_name(i));
  for (const auto& [a, b] : g.edges) {
    builder.add_edge(oracle::node_name(a), oracle::node_name(b));
  }
  return builder.build();
}

inline mercurial::ProcessedTweet tweet_with_hashtags(
    const std::string& id, std::initializer_list<const char*> tags) {
  mercurial::ProcessedTweet tweet;
  tweet.id = id;
  for (const char* t : tags) tweet.hashtags.insert(t);
  return tweet;
}

inline mercurial::ProcessedTweet tweet_with_sentences(
    const std::string& id,
    std::initializer_list<std::initializer_list<const char*>> sentences) {
  mercurial::ProcessedTweet tweet;
  tweet.id = id;
  for (const auto& sentence : sentences) {
    std::vector<std::string> stems;
    for (const char* w : sentence) stems.emplace_back(w);
    tweet.surface.push_back(stems);
    tweet.sentences.push_back(std::move(stems));
  }
  return tweet;
}

}  // namespace fixtures
