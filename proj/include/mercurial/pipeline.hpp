#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mercurial/corpus.hpp"
#include "mercurial/metrics.hpp"
#include "mercurial/profiling.hpp"

namespace mercurial {

inline constexpr const char* kReportSchemaVersion = "1.0";

struct PipelinePaths {
  std::string corpus;
  std::string stopwords;
  std::string emotions;
  std::string norms;
  std::string antonyms;
  std::string out_dir;
};

struct RunOptions {
  PipelineConfig config;
  EntropyMode entropy_mode = EntropyMode::normalized;
  int grid = 40;
  std::size_t clusters = 0;  // 0 = skip spectral clustering of hashtag layers
  unsigned threads = 0;      // 0 = hardware concurrency
};

/// Side-by-side per-context z-scores for an anchor hashtag, reproducing how
/// the same term carries different emotional profiles in different contexts.
/// Contexts missing from `by_context` are omitted with a warning.
nlohmann::json compare_contexts(
    const std::string& anchor, const std::vector<std::string>& contexts,
    const std::map<std::string, ZTestResult>& by_context,
    std::vector<std::string>& warnings);

/// Runs the whole pipeline: corpus ingestion, one hashtag network per focal
/// hashtag, largest components, metrics and rankings, hashtag- and
/// word-level emotional profiles, and (with two or more focal hashtags) the
/// anchor-in-context comparison where the first focal hashtag is the anchor.
/// Writes the report bundle under paths.out_dir and returns the report.
/// Every output is a pure function of (inputs, config); rerunning produces
/// byte-identical files. Throws std::runtime_error on fatal input errors.
nlohmann::json run_pipeline(const RunOptions& options,
                            const PipelinePaths& paths);

}  // namespace mercurial
