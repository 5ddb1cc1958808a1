#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mercurial/pipeline.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mercurial: multi-layer hashtag/word co-occurrence networks with "
      "statistically tested emotional profiles"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand(
      "run", "Run the full pipeline and write a report bundle");

  mercurial::PipelinePaths paths;
  std::string focal_list;
  std::string entropy_mode = "normalized";
  std::string language = "it";
  std::uint64_t seed = 0;
  int trials = 1000;
  int grid = 40;
  std::size_t clusters = 0;
  unsigned threads = 0;

  run->add_option("--corpus", paths.corpus,
                  "Newline-delimited corpus file (JSON object per line)")
      ->required();
  run->add_option("--focal", focal_list,
                  "Comma-separated focal hashtags; the first one doubles as "
                  "the anchor for the context comparison")
      ->required();
  run->add_option("--stopwords", paths.stopwords, "Stop-word list")
      ->required();
  run->add_option("--emotions", paths.emotions,
                  "Emotion lexicon (word<TAB>emotion<TAB>0|1)")
      ->required();
  run->add_option("--norms", paths.norms,
                  "Valence/arousal norms (word<TAB>valence<TAB>arousal)")
      ->required();
  run->add_option("--antonyms", paths.antonyms,
                  "Antonym lexicon (word<TAB>antonym)")
      ->required();
  run->add_option("--out", paths.out_dir, "Output directory")->required();
  run->add_option("--seed", seed, "Seed feeding every random substream");
  run->add_option("--trials", trials, "Null-model sample count")
      ->check(CLI::PositiveNumber);
  run->add_option("--entropy-mode", entropy_mode,
                  "Distance entropy form: normalized|verbatim");
  run->add_option("--grid", grid, "Circumplex histogram resolution")
      ->check(CLI::Range(2, 1000));
  run->add_option("--clusters", clusters,
                  "Spectral cluster count for hashtag layers (0 = off)");
  run->add_option("--lang", language, "Language tag records must carry");
  run->add_option("--threads", threads,
                  "Worker threads for per-node metrics (0 = hardware)");

  CLI11_PARSE(app, argc, argv);

  try {
    mercurial::RunOptions options;
    options.config.focal_hashtags = split_commas(focal_list);
    options.config.seed = seed;
    options.config.trials = trials;
    options.config.language = language;
    options.entropy_mode = mercurial::parse_entropy_mode(entropy_mode);
    options.grid = grid;
    options.clusters = clusters;
    options.threads = threads;

    const auto report = mercurial::run_pipeline(options, paths);

    std::cout << "report written to " << paths.out_dir << "/report.json\n";
    std::cout << "corpus kept: " << report["corpus"]["kept"] << "\n";
    for (const auto& [tag, entry] : report["focal"].items()) {
      std::cout << "focal #" << tag << ": " << entry["tweets"] << " tweets";
      if (entry.contains("hashtag_network")) {
        std::cout << ", hashtag lcc "
                  << entry["hashtag_network"]["lcc_nodes"] << " nodes / "
                  << entry["hashtag_network"]["lcc_edges"] << " links";
      }
      std::cout << "\n";
    }
    const auto& warnings = report["warnings"];
    if (!warnings.empty()) {
      std::cout << warnings.size() << " warning(s); see report.json\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
