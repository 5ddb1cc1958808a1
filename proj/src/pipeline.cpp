#include "mercurial/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "mercurial/netbuild.hpp"
#include "mercurial/network.hpp"
#include "mercurial/rng.hpp"

namespace mercurial {

namespace {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

nlohmann::json json_z(double z) {
  if (std::isinf(z)) return z > 0 ? "inf" : "-inf";
  return z;
}

nlohmann::json profile_json(const EmotionProfile& profile,
                            const NullModel& null, const ZTestResult& ztest) {
  nlohmann::json j;
  j["m"] = profile.m;
  j["distinct_stems"] = profile.distinct;
  j["total_units"] = profile.total_units;
  j["trials"] = null.trials;
  for (std::size_t e = 0; e < kEmotionCount; ++e) {
    const std::string name(kEmotionNames[e]);
    j["richness"][name] = profile.richness[e];
    j["normalized"][name] = profile.normalized[e];
    j["null"]["r_star"][name] = null.r_star[e];
    j["null"]["sigma_star"][name] = null.sigma_star[e];
    j["null"]["ks_pass"][name] = null.ks_pass[e];
    j["z"][name] = json_z(ztest.z[e]);
    j["significant"][name] = ztest.significant[e];
    j["direction"][name] = std::string(to_string(ztest.direction[e]));
  }
  return j;
}

nlohmann::json circumplex_json(const CircumplexDensity& density) {
  nlohmann::json j;
  j["grid"] = density.grid;
  j["covered_words"] = density.covered_words;
  j["neutrality_range"]["valence"] = {density.valence_low,
                                      density.valence_high};
  j["neutrality_range"]["arousal"] = {density.arousal_low,
                                      density.arousal_high};
  j["cells"] = density.cells;
  return j;
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

void export_edge_list(const fs::path& path, const Network& net) {
  std::ostringstream os;
  write_edge_list(net, os);
  write_text_file(path, os.str());
}

// node<TAB>closeness<TAB>entropy<TAB>clustering, sorted by the closeness
// ranking (descending, ties lexicographic).
void export_metrics_table(const fs::path& path, const Network& net,
                          const std::vector<NodeMetrics>& metrics) {
  std::vector<const NodeMetrics*> rows;
  rows.reserve(metrics.size());
  for (const auto& nm : metrics) rows.push_back(&nm);
  std::sort(rows.begin(), rows.end(),
            [&](const NodeMetrics* a, const NodeMetrics* b) {
              if (a->closeness != b->closeness)
                return a->closeness > b->closeness;
              return net.name(a->node) < net.name(b->node);
            });
  std::ostringstream os;
  for (const auto* nm : rows) {
    os << net.name(nm->node) << '\t' << format_double(nm->closeness) << '\t'
       << format_double(nm->distance_entropy) << '\t'
       << format_double(nm->local_clustering) << '\n';
  }
  write_text_file(path, os.str());
}

void export_word_clouds(const fs::path& dir, const WordNetworkProfile& wp) {
  for (std::size_t e = 0; e < kEmotionCount; ++e) {
    std::ostringstream os;
    for (const auto& entry : wp.word_cloud[e]) {
      os << entry.stem << '\t' << format_double(entry.closeness) << '\n';
    }
    write_text_file(dir / ("wordcloud_" + std::string(kEmotionNames[e]) +
                           ".tsv"),
                    os.str());
  }
}

std::string sanitize_tag(const std::string& tag) {
  std::string out;
  for (const char c : tag) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  }
  return out.empty() ? "_" : out;
}

nlohmann::json network_stats(const Network& net, const Network& lcc,
                             double mean_clust, double mean_dist) {
  nlohmann::json j;
  j["nodes"] = net.node_count();
  j["edges"] = net.edge_count();
  j["lcc_nodes"] = lcc.node_count();
  j["lcc_edges"] = lcc.edge_count();
  j["mean_local_clustering"] = mean_clust;
  j["mean_distance"] = mean_dist;
  return j;
}

}  // namespace

nlohmann::json compare_contexts(
    const std::string& anchor, const std::vector<std::string>& contexts,
    const std::map<std::string, ZTestResult>& by_context,
    std::vector<std::string>& warnings) {
  nlohmann::json table;
  table["anchor"] = anchor;
  table["contexts"] = nlohmann::json::array();
  for (const auto& context : contexts) {
    const auto it = by_context.find(context);
    if (it == by_context.end()) {
      warnings.push_back("compare_contexts: no word network for " + anchor +
                         "+" + context + "; row omitted");
      continue;
    }
    nlohmann::json row;
    row["context"] = context;
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
      const std::string name(kEmotionNames[e]);
      row["z"][name] = json_z(it->second.z[e]);
      row["significant"][name] = it->second.significant[e];
      row["direction"][name] = std::string(to_string(it->second.direction[e]));
    }
    table["contexts"].push_back(std::move(row));
  }
  return table;
}

nlohmann::json run_pipeline(const RunOptions& options,
                            const PipelinePaths& paths) {
  const auto& config = options.config;
  if (config.focal_hashtags.empty()) {
    throw std::runtime_error("no focal hashtags configured");
  }
  if (config.trials < 1 || config.negation_window < 1) {
    throw std::runtime_error("trials and negation window must be >= 1");
  }

  const Stemmer& stemmer = italian_stemmer();
  std::vector<std::string> warnings;

  // Inputs
  PipelineConfig effective = config;
  effective.stopwords = load_wordlist(paths.stopwords);
  auto lexicon = load_emotion_lexicon(paths.emotions, stemmer, &warnings);
  auto norms = load_affect_norms(paths.norms, stemmer, &warnings);
  auto antonyms = load_antonym_lexicon(paths.antonyms, &warnings);
  for (auto& w : antonym_polarity_warnings(antonyms, lexicon)) {
    warnings.push_back(std::move(w));
  }

  LoadReport load_report;
  const auto records = load_corpus(paths.corpus, effective, load_report);
  if (records.empty()) {
    throw std::runtime_error("corpus is empty after filtering: " +
                             paths.corpus);
  }
  for (auto& w : load_report.warnings) warnings.push_back(std::move(w));

  std::vector<ProcessedTweet> tweets;
  tweets.reserve(records.size());
  for (const auto& record : records) {
    tweets.push_back(preprocess(record, effective, stemmer));
  }

  const fs::path out_dir(paths.out_dir);
  fs::create_directories(out_dir);

  nlohmann::json report;
  report["schema_version"] = kReportSchemaVersion;
  report["config"] = {
      {"language", effective.language},
      {"seed", effective.seed},
      {"trials", effective.trials},
      {"negation_window", effective.negation_window},
      {"entropy_mode", to_string(options.entropy_mode)},
      {"grid", options.grid},
      {"clusters", options.clusters},
      {"focal_hashtags", effective.focal_hashtags},
      {"corpus", paths.corpus},
      {"stopwords", paths.stopwords},
      {"emotions", paths.emotions},
      {"norms", paths.norms},
      {"antonyms", paths.antonyms},
  };
  report["corpus"] = {
      {"lines", load_report.lines},
      {"kept", load_report.kept},
      {"malformed", load_report.malformed},
      {"duplicate_text", load_report.duplicate_text},
      {"duplicate_id", load_report.duplicate_id},
      {"language_dropped", load_report.language_dropped},
  };

  std::size_t antonym_misses = 0;

  for (const auto& focal : config.focal_hashtags) {
    std::vector<ProcessedTweet> subcorpus;
    for (const auto& tweet : tweets) {
      if (tweet.hashtags.contains(focal)) subcorpus.push_back(tweet);
    }
    nlohmann::json entry;
    entry["tweets"] = subcorpus.size();
    if (subcorpus.empty()) {
      warnings.push_back("focal hashtag matches no tweet: " + focal);
      report["focal"][focal] = std::move(entry);
      continue;
    }

    const fs::path tag_dir = out_dir / sanitize_tag(focal);
    fs::create_directories(tag_dir);

    // Hashtag layer
    const auto hnet = build_hashtag_network(subcorpus);
    const auto h_lcc = largest_component(hnet);
    entry["hashtag_network"] =
        network_stats(hnet, h_lcc, mean_local_clustering(h_lcc),
                      mean_distance(h_lcc));
    export_edge_list(tag_dir / "hashtag_edges.tsv", hnet);

    const auto h_metrics =
        compute_node_metrics(h_lcc, options.entropy_mode, options.threads);
    export_metrics_table(tag_dir / "hashtag_metrics.tsv", h_lcc, h_metrics);

    // The report keeps the head of each ranking; the full table is in the
    // metrics export.
    constexpr std::size_t kRankingLimit = 50;
    const std::set<std::string> exclude{focal};
    entry["closeness_ranking"] = nlohmann::json::array();
    for (const auto& [node, value] : rank_by_closeness(h_lcc, exclude)) {
      if (entry["closeness_ranking"].size() >= kRankingLimit) break;
      entry["closeness_ranking"].push_back({node, value});
    }
    entry["combined_ranking"] = nlohmann::json::array();
    for (const auto& ranked :
         rank_combined(h_lcc, exclude, options.entropy_mode)) {
      if (entry["combined_ranking"].size() >= kRankingLimit) break;
      entry["combined_ranking"].push_back(
          {ranked.node, ranked.closeness, ranked.distance_entropy});
    }

    if (options.clusters >= 2 && h_lcc.node_count() >= options.clusters) {
      entry["spectral_clusters"] = spectral_clusters(
          h_lcc, options.clusters, derive_seed(config.seed, "spectral:" + focal));
    }

    // Hashtag-level emotional profile
    auto h_profile = profile_hashtag_network(
        h_lcc, lexicon, norms, stemmer, config.trials,
        derive_seed(config.seed, "hashtag:" + focal), options.grid);
    for (auto& w : h_profile.warnings) warnings.push_back(std::move(w));
    entry["hashtag_profile"] =
        profile_json(h_profile.profile, h_profile.null, h_profile.ztest);
    entry["hashtag_profile"]["segmentation_fallbacks"] =
        h_profile.segmentation_fallbacks;
    entry["hashtag_circumplex"] = circumplex_json(h_profile.circumplex);

    // Word layer over the tweets carrying the focal hashtag. Negation
    // targets do not alter the network; they intervene in the bag-of-words
    // context profiles below.
    const auto wnet = build_word_network(subcorpus);
    const auto w_lcc = largest_component(wnet);
    const auto w_metrics =
        compute_node_metrics(w_lcc, options.entropy_mode, options.threads);
    entry["word_network"] = network_stats(
        wnet, w_lcc, mean_local_clustering(w_lcc), mean_distance(w_lcc));
    export_edge_list(tag_dir / "word_edges.tsv", wnet);
    export_metrics_table(tag_dir / "word_metrics.tsv", w_lcc, w_metrics);

    auto w_profile = profile_word_network(
        w_lcc, w_metrics, lexicon, norms, config.trials,
        derive_seed(config.seed, "word:" + focal), options.grid);
    for (auto& w : w_profile.warnings) warnings.push_back(std::move(w));
    entry["word_profile"] =
        profile_json(w_profile.profile, w_profile.null, w_profile.ztest);
    entry["word_profile"]["median_closeness"] = w_profile.median_closeness;
    entry["word_circumplex"] = circumplex_json(w_profile.circumplex);
    export_word_clouds(tag_dir, w_profile);

    report["focal"][focal] = std::move(entry);
  }

  // Anchor-in-context analysis: the first focal hashtag profiled within the
  // discourse of each remaining one.
  if (config.focal_hashtags.size() >= 2) {
    const std::string& anchor = config.focal_hashtags.front();
    std::vector<std::string> contexts(config.focal_hashtags.begin() + 1,
                                      config.focal_hashtags.end());
    std::map<std::string, ZTestResult> by_context;
    nlohmann::json context_profiles;
    for (const auto& context : contexts) {
      // Bag-of-words over the tweets carrying both hashtags, negated stems
      // swapped for their antonym's stem before evaluation.
      std::vector<std::string> stems;
      std::vector<ProcessedTweet> combo_tweets;
      for (const auto& tweet : tweets) {
        if (!tweet.hashtags.contains(anchor) ||
            !tweet.hashtags.contains(context))
          continue;
        combo_tweets.push_back(tweet);
        auto tweet_stems =
            substitute_negated(tweet, antonyms, stemmer, &antonym_misses);
        stems.insert(stems.end(),
                     std::make_move_iterator(tweet_stems.begin()),
                     std::make_move_iterator(tweet_stems.end()));
      }
      if (combo_tweets.empty()) continue;

      const auto combo_net = build_word_network(combo_tweets);
      const fs::path ctx_dir =
          out_dir / ("context_" + sanitize_tag(anchor) + "+" +
                     sanitize_tag(context));
      fs::create_directories(ctx_dir);
      export_edge_list(ctx_dir / "word_edges.tsv", combo_net);

      std::size_t covered = 0;
      {
        const std::set<std::string> distinct(stems.begin(), stems.end());
        for (const auto& s : distinct) {
          if (lexicon.stem_entries.contains(s)) ++covered;
        }
      }
      auto profile = emotion_profile(stems, lexicon,
                                     std::max<std::size_t>(1, covered));
      auto null = null_model(
          profile.m, lexicon, config.trials,
          derive_seed(config.seed, "context:" + anchor + "+" + context));
      auto ztest = z_test(profile, null);
      context_profiles[context] = profile_json(profile, null, ztest);
      context_profiles[context]["word_network"] = {
          {"nodes", combo_net.node_count()}, {"edges", combo_net.edge_count()}};
      context_profiles[context]["circumplex"] =
          circumplex_json(circumplex_density(stems, norms, options.grid));
      by_context[context] = ztest;
    }
    report["contexts"] = compare_contexts(anchor, contexts, by_context,
                                          warnings);
    report["contexts"]["profiles"] = std::move(context_profiles);

    // Long-format comparison table for downstream diffing.
    std::ostringstream os;
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
      for (const auto& context : contexts) {
        const auto it = by_context.find(context);
        if (it == by_context.end()) continue;
        os << kEmotionNames[e] << '\t' << context << '\t'
           << format_double(it->second.z[e]) << '\t'
           << (it->second.significant[e] ? 1 : 0) << '\t'
           << to_string(it->second.direction[e]) << '\n';
      }
    }
    write_text_file(out_dir / "comparison.tsv", os.str());
  }

  report["coverage"] = {{"antonym_misses", antonym_misses}};
  report["warnings"] = warnings;

  write_text_file(out_dir / "report.json", report.dump(2) + "\n");
  return report;
}

}  // namespace mercurial
