#include "mercurial/profiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mercurial/rng.hpp"
#include "mercurial/stats.hpp"

namespace mercurial {

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::above:
      return "above";
    case Direction::below:
      return "below";
    default:
      return "compatible";
  }
}

std::vector<std::string> substitute_negated(const ProcessedTweet& tweet,
                                            const AntonymLexicon& antonyms,
                                            const Stemmer& stemmer,
                                            std::size_t* misses) {
  std::vector<std::string> stems;
  for (std::uint32_t s = 0; s < tweet.sentences.size(); ++s) {
    for (std::uint32_t t = 0; t < tweet.sentences[s].size(); ++t) {
      if (tweet.negation_targets.contains({s, t})) {
        if (const auto ant = antonym_of(tweet.surface[s][t], antonyms)) {
          stems.push_back(stemmer.stem(*ant));
          continue;
        }
        if (misses) ++*misses;
      }
      stems.push_back(tweet.sentences[s][t]);
    }
  }
  return stems;
}

EmotionProfile emotion_profile(const std::vector<std::string>& stems,
                               const EmotionLexicon& lexicon,
                               std::size_t total_units) {
  if (total_units == 0) throw std::invalid_argument("total_units must be >= 1");
  EmotionProfile profile;
  profile.total_units = total_units;

  const std::set<std::string> distinct(stems.begin(), stems.end());
  profile.distinct = distinct.size();
  for (const auto& stem : distinct) {
    const auto it = lexicon.stem_entries.find(stem);
    if (it == lexicon.stem_entries.end()) continue;
    ++profile.m;
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
      if (it->second & (1u << e)) ++profile.richness[e];
    }
  }
  for (std::size_t e = 0; e < kEmotionCount; ++e) {
    profile.normalized[e] = static_cast<double>(profile.richness[e]) /
                            static_cast<double>(total_units);
  }
  return profile;
}

NullModel null_model(std::size_t m, const EmotionLexicon& lexicon, int trials,
                     std::uint64_t seed) {
  if (m > lexicon.vocabulary_size()) {
    throw std::invalid_argument("null_model: m exceeds the lexicon vocabulary");
  }
  if (trials < 1) throw std::invalid_argument("null_model: trials must be >= 1");

  NullModel null;
  null.m = m;
  null.trials = trials;
  null.seed = seed;
  if (m == 0) return null;

  std::vector<EmotionMask> masks;
  masks.reserve(lexicon.vocabulary_size());
  for (const auto& [word, mask] : lexicon.entries) masks.push_back(mask);

  const auto n = static_cast<std::uint32_t>(masks.size());
  std::array<std::vector<double>, kEmotionCount> samples;
  for (auto& s : samples) s.reserve(trials);

  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto picks =
        sample_without_replacement(n, static_cast<std::uint32_t>(m), rng);
    std::array<std::uint32_t, kEmotionCount> richness{};
    for (const auto idx : picks) {
      const EmotionMask mask = masks[idx];
      for (std::size_t e = 0; e < kEmotionCount; ++e) {
        if (mask & (1u << e)) ++richness[e];
      }
    }
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
      samples[e].push_back(static_cast<double>(richness[e]));
    }
  }

  for (std::size_t e = 0; e < kEmotionCount; ++e) {
    const auto [mean, sd] = mean_sd(samples[e]);
    null.r_star[e] = mean;
    null.sigma_star[e] = sd;
    null.ks_pass[e] = ks_normal_pass(samples[e]);
  }
  return null;
}

ZTestResult z_test(const EmotionProfile& profile, const NullModel& null) {
  if (profile.m != null.m) {
    throw std::invalid_argument("z_test: profile and null model disagree on m");
  }
  ZTestResult result;
  for (std::size_t e = 0; e < kEmotionCount; ++e) {
    const double r = static_cast<double>(profile.richness[e]);
    const double delta = r - null.r_star[e];
    double z = 0.0;
    if (null.sigma_star[e] > 0.0) {
      z = delta / null.sigma_star[e];
    } else if (delta != 0.0) {
      z = delta > 0.0 ? std::numeric_limits<double>::infinity()
                      : -std::numeric_limits<double>::infinity();
    }
    result.z[e] = z;
    result.significant[e] = std::abs(z) > kSignificanceZ;
    result.direction[e] = !result.significant[e] ? Direction::compatible
                          : z > 0.0              ? Direction::above
                                                 : Direction::below;
  }
  return result;
}

namespace {

// Linear-interpolation quantile over a sorted sample.
double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0.0;
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

int grid_cell(double coord, int grid) {
  const auto cell = static_cast<int>((coord + 1.0) / 2.0 * grid);
  return std::clamp(cell, 0, grid - 1);
}

}  // namespace

CircumplexDensity circumplex_density(const std::vector<std::string>& stems,
                                     const AffectNorms& norms, int grid) {
  if (grid < 2) throw std::invalid_argument("circumplex grid must be >= 2");
  CircumplexDensity density;
  density.grid = grid;
  density.cells.assign(static_cast<std::size_t>(grid) * grid, 0);

  // Neutrality range: per-axis interquartile rectangle of the whole norms
  // vocabulary, not of the profiled stems.
  std::vector<double> valences;
  std::vector<double> arousals;
  valences.reserve(norms.entries.size());
  arousals.reserve(norms.entries.size());
  for (const auto& [word, va] : norms.entries) {
    valences.push_back(va.valence);
    arousals.push_back(va.arousal);
  }
  std::sort(valences.begin(), valences.end());
  std::sort(arousals.begin(), arousals.end());
  if (!valences.empty()) {
    density.valence_low =
        rescale_to_circumplex(quantile_sorted(valences, 0.25), 5.0).first;
    density.valence_high =
        rescale_to_circumplex(quantile_sorted(valences, 0.75), 5.0).first;
    density.arousal_low =
        rescale_to_circumplex(5.0, quantile_sorted(arousals, 0.25)).second;
    density.arousal_high =
        rescale_to_circumplex(5.0, quantile_sorted(arousals, 0.75)).second;
  }

  for (const auto& stem : stems) {
    const auto it = norms.stem_entries.find(stem);
    if (it == norms.stem_entries.end()) continue;
    const auto [x, y] = rescale_to_circumplex(it->second.valence,
                                              it->second.arousal);
    ++density.cells[static_cast<std::size_t>(grid_cell(y, grid)) * grid +
                    grid_cell(x, grid)];
    ++density.covered_words;
  }
  return density;
}

std::vector<std::string> segment_hashtag(
    std::string_view tag, const std::set<std::string>& vocabulary) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos < tag.size()) {
    std::size_t best = 0;
    for (std::size_t len = tag.size() - pos; len >= 1; --len) {
      if (vocabulary.contains(std::string(tag.substr(pos, len)))) {
        best = len;
        break;
      }
    }
    if (best == 0) return {std::string(tag)};
    words.emplace_back(tag.substr(pos, best));
    pos += best;
  }
  return words;
}

HashtagNetworkProfile profile_hashtag_network(const HashtagNetwork& net,
                                              const EmotionLexicon& lexicon,
                                              const AffectNorms& norms,
                                              const Stemmer& stemmer,
                                              int trials, std::uint64_t seed,
                                              int grid) {
  HashtagNetworkProfile result;
  if (net.empty()) {
    result.warnings.push_back("hashtag profile: empty network");
    result.profile = emotion_profile({}, lexicon, 1);
    result.circumplex = circumplex_density({}, norms, grid);
    return result;
  }

  std::set<std::string> vocabulary;
  for (const auto& [word, mask] : lexicon.entries) vocabulary.insert(word);
  for (const auto& [word, va] : norms.entries) vocabulary.insert(word);

  std::vector<std::string> stems;
  for (const auto& tag : net.nodes()) {
    const auto words = segment_hashtag(tag, vocabulary);
    if (words.size() == 1 && words[0] == tag && !vocabulary.contains(tag)) {
      ++result.segmentation_fallbacks;
    }
    for (const auto& word : words) stems.push_back(stemmer.stem(word));
  }

  result.profile = emotion_profile(stems, lexicon, net.node_count());
  result.null = null_model(result.profile.m, lexicon, trials, seed);
  result.ztest = z_test(result.profile, result.null);
  result.circumplex = circumplex_density(stems, norms, grid);
  if (result.profile.m == 0) {
    result.warnings.push_back("hashtag profile: no lexicon coverage");
  }
  return result;
}

WordNetworkProfile profile_word_network(const WordNetwork& net,
                                        const std::vector<NodeMetrics>& metrics,
                                        const EmotionLexicon& lexicon,
                                        const AffectNorms& norms, int trials,
                                        std::uint64_t seed, int grid) {
  WordNetworkProfile result;

  std::vector<double> values;
  values.reserve(metrics.size());
  for (const auto& nm : metrics) values.push_back(nm.closeness);
  std::sort(values.begin(), values.end());
  const double median =
      values.empty()
          ? 0.0
          : (values.size() % 2 == 1
                 ? values[values.size() / 2]
                 : 0.5 * (values[values.size() / 2 - 1] +
                          values[values.size() / 2]));
  result.median_closeness = median;

  std::vector<std::string> qualifying;
  std::vector<std::pair<std::string, double>> weights;
  for (const auto& nm : metrics) {
    if (nm.closeness > median) {
      qualifying.push_back(net.name(nm.node));
      weights.emplace_back(net.name(nm.node), nm.closeness);
    }
  }
  if (qualifying.empty()) {
    result.warnings.push_back(
        "word profile: no stem lies strictly above the median closeness");
  }

  // normalization base defaults to the covered-stem count
  std::size_t covered = 0;
  for (const auto& stem : qualifying) {
    if (lexicon.stem_entries.contains(stem)) ++covered;
  }
  result.profile =
      emotion_profile(qualifying, lexicon, std::max<std::size_t>(1, covered));
  result.null = null_model(result.profile.m, lexicon, trials, seed);
  result.ztest = z_test(result.profile, result.null);
  result.circumplex = circumplex_density(qualifying, norms, grid);

  std::sort(weights.begin(), weights.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  for (const auto& [stem, weight] : weights) {
    const auto it = lexicon.stem_entries.find(stem);
    if (it == lexicon.stem_entries.end()) continue;
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
      if (it->second & (1u << e)) {
        result.word_cloud[e].push_back({stem, weight});
      }
    }
  }
  return result;
}

}  // namespace mercurial
