#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "mercurial/profiling.hpp"
#include "mercurial/rng.hpp"
#include "mercurial/stats.hpp"
#include "fixtures.hpp"

using namespace mercurial;

namespace {

// Small emotion lexicon used across these tests.
EmotionLexicon toy_lexicon() {
  fixtures::TempDir dir("toy_lex");
  const auto path = dir.write("nrc.tsv",
                              "paura\tfear\t1\n"
                              "terrore\tfear\t1\n"
                              "fiducia\ttrust\t1\n"
                              "speranza\ttrust\t1\n"
                              "speranza\tanticipation\t1\n"
                              "gioia\tjoy\t1\n"
                              "rabbia\tanger\t1\n"
                              "neutro\tjoy\t0\n");
  return load_emotion_lexicon(path, italian_stemmer());
}

AffectNorms toy_norms() {
  fixtures::TempDir dir("toy_norms");
  const auto path = dir.write("norms.tsv",
                              "paura\t2.0\t8.0\n"
                              "fiducia\t8.0\t4.0\n"
                              "neutro\t5.0\t5.0\n");
  return load_affect_norms(path, italian_stemmer());
}

AntonymLexicon toy_antonyms() {
  fixtures::TempDir dir("toy_ant");
  const auto path = dir.write("ant.tsv",
                              "pace\tguerra\n"
                              "paura\tfiducia\n"
                              "fiducia\tpaura\n");
  return load_antonym_lexicon(path);
}

std::size_t index_of(const char* emotion) { return *emotion_index(emotion); }

}  // namespace

TEST_CASE("substitute_negated swaps the stem of a mapped antonym") {
  PipelineConfig config;
  TweetRecord record{"t1", "non pace adesso", "it"};
  const auto tweet = preprocess(record, config, italian_stemmer());
  REQUIRE(tweet.negation_targets.size() >= 1);

  const auto stems = substitute_negated(tweet, toy_antonyms(),
                                        italian_stemmer());
  // "pace" -> antonym "guerra" -> stem "guerr"; "adesso" targeted but unmapped
  CHECK(std::count(stems.begin(), stems.end(), "guerr") == 1);
  CHECK(std::count(stems.begin(), stems.end(), "pac") == 0);
}

TEST_CASE("substitute_negated without targets is the identity") {
  PipelineConfig config;
  TweetRecord record{"t1", "pace adesso", "it"};
  const auto tweet = preprocess(record, config, italian_stemmer());
  const auto stems = substitute_negated(tweet, toy_antonyms(),
                                        italian_stemmer());
  CHECK(stems == std::vector<std::string>{"pac", "adess"});
}

TEST_CASE("substitute_negated counts unmapped targets as misses") {
  PipelineConfig config;
  TweetRecord record{"t1", "non altrove", "it"};
  const auto tweet = preprocess(record, config, italian_stemmer());
  std::size_t misses = 0;
  const auto stems = substitute_negated(tweet, toy_antonyms(),
                                        italian_stemmer(), &misses);
  CHECK(misses == 1);
  CHECK(stems == std::vector<std::string>{"altrov"});
}

TEST_CASE("emotion_profile of the empty multiset") {
  const auto profile = emotion_profile({}, toy_lexicon(), 1);
  CHECK(profile.m == 0);
  for (const auto r : profile.richness) CHECK(r == 0);
}

TEST_CASE("emotion_profile counts a covered stem once per emotion") {
  const auto profile = emotion_profile({"paur"}, toy_lexicon(), 1);
  CHECK(profile.m == 1);
  CHECK(profile.richness[index_of("fear")] == 1);
  CHECK(profile.richness[index_of("trust")] == 0);
}

TEST_CASE("emotion_profile on an enumerated fixture") {
  // stems: paur(fear), terror(fear), fiduc(trust), sper(trust+anticip),
  // gio(joy), rabb(anger); neutro covered but emotionless; duplicates are
  // type-level.
  const std::vector<std::string> stems{"paur",  "terror", "fiduc",
                                       "sper",  "gio",    "rabb",
                                       "neutr", "paur",   "sconosciuto"};
  const auto profile = emotion_profile(stems, toy_lexicon(), 10);
  CHECK(profile.m == 7);
  CHECK(profile.distinct == 8);
  CHECK(profile.richness[index_of("fear")] == 2);
  CHECK(profile.richness[index_of("trust")] == 2);
  CHECK(profile.richness[index_of("anticipation")] == 1);
  CHECK(profile.richness[index_of("joy")] == 1);
  CHECK(profile.richness[index_of("anger")] == 1);
  CHECK(profile.richness[index_of("sadness")] == 0);
  CHECK(profile.normalized[index_of("fear")] == 0.2);
  for (const double v : profile.normalized) {  // total_units >= m here
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("null_model is reproducible for a fixed seed") {
  const auto lex = toy_lexicon();
  const auto a = null_model(3, lex, 200, 42);
  const auto b = null_model(3, lex, 200, 42);
  CHECK(a.r_star == b.r_star);
  CHECK(a.sigma_star == b.sigma_star);
  CHECK(a.ks_pass == b.ks_pass);
}

TEST_CASE("null_model with m equal to the vocabulary is exhaustive") {
  const auto lex = toy_lexicon();
  const auto null = null_model(lex.vocabulary_size(), lex, 50, 9);
  // every sample is the whole lexicon: zero variance, richness = totals
  CHECK(null.sigma_star[index_of("fear")] == 0.0);
  CHECK(null.r_star[index_of("fear")] == 2.0);
  CHECK(null.r_star[index_of("trust")] == 2.0);
  CHECK(null.r_star[index_of("joy")] == 1.0);
}

TEST_CASE("null_model rejects m beyond the vocabulary") {
  const auto lex = toy_lexicon();
  CHECK_THROWS_AS(null_model(lex.vocabulary_size() + 1, lex, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("null_model moments match the exact enumeration oracle") {
  // 10-word lexicon, m = 4: enumerate all C(10,4) = 210 samples exactly.
  fixtures::TempDir dir("exact_lex");
  std::string rows;
  const std::vector<std::pair<const char*, const char*>> words{
      {"w0", "fear"},  {"w1", "fear"},    {"w2", "trust"}, {"w3", "trust"},
      {"w4", "trust"}, {"w5", "joy"},     {"w6", "anger"}, {"w7", "sadness"},
      {"w8", "fear"},  {"w9", "surprise"}};
  for (const auto& [w, e] : words) {
    rows += std::string(w) + "\t" + e + "\t1\n";
  }
  // one word carries a second emotion
  rows += "w5\tanticipation\t1\n";
  const auto path = dir.write("nrc.tsv", rows);
  const auto lex = load_emotion_lexicon(path, italian_stemmer());
  REQUIRE(lex.vocabulary_size() == 10);

  // oracle: exact mean and sd of per-emotion richness over all 4-subsets
  std::vector<EmotionMask> masks;
  for (const auto& [word, mask] : lex.entries) masks.push_back(mask);
  std::array<double, kEmotionCount> sum{};
  std::array<double, kEmotionCount> sum_sq{};
  int count = 0;
  oracle::for_each_combination(10, 4, [&](const std::vector<int>& idx) {
    ++count;
    std::array<int, kEmotionCount> richness{};
    for (const int i : idx) {
      for (std::size_t e = 0; e < kEmotionCount; ++e) {
        if (masks[i] & (1u << e)) ++richness[e];
      }
    }
    for (std::size_t e = 0; e < kEmotionCount; ++e) {
      sum[e] += richness[e];
      sum_sq[e] += static_cast<double>(richness[e]) * richness[e];
    }
  });
  REQUIRE(count == 210);

  const int trials = 4000;
  const auto null = null_model(4, lex, trials, 2024);
  for (std::size_t e = 0; e < kEmotionCount; ++e) {
    const double mean = sum[e] / count;
    const double var = sum_sq[e] / count - mean * mean;
    const double sd = std::sqrt(std::max(0.0, var));
    const double mean_se = sd / std::sqrt(static_cast<double>(trials));
    CHECK(std::abs(null.r_star[e] - mean) <= 3.0 * mean_se + 1e-12);
    if (sd > 0.0) {
      const double sd_se = sd / std::sqrt(2.0 * (trials - 1.0));
      CHECK(std::abs(null.sigma_star[e] - sd) <= 3.0 * sd_se);
    }
  }
}

TEST_CASE("z_test arithmetic and classification") {
  EmotionProfile profile;
  profile.m = 20;
  NullModel null;
  null.m = 20;

  const auto trust = index_of("trust");
  profile.richness[trust] = 16;
  null.r_star[trust] = 10.0;
  null.sigma_star[trust] = 2.0;

  const auto fear = index_of("fear");
  profile.richness[fear] = 5;
  null.r_star[fear] = 5.0;
  null.sigma_star[fear] = 1.5;

  const auto result = z_test(profile, null);
  CHECK(result.z[trust] == 3.0);
  CHECK(result.significant[trust]);
  CHECK(result.direction[trust] == Direction::above);
  CHECK(result.z[fear] == 0.0);
  CHECK(!result.significant[fear]);
  CHECK(result.direction[fear] == Direction::compatible);
}

TEST_CASE("z_test reference thresholds: 2.89 flags, 1.69 does not") {
  EmotionProfile profile;
  profile.m = 50;
  NullModel null;
  null.m = 50;
  const auto trust = index_of("trust");

  null.r_star[trust] = 10.0;
  null.sigma_star[trust] = 1.0;
  profile.richness[trust] = 10;

  auto r = z_test(profile, null);
  CHECK(!r.significant[trust]);

  // z = 2.89 > 1.96 -> significant, above
  null.r_star[trust] = 10.11;
  profile.richness[trust] = 13;
  r = z_test(profile, null);
  CHECK(r.z[trust] == doctest::Approx(2.89));
  CHECK(r.significant[trust]);
  CHECK(r.direction[trust] == Direction::above);

  // z = 1.69 < 1.96 -> compatible
  null.r_star[trust] = 11.31;
  r = z_test(profile, null);
  CHECK(r.z[trust] == doctest::Approx(1.69));
  CHECK(!r.significant[trust]);
}

TEST_CASE("z_test degenerate sigma uses sentinels") {
  EmotionProfile profile;
  profile.m = 5;
  NullModel null;
  null.m = 5;
  const auto joy = index_of("joy");
  null.r_star[joy] = 2.0;
  profile.richness[joy] = 4;  // sigma = 0, r != r*
  const auto result = z_test(profile, null);
  CHECK(std::isinf(result.z[joy]));
  CHECK(result.z[joy] > 0);
  CHECK(result.significant[joy]);
  CHECK(result.direction[joy] == Direction::above);
}

TEST_CASE("z_test rejects mismatched m") {
  EmotionProfile profile;
  profile.m = 3;
  NullModel null;
  null.m = 4;
  CHECK_THROWS_AS(z_test(profile, null), std::invalid_argument);
}

TEST_CASE("circumplex density bins rescaled stems") {
  const auto norms = toy_norms();
  const auto density = circumplex_density({"neutr"}, norms, 4);
  CHECK(density.covered_words == 1);
  // (5,5) -> (0,0) -> cell (2,2) of a 4x4 grid
  CHECK(density.cells[2 * 4 + 2] == 1);
  const auto total = std::accumulate(density.cells.begin(),
                                     density.cells.end(), 0u);
  CHECK(total == density.covered_words);
}

TEST_CASE("circumplex corners land in corner cells") {
  fixtures::TempDir dir("corner_norms");
  const auto path = dir.write("norms.tsv",
                              "aa\t1\t1\n"
                              "bb\t1\t9\n"
                              "cc\t9\t1\n"
                              "dd\t9\t9\n");
  const auto norms = load_affect_norms(path, italian_stemmer());
  const auto density = circumplex_density({"aa", "bb", "cc", "dd"}, norms, 8);
  CHECK(density.cells[0 * 8 + 0] == 1);
  CHECK(density.cells[7 * 8 + 0] == 1);
  CHECK(density.cells[0 * 8 + 7] == 1);
  CHECK(density.cells[7 * 8 + 7] == 1);
  CHECK(density.covered_words == 4);
}

TEST_CASE("neutrality range of evenly spread norms is the middle half") {
  fixtures::TempDir dir("uniform_norms");
  std::string rows;
  for (int i = 0; i < 9; ++i) {
    const auto v = std::to_string(1 + i);
    rows += "w" + std::to_string(i) + "\t" + v + "\t" + v + "\n";
  }
  const auto norms = load_affect_norms(dir.write("norms.tsv", rows),
                                       italian_stemmer());
  const auto density = circumplex_density({}, norms, 4);
  CHECK(density.valence_low == -0.5);
  CHECK(density.valence_high == 0.5);
  CHECK(density.arousal_low == -0.5);
  CHECK(density.arousal_high == 0.5);
}

TEST_CASE("segment_hashtag greedy longest match with fallback") {
  const std::set<std::string> vocab{"andra", "tutto", "bene", "futuro",
                                    "andratutto"};
  CHECK(segment_hashtag("andratuttobene", vocab) ==
        std::vector<std::string>{"andratutto", "bene"});
  CHECK(segment_hashtag("futuro", vocab) ==
        std::vector<std::string>{"futuro"});
  // unknown middle chunk: fall back to the whole string
  CHECK(segment_hashtag("andraxyzbene", vocab) ==
        std::vector<std::string>{"andraxyzbene"});
}

TEST_CASE("profile_hashtag_network pools segmented hashtag words") {
  // network of one hashtag spelling out three lexicon words
  NetworkBuilder builder;
  builder.add_node("fiduciasperanza");
  builder.add_node("paura");
  builder.add_edge("fiduciasperanza", "paura");
  const auto net = builder.build();

  const auto lex = toy_lexicon();
  const auto norms = toy_norms();
  const auto result = profile_hashtag_network(net, lex, norms,
                                              italian_stemmer(), 100, 7, 8);
  CHECK(result.profile.total_units == 2);
  CHECK(result.profile.richness[index_of("trust")] == 2);  // fiduc, speranz
  CHECK(result.profile.richness[index_of("fear")] == 1);   // paur
  CHECK(result.profile.m == 3);
}

TEST_CASE("profile_hashtag_network on an empty network warns") {
  const auto result = profile_hashtag_network(Network{}, toy_lexicon(),
                                              toy_norms(), italian_stemmer(),
                                              10, 7, 8);
  CHECK(result.profile.m == 0);
  REQUIRE(!result.warnings.empty());
}

TEST_CASE("profile_word_network keeps stems strictly above the median") {
  // P5 path over lexicon stems: closeness 0.5, 5/7, 5/6, 5/7, 0.5 and the
  // median is 5/7, so only the middle node qualifies.
  NetworkBuilder builder;
  builder.add_edge("gio", "paur");
  builder.add_edge("paur", "fiduc");
  builder.add_edge("fiduc", "terror");
  builder.add_edge("terror", "rabb");
  const auto net = builder.build();
  const auto metrics = compute_node_metrics(net);

  const auto result = profile_word_network(net, metrics, toy_lexicon(),
                                           toy_norms(), 100, 3, 8);
  CHECK(result.median_closeness == doctest::Approx(5.0 / 7.0));
  CHECK(result.profile.m == 1);
  CHECK(result.profile.richness[index_of("trust")] == 1);  // fiduc only
  CHECK(result.profile.richness[index_of("fear")] == 0);
  REQUIRE(result.word_cloud[index_of("trust")].size() == 1);
  CHECK(result.word_cloud[index_of("trust")][0].stem == "fiduc");
  CHECK(result.word_cloud[index_of("trust")][0].closeness ==
        doctest::Approx(5.0 / 6.0));
}

TEST_CASE("profile_word_network with all-equal closeness selects nothing") {
  // 4-cycle: every node has the same closeness
  NetworkBuilder builder;
  builder.add_edge("paur", "fiduc");
  builder.add_edge("fiduc", "gio");
  builder.add_edge("gio", "rabb");
  builder.add_edge("rabb", "paur");
  const auto net = builder.build();
  const auto metrics = compute_node_metrics(net);
  const auto result = profile_word_network(net, metrics, toy_lexicon(),
                                           toy_norms(), 50, 3, 8);
  CHECK(result.profile.m == 0);
  REQUIRE(!result.warnings.empty());
}

TEST_CASE("profile_word_network on a 2-node edge selects nothing") {
  NetworkBuilder builder;
  builder.add_edge("paur", "fiduc");
  const auto net = builder.build();
  const auto metrics = compute_node_metrics(net);
  const auto result = profile_word_network(net, metrics, toy_lexicon(),
                                           toy_norms(), 50, 3, 8);
  CHECK(result.profile.m == 0);
}

TEST_CASE("property: antonym flip equals the unnegated antonym profile") {
  // every emotion word negated; antonyms swap fear <-> trust pairs
  fixtures::TempDir dir("flip");
  const auto ant_path = dir.write("ant.tsv",
                                  "paura\tfiducia\n"
                                  "fiducia\tpaura\n"
                                  "terrore\tsperanza\n"
                                  "speranza\tterrore\n");
  const auto antonyms = load_antonym_lexicon(ant_path);
  const auto lex = toy_lexicon();

  PipelineConfig config;
  const std::vector<std::string> negated_texts{
      "non paura", "non terrore adesso", "non fiducia"};
  const std::vector<std::string> antonym_texts{
      "fiducia", "speranza adesso", "paura"};

  std::vector<std::string> flipped_stems;
  for (std::size_t i = 0; i < negated_texts.size(); ++i) {
    TweetRecord record{"n" + std::to_string(i), negated_texts[i], "it"};
    const auto tweet = preprocess(record, config, italian_stemmer());
    auto stems = substitute_negated(tweet, antonyms, italian_stemmer());
    flipped_stems.insert(flipped_stems.end(), stems.begin(), stems.end());
  }
  std::vector<std::string> direct_stems;
  for (std::size_t i = 0; i < antonym_texts.size(); ++i) {
    TweetRecord record{"d" + std::to_string(i), antonym_texts[i], "it"};
    const auto tweet = preprocess(record, config, italian_stemmer());
    auto stems = substitute_negated(tweet, antonyms, italian_stemmer());
    direct_stems.insert(direct_stems.end(), stems.begin(), stems.end());
  }

  const auto flipped = emotion_profile(flipped_stems, lex, 3);
  const auto direct = emotion_profile(direct_stems, lex, 3);
  CHECK(flipped.richness == direct.richness);
  CHECK(flipped.m == direct.m);
}

TEST_CASE("ks test accepts normal data and rejects far-from-normal data") {
  Rng rng(2718);
  std::vector<double> normalish;
  for (int i = 0; i < 800; ++i) {
    // sum of twelve uniforms, close enough to a normal for KS at 0.05
    double s = 0.0;
    for (int j = 0; j < 12; ++j) s += rng.unit();
    normalish.push_back(s);
  }
  CHECK(ks_normal_pass(normalish));

  std::vector<double> bimodal;
  for (int i = 0; i < 800; ++i) {
    bimodal.push_back((i % 2 == 0 ? -4.0 : 4.0) + 0.05 * rng.unit());
  }
  CHECK(!ks_normal_pass(bimodal));
}
