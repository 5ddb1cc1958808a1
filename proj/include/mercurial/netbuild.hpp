#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mercurial/corpus.hpp"
#include "mercurial/network.hpp"

namespace mercurial {

using HashtagNetwork = Network;
using WordNetwork = Network;

/// Hashtag layer plus the word network behind each hashtag edge and each
/// focal hashtag combination. Layers share no cross-layer links.
struct MultiLayerNetwork {
  HashtagNetwork hashtag_layer;
  std::map<std::pair<std::string, std::string>, WordNetwork> edge_word_nets;
  std::map<std::vector<std::string>, WordNetwork> focal_word_nets;
  std::vector<std::string> warnings;
};

/// All unordered pairs of distinct hashtags within each tweet become edges;
/// tweets with a single hashtag contribute an isolated node.
HashtagNetwork build_hashtag_network(std::span<const ProcessedTweet> tweets);

/// Consecutive in-sentence stem pairs become edges; sentences do not chain
/// across each other.
WordNetwork build_word_network(std::span<const ProcessedTweet> tweets);

/// Word network over the tweets whose hashtag set contains every given tag.
WordNetwork build_word_network_for_tags(std::span<const ProcessedTweet> tweets,
                                        const std::vector<std::string>& tags);

/// Builds the word network behind every edge of the hashtag layer, plus one
/// per focal combination. A combination matching no tweet yields an empty
/// network and a warning.
MultiLayerNetwork assemble_multilayer(
    std::span<const ProcessedTweet> tweets, const HashtagNetwork& hashtag_net,
    const std::vector<std::vector<std::string>>& focal_combinations);

/// Subgraph induced by the largest connected node set; ties go to the
/// component holding the lexicographically smallest node.
Network largest_component(const Network& net);

}  // namespace mercurial
