#include "mercurial/netbuild.hpp"

#include <algorithm>
#include <queue>

namespace mercurial {

namespace {

void add_tweet_words(NetworkBuilder& builder, const ProcessedTweet& tweet) {
  for (const auto& sentence : tweet.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      builder.add_node(sentence[i]);
      if (i + 1 < sentence.size()) builder.add_edge(sentence[i], sentence[i + 1]);
    }
  }
}

bool contains_all(const std::set<std::string>& hashtags,
                  const std::vector<std::string>& tags) {
  return std::all_of(tags.begin(), tags.end(), [&](const std::string& t) {
    return hashtags.contains(t);
  });
}

}  // namespace

HashtagNetwork build_hashtag_network(std::span<const ProcessedTweet> tweets) {
  NetworkBuilder builder;
  for (const auto& tweet : tweets) {
    for (auto a = tweet.hashtags.begin(); a != tweet.hashtags.end(); ++a) {
      builder.add_node(*a);
      for (auto b = std::next(a); b != tweet.hashtags.end(); ++b) {
        builder.add_edge(*a, *b);
      }
    }
  }
  return builder.build();
}

WordNetwork build_word_network(std::span<const ProcessedTweet> tweets) {
  NetworkBuilder builder;
  for (const auto& tweet : tweets) add_tweet_words(builder, tweet);
  return builder.build();
}

WordNetwork build_word_network_for_tags(std::span<const ProcessedTweet> tweets,
                                        const std::vector<std::string>& tags) {
  NetworkBuilder builder;
  for (const auto& tweet : tweets) {
    if (contains_all(tweet.hashtags, tags)) add_tweet_words(builder, tweet);
  }
  return builder.build();
}

MultiLayerNetwork assemble_multilayer(
    std::span<const ProcessedTweet> tweets, const HashtagNetwork& hashtag_net,
    const std::vector<std::vector<std::string>>& focal_combinations) {
  MultiLayerNetwork multi;
  multi.hashtag_layer = hashtag_net;

  // Inverted index hashtag -> tweet positions; per-edge tweet sets come from
  // intersecting two sorted posting lists instead of rescanning the corpus.
  std::map<std::string, std::vector<std::size_t>> postings;
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    for (const auto& tag : tweets[i].hashtags) postings[tag].push_back(i);
  }

  for (const auto& [a, b] : hashtag_net.edges()) {
    const auto& name_a = hashtag_net.name(a);
    const auto& name_b = hashtag_net.name(b);
    const auto pa = postings.find(name_a);
    const auto pb = postings.find(name_b);
    NetworkBuilder builder;
    if (pa != postings.end() && pb != postings.end()) {
      std::vector<std::size_t> shared;
      std::set_intersection(pa->second.begin(), pa->second.end(),
                            pb->second.begin(), pb->second.end(),
                            std::back_inserter(shared));
      for (const auto i : shared) add_tweet_words(builder, tweets[i]);
    }
    multi.edge_word_nets[{name_a, name_b}] = builder.build();
  }

  for (const auto& combo : focal_combinations) {
    auto net = build_word_network_for_tags(tweets, combo);
    if (net.empty()) {
      std::string joined;
      for (const auto& tag : combo) {
        if (!joined.empty()) joined += "+";
        joined += tag;
      }
      multi.warnings.push_back("focal combination matches no tweet: " +
                               joined);
    }
    multi.focal_word_nets[combo] = std::move(net);
  }
  return multi;
}

Network largest_component(const Network& net) {
  if (net.empty()) return {};

  std::vector<int> component(net.node_count(), -1);
  std::vector<std::vector<NodeId>> members;
  for (NodeId start = 0; start < net.node_count(); ++start) {
    if (component[start] != -1) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::queue<NodeId> queue;
    queue.push(start);
    component[start] = id;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop();
      members[id].push_back(u);
      for (const NodeId v : net.neighbors(u)) {
        if (component[v] == -1) {
          component[v] = id;
          queue.push(v);
        }
      }
    }
  }

  // Largest component; ties resolved by the smallest member name. Since ids
  // follow name order and components are discovered from ascending start
  // ids, the first component of maximal size holds the smallest node.
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].size() > members[best].size()) best = i;
  }

  NetworkBuilder builder;
  for (const NodeId u : members[best]) builder.add_node(net.name(u));
  for (const auto& [a, b] : net.edges()) {
    if (component[a] == static_cast<int>(best)) {
      builder.add_edge(net.name(a), net.name(b));
    }
  }
  return builder.build();
}

}  // namespace mercurial
