#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mercurial/network.hpp"

namespace mercurial {

enum class EntropyMode {
  // Self-consistent form: probabilities over k = 1..M_i, normalizer log M_i.
  normalized,
  // Printed form: sum to M_i - 1 with normalizer log(M_i - 1); zero whenever
  // M_i <= 2 to avoid log 0 and log 1. Leaves the mass at k = M_i unused and
  // can exceed 1; kept for comparison.
  verbatim,
};

EntropyMode parse_entropy_mode(const std::string& name);
const char* to_string(EntropyMode mode);

/// Shortest-path distances from one node, restricted to its connected
/// component of N nodes (the node itself included in N).
struct DistanceDistribution {
  NodeId node = 0;
  std::uint32_t component_size = 1;       // N
  std::vector<std::uint32_t> distances;   // d_ij over j != i, BFS order
  std::uint32_t max_distance = 0;         // M_i, 0 for an isolated node
  std::vector<std::uint32_t> counts;      // counts[k-1] = #{j : d_ij == k}
};

DistanceDistribution distance_distribution(const Network& net, NodeId node);

/// c(i) = N / sum_j d_ij with N the component size; 0 for an isolated node.
double closeness(const DistanceDistribution& dd);

/// Shannon entropy of the distance distribution, see EntropyMode.
/// Normalized mode lies in [0, 1] and is 0 whenever M_i <= 1.
double distance_entropy(const DistanceDistribution& dd,
                        EntropyMode mode = EntropyMode::normalized);

/// Fraction of realized links among the node's neighbors; 0 when degree < 2.
double local_clustering(const Network& net, NodeId node);

struct NodeMetrics {
  NodeId node = 0;
  double closeness = 0.0;
  double distance_entropy = 0.0;
  double local_clustering = 0.0;
};

/// Per-node metrics for every node, computed in parallel. threads == 0 picks
/// the hardware count; results do not depend on the thread count.
std::vector<NodeMetrics> compute_node_metrics(
    const Network& net, EntropyMode mode = EntropyMode::normalized,
    unsigned threads = 0);

/// Descending closeness, ties lexicographic, excluded nodes omitted.
std::vector<std::pair<std::string, double>> rank_by_closeness(
    const Network& net, const std::set<std::string>& exclude = {});

struct RankedNode {
  std::string node;
  double closeness = 0.0;
  double distance_entropy = 0.0;
};

/// Rank-sum of descending-closeness rank and ascending-entropy rank, smaller
/// sums first, ties lexicographic. Selects nodes uniformly close to all
/// other nodes.
std::vector<RankedNode> rank_combined(
    const Network& net, const std::set<std::string>& exclude = {},
    EntropyMode mode = EntropyMode::normalized);

/// k-way partition from a seeded k-means over the k bottom eigenvectors of
/// the symmetric normalized Laplacian. Groups are returned with members
/// sorted and groups ordered by their smallest member; deterministic for a
/// fixed seed. Throws std::invalid_argument when k is 0 or exceeds the node
/// count.
std::vector<std::vector<std::string>> spectral_clusters(const Network& net,
                                                        std::size_t k,
                                                        std::uint64_t seed);

/// Mean shortest-path distance over connected ordered pairs.
double mean_distance(const Network& net);

/// Mean local clustering coefficient over all nodes.
double mean_local_clustering(const Network& net);

}  // namespace mercurial
