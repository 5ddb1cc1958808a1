#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mercurial {

using NodeId = std::uint32_t;

/// Simple undirected, unweighted graph over string-named nodes. Immutable
/// once built; node ids follow the lexicographic order of node names, so a
/// network built from the same node/edge sets is identical regardless of
/// insertion order.
class Network {
 public:
  Network() = default;

  std::size_t node_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return names_.empty(); }

  const std::vector<std::string>& nodes() const { return names_; }
  const std::string& name(NodeId id) const { return names_[id]; }
  std::optional<NodeId> find(std::string_view name) const;

  const std::vector<NodeId>& neighbors(NodeId id) const { return adj_[id]; }
  std::size_t degree(NodeId id) const { return adj_[id].size(); }
  bool has_edge(NodeId a, NodeId b) const;

  /// Edges as id pairs with first < second, sorted.
  const std::vector<std::pair<NodeId, NodeId>>& edges() const {
    return edges_;
  }

  /// Raw co-occurrence pair counts recorded at build time. Diagnostics only;
  /// no metric reads them.
  const std::map<std::pair<std::string, std::string>, std::uint64_t>&
  pair_counts() const {
    return pair_counts_;
  }

 private:
  friend class NetworkBuilder;
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::map<std::pair<std::string, std::string>, std::uint64_t> pair_counts_;
};

class NetworkBuilder {
 public:
  void add_node(std::string_view name);

  /// Records one co-occurrence of a and b. Self-pairs add the node but no
  /// edge; repeated pairs bump the diagnostic count only.
  void add_edge(std::string_view a, std::string_view b);

  Network build() const;

 private:
  std::set<std::string> nodes_;
  std::map<std::pair<std::string, std::string>, std::uint64_t> pairs_;
};

/// One edge per line, `a<TAB>b` with a < b, lines sorted; bit-exact for
/// identical networks.
void write_edge_list(const Network& net, std::ostream& out);

}  // namespace mercurial
