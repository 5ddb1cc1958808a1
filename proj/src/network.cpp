#include "mercurial/network.hpp"

#include <algorithm>

namespace mercurial {

std::optional<NodeId> Network::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Network::has_edge(NodeId a, NodeId b) const {
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

void NetworkBuilder::add_node(std::string_view name) {
  nodes_.insert(std::string(name));
}

void NetworkBuilder::add_edge(std::string_view a, std::string_view b) {
  add_node(a);
  add_node(b);
  if (a == b) return;
  std::string first(a);
  std::string second(b);
  if (second < first) std::swap(first, second);
  ++pairs_[{std::move(first), std::move(second)}];
}

Network NetworkBuilder::build() const {
  Network net;
  net.names_.assign(nodes_.begin(), nodes_.end());
  net.index_.reserve(net.names_.size());
  for (NodeId i = 0; i < net.names_.size(); ++i) net.index_[net.names_[i]] = i;
  net.adj_.resize(net.names_.size());
  net.edges_.reserve(pairs_.size());
  for (const auto& [pair, count] : pairs_) {
    const NodeId a = net.index_.at(pair.first);
    const NodeId b = net.index_.at(pair.second);
    net.adj_[a].push_back(b);
    net.adj_[b].push_back(a);
    net.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (auto& nb : net.adj_) std::sort(nb.begin(), nb.end());
  std::sort(net.edges_.begin(), net.edges_.end());
  net.pair_counts_ = pairs_;
  return net;
}

void write_edge_list(const Network& net, std::ostream& out) {
  // Node ids follow name order, so the id-sorted edge list is already the
  // lexicographically sorted line order.
  for (const auto& [a, b] : net.edges()) {
    out << net.name(a) << '\t' << net.name(b) << '\n';
  }
}

}  // namespace mercurial
