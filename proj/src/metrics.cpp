#include "mercurial/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "mercurial/rng.hpp"

namespace mercurial {

EntropyMode parse_entropy_mode(const std::string& name) {
  if (name == "normalized") return EntropyMode::normalized;
  if (name == "verbatim") return EntropyMode::verbatim;
  throw std::invalid_argument("unknown entropy mode: " + name);
}

const char* to_string(EntropyMode mode) {
  return mode == EntropyMode::normalized ? "normalized" : "verbatim";
}

DistanceDistribution distance_distribution(const Network& net, NodeId node) {
  DistanceDistribution dd;
  dd.node = node;

  std::vector<std::uint32_t> dist(net.node_count(), UINT32_MAX);
  dist[node] = 0;
  std::queue<NodeId> queue;
  queue.push(node);
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop();
    for (const NodeId v : net.neighbors(u)) {
      if (dist[v] == UINT32_MAX) {
        dist[v] = dist[u] + 1;
        dd.distances.push_back(dist[v]);
        queue.push(v);
      }
    }
  }

  dd.component_size = static_cast<std::uint32_t>(dd.distances.size()) + 1;
  for (const auto d : dd.distances) dd.max_distance = std::max(dd.max_distance, d);
  dd.counts.assign(dd.max_distance, 0);
  for (const auto d : dd.distances) ++dd.counts[d - 1];
  return dd;
}

double closeness(const DistanceDistribution& dd) {
  const std::uint64_t sum =
      std::accumulate(dd.distances.begin(), dd.distances.end(),
                      std::uint64_t{0});
  if (sum == 0) return 0.0;
  return static_cast<double>(dd.component_size) / static_cast<double>(sum);
}

double distance_entropy(const DistanceDistribution& dd, EntropyMode mode) {
  const std::uint32_t m = dd.max_distance;
  const double n = static_cast<double>(dd.distances.size());

  if (mode == EntropyMode::normalized) {
    if (m <= 1) return 0.0;
    // -(1/log M) sum p_k log p_k rewritten over counts as
    // (log n - (1/n) sum c_k log c_k) / log M; exact 1.0 for uniform
    // unit counts.
    double count_term = 0.0;
    for (const auto c : dd.counts) {
      if (c > 1) count_term += static_cast<double>(c) * std::log(c);
    }
    const double h =
        (std::log(n) - count_term / n) / std::log(static_cast<double>(m));
    return std::clamp(h, 0.0, 1.0);  // shave off rounding spill
  }

  if (m <= 2) return 0.0;
  double h = 0.0;
  for (std::uint32_t k = 1; k <= m - 1; ++k) {
    const double p = static_cast<double>(dd.counts[k - 1]) / n;
    if (p > 0.0) h -= p * std::log(p);
  }
  return h / std::log(static_cast<double>(m - 1));
}

double local_clustering(const Network& net, NodeId node) {
  const auto& nb = net.neighbors(node);
  const std::size_t deg = nb.size();
  if (deg < 2) return 0.0;
  std::size_t links = 0;
  for (std::size_t i = 0; i < deg; ++i) {
    for (std::size_t j = i + 1; j < deg; ++j) {
      if (net.has_edge(nb[i], nb[j])) ++links;
    }
  }
  return static_cast<double>(links) /
         static_cast<double>(deg * (deg - 1) / 2);
}

namespace {

// Chunked node-range parallelism; results land in pre-sized slots, so the
// outcome is identical for any thread count.
template <typename Fn>
void parallel_over_nodes(std::size_t count, unsigned threads, Fn&& fn) {
  if (count == 0) return;
  unsigned n_threads =
      threads == 0 ? std::thread::hardware_concurrency() : threads;
  n_threads = std::max(1u, std::min<unsigned>(n_threads, count));
  const auto total = static_cast<NodeId>(count);
  if (n_threads == 1) {
    fn(NodeId{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  const NodeId chunk = (total + n_threads - 1) / n_threads;
  for (unsigned t = 0; t < n_threads; ++t) {
    const NodeId begin = t * chunk;
    if (begin >= total) break;
    pool.emplace_back(fn, begin, std::min<NodeId>(begin + chunk, total));
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<NodeMetrics> compute_node_metrics(const Network& net,
                                              EntropyMode mode,
                                              unsigned threads) {
  std::vector<NodeMetrics> metrics(net.node_count());
  parallel_over_nodes(net.node_count(), threads, [&](NodeId begin, NodeId end) {
    for (NodeId u = begin; u < end; ++u) {
      const auto dd = distance_distribution(net, u);
      metrics[u] = {u, closeness(dd), distance_entropy(dd, mode),
                    local_clustering(net, u)};
    }
  });
  return metrics;
}

std::vector<std::pair<std::string, double>> rank_by_closeness(
    const Network& net, const std::set<std::string>& exclude) {
  std::vector<std::pair<std::string, double>> ranked;
  for (NodeId u = 0; u < net.node_count(); ++u) {
    if (exclude.contains(net.name(u))) continue;
    ranked.emplace_back(net.name(u), closeness(distance_distribution(net, u)));
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return ranked;
}

std::vector<RankedNode> rank_combined(const Network& net,
                                      const std::set<std::string>& exclude,
                                      EntropyMode mode) {
  struct Entry {
    std::string name;
    double closeness;
    double entropy;
    std::size_t rank_sum = 0;
  };
  std::vector<Entry> entries;
  for (NodeId u = 0; u < net.node_count(); ++u) {
    if (exclude.contains(net.name(u))) continue;
    const auto dd = distance_distribution(net, u);
    entries.push_back(
        {net.name(u), closeness(dd), distance_entropy(dd, mode)});
  }

  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);

  // descending closeness rank
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (entries[a].closeness != entries[b].closeness)
      return entries[a].closeness > entries[b].closeness;
    return entries[a].name < entries[b].name;
  });
  for (std::size_t r = 0; r < order.size(); ++r)
    entries[order[r]].rank_sum += r + 1;

  // ascending entropy rank
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (entries[a].entropy != entries[b].entropy)
      return entries[a].entropy < entries[b].entropy;
    return entries[a].name < entries[b].name;
  });
  for (std::size_t r = 0; r < order.size(); ++r)
    entries[order[r]].rank_sum += r + 1;

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.rank_sum != b.rank_sum) return a.rank_sum < b.rank_sum;
    return a.name < b.name;
  });

  std::vector<RankedNode> ranked;
  ranked.reserve(entries.size());
  for (auto& e : entries)
    ranked.push_back({std::move(e.name), e.closeness, e.entropy});
  return ranked;
}

namespace {

// Seeded k-means on embedding rows; ties in assignment go to the lowest
// centroid index, so the outcome is deterministic.
std::vector<int> kmeans(const Eigen::MatrixXd& points, std::size_t k,
                        std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(points.rows());
  Rng rng(seed);

  // k-means++ seeding
  Eigen::MatrixXd centroids(k, points.cols());
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  std::size_t first = static_cast<std::size_t>(rng.below(n));
  centroids.row(0) = points.row(static_cast<Eigen::Index>(first));
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d =
          (points.row(static_cast<Eigen::Index>(i)) - centroids.row(c - 1))
              .squaredNorm();
      d2[i] = std::min(d2[i], d);
      total += d2[i];
    }
    std::size_t pick = 0;
    if (total > 0.0) {
      const double target = rng.unit() * total;
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc >= target) {
          pick = i;
          break;
        }
      }
    } else {
      pick = static_cast<std::size_t>(rng.below(n));
    }
    centroids.row(static_cast<Eigen::Index>(c)) =
        points.row(static_cast<Eigen::Index>(pick));
  }

  std::vector<int> assign(n, 0);
  for (int iter = 0; iter < 200; ++iter) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < k; ++c) {
        const double d = (points.row(static_cast<Eigen::Index>(i)) -
                          centroids.row(static_cast<Eigen::Index>(c)))
                             .squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = static_cast<int>(c);
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        moved = true;
      }
    }
    if (!moved && iter > 0) break;

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      sums.row(assign[i]) += points.row(static_cast<Eigen::Index>(i));
      ++counts[static_cast<std::size_t>(assign[i])];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        centroids.row(static_cast<Eigen::Index>(c)) =
            sums.row(static_cast<Eigen::Index>(c)) /
            static_cast<double>(counts[c]);
      }
    }
  }
  return assign;
}

}  // namespace

std::vector<std::vector<std::string>> spectral_clusters(const Network& net,
                                                        std::size_t k,
                                                        std::uint64_t seed) {
  const std::size_t n = net.node_count();
  if (k == 0 || k > n) {
    throw std::invalid_argument("spectral_clusters: k must be in [1, N]");
  }
  if (k == 1) {
    std::vector<std::string> all = net.nodes();
    return {std::move(all)};
  }

  std::vector<int> assign;
  if (k == n) {
    assign.resize(n);
    std::iota(assign.begin(), assign.end(), 0);
  } else {
    // L_sym = I - D^-1/2 A D^-1/2; embed nodes by the k eigenvectors of the
    // smallest eigenvalues, rows normalized to the unit sphere.
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> inv_sqrt_deg(n, 0.0);
    for (NodeId u = 0; u < n; ++u) {
      if (net.degree(u) > 0)
        inv_sqrt_deg[u] = 1.0 / std::sqrt(static_cast<double>(net.degree(u)));
      lap(u, u) = net.degree(u) > 0 ? 1.0 : 0.0;
    }
    for (const auto& [a, b] : net.edges()) {
      const double w = inv_sqrt_deg[a] * inv_sqrt_deg[b];
      lap(a, b) = -w;
      lap(b, a) = -w;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    Eigen::MatrixXd embedding =
        solver.eigenvectors().leftCols(static_cast<Eigen::Index>(k));
    for (Eigen::Index i = 0; i < embedding.rows(); ++i) {
      const double norm = embedding.row(i).norm();
      if (norm > 0.0) embedding.row(i) /= norm;
    }
    assign = kmeans(embedding, k, seed);
  }

  std::vector<std::vector<std::string>> groups(k);
  for (NodeId u = 0; u < n; ++u) {
    groups[static_cast<std::size_t>(assign[u])].push_back(net.name(u));
  }
  groups.erase(std::remove_if(groups.begin(), groups.end(),
                              [](const auto& g) { return g.empty(); }),
               groups.end());
  for (auto& g : groups) std::sort(g.begin(), g.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

double mean_distance(const Network& net) {
  std::vector<std::uint64_t> sums(net.node_count(), 0);
  std::vector<std::uint64_t> pair_counts(net.node_count(), 0);
  parallel_over_nodes(net.node_count(), 0, [&](NodeId begin, NodeId end) {
    for (NodeId u = begin; u < end; ++u) {
      const auto dd = distance_distribution(net, u);
      sums[u] = std::accumulate(dd.distances.begin(), dd.distances.end(),
                                std::uint64_t{0});
      pair_counts[u] = dd.distances.size();
    }
  });
  const std::uint64_t sum =
      std::accumulate(sums.begin(), sums.end(), std::uint64_t{0});
  const std::uint64_t pairs =
      std::accumulate(pair_counts.begin(), pair_counts.end(), std::uint64_t{0});
  if (pairs == 0) return 0.0;
  return static_cast<double>(sum) / static_cast<double>(pairs);
}

double mean_local_clustering(const Network& net) {
  if (net.empty()) return 0.0;
  double sum = 0.0;
  for (NodeId u = 0; u < net.node_count(); ++u) sum += local_clustering(net, u);
  return sum / static_cast<double>(net.node_count());
}

}  // namespace mercurial
