#include "bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dyncon/edge_decremental.hpp"
#include "dyncon/layout.hpp"
#include "dyncon/layout_decremental.hpp"
#include "dyncon/spanning_variant.hpp"

namespace dyncon::cli {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng, int max_attempts) {
  if (n == 0) throw std::invalid_argument("random graph needs n >= 1");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Graph g(n);
    for (VertexId u = 1; u <= static_cast<VertexId>(n); ++u) {
      for (VertexId v = u + 1; v <= static_cast<VertexId>(n); ++v) {
        if (unit_draw(rng) < p) g.add_edge(u, v);
      }
    }
    if (is_connected(g)) return g;
  }
  throw std::invalid_argument("no connected G(n, p) draw; raise p");
}

namespace {

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(rng, i)]);
}

using Clock = std::chrono::steady_clock;

template <class F>
std::int64_t timed(F&& f) {
  const auto start = Clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

}  // namespace

std::vector<BenchRow> bench_trial(const BenchConfig& config, int trial) {
  std::mt19937_64 rng(config.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial));
  const double p = config.p > 0 ? config.p
                                : std::min(1.0, 2.0 * std::log(static_cast<double>(std::max<std::size_t>(config.n, 2))) /
                                                    static_cast<double>(config.n));
  const Graph g = random_connected_graph(config.n, p, rng);

  std::vector<BenchRow> rows;
  const std::string name = algo_name(config.algo);
  // Times f, then records the H size it left behind.
  auto row = [&](std::size_t k_index, const char* op, auto&& f, const auto& engine) {
    const std::int64_t nanos = timed(f);
    rows.push_back({name, g.n(), g.m(), k_index, op, config.mask_timing ? 0 : nanos, engine.aux().live_count()});
  };

  auto random_pair = [&](const std::vector<VertexId>& pool) {
    return std::pair{pool[below(rng, pool.size())], pool[below(rng, pool.size())]};
  };
  std::vector<VertexId> all(g.n());
  std::iota(all.begin(), all.end(), 1);

  switch (config.algo) {
    case Algo::EulerTour: {
      EdgeDecremental engine(g);
      auto edges = g.edges();
      shuffle(edges, rng);
      const std::size_t k = std::min(config.k, edges.size());
      for (std::size_t i = 0; i < k; ++i) {
        const Edge e = edges[i];
        row(i + 1, "delete", [&] { engine.delete_edge(e.u, e.v); }, engine);
        auto [u, v] = random_pair(all);
        bool answer = false;
        row(i + 1, "query", [&] { answer = engine.connected(u, v); }, engine);
        static_cast<void>(answer);
      }
      break;
    }
    case Algo::Tree: {
      TreeVariantOptions options;
      options.bfs_tree = config.bfs_tree;
      TreeDecremental engine(g, options);
      auto edges = engine.tree().graph().edges();
      shuffle(edges, rng);
      const std::size_t k = std::min(config.k, edges.size());
      for (std::size_t i = 0; i < k; ++i) {
        const Edge e = edges[i];
        row(i + 1, "delete", [&] { engine.delete_edge(e.u, e.v); }, engine);
        auto [u, v] = random_pair(all);
        bool answer = false;
        row(i + 1, "query", [&] { answer = engine.connected(u, v); }, engine);
        static_cast<void>(answer);
      }
      break;
    }
    case Algo::Layout: {
      const LinearLayout layout = layout_from_path_cover(g, greedy_path_cover(g));
      LayoutDecremental engine(g, layout);
      auto order = all;
      shuffle(order, rng);
      const std::size_t k = std::min(config.k, order.size() - 1);
      std::vector<VertexId> live(order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
      std::sort(live.begin(), live.end());
      for (std::size_t i = 0; i < k; ++i) {
        const VertexId x = order[i];
        row(i + 1, "delete", [&] { engine.delete_vertex(x); }, engine);
        auto [u, v] = random_pair(live);
        bool answer = false;
        row(i + 1, "query", [&] { answer = engine.connected(u, v); }, engine);
        static_cast<void>(answer);
      }
      break;
    }
  }
  return rows;
}

void run_bench(const BenchConfig& config, std::ostream& out) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<std::vector<BenchRow>> results(static_cast<std::size_t>(config.trials));
  std::vector<std::string> errors(results.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int t = next++; t < config.trials; t = next++) {
      try {
        results[t] = bench_trial(config, t);
      } catch (const std::exception& e) {
        errors[t] = e.what();
      }
    }
  };
  const int jobs = std::clamp(config.jobs, 1, config.trials);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw std::invalid_argument(e);
  }

  out << "algo,n,m,k_index,op,nanos,h_size\n";
  for (const auto& trial : results) {
    for (const auto& r : trial) {
      out << r.algo << ',' << r.n << ',' << r.m << ',' << r.k_index << ',' << r.op << ',' << r.nanos << ','
          << r.h_size << '\n';
    }
  }
}

}  // namespace dyncon::cli
