#include "corpus.hpp"

#include <string>

namespace tautheight::testing {

namespace {

constexpr long kMaxGenus = 5;
constexpr std::size_t kMaxVertices = 8;
constexpr std::size_t kMaxEdges = 12;

int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational random_length(std::mt19937& rng) {
  return make_rational(uniform(rng, 1, 20), uniform(rng, 1, 20));
}

}  // namespace

pmg::PolarizedMetrizedGraph random_pm_graph(std::mt19937& rng) {
  for (;;) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, kMaxVertices));
    std::vector<pmg::GraphEdge> edges;
    for (std::size_t v = 1; v < n; ++v) {
      edges.push_back({static_cast<std::size_t>(uniform(rng, 0, v - 1)), v, random_length(rng)});
    }
    const bool tree = uniform(rng, 0, 2) == 0 && n > 1;
    const long room = static_cast<long>(kMaxEdges - edges.size());
    const long extra = tree ? 0 : uniform(rng, 0, static_cast<int>(std::min(kMaxGenus, room)));
    for (long k = 0; k < extra; ++k) {
      const auto u = static_cast<std::size_t>(uniform(rng, 0, n - 1));
      const auto v = static_cast<std::size_t>(uniform(rng, 0, n - 1));
      edges.push_back({u, v, random_length(rng)});
    }
    std::vector<int> valence(n, 0);
    for (const auto& e : edges) {
      ++valence[e.u];
      ++valence[e.v];
    }
    std::vector<pmg::Vertex> vertices(n);
    long genus = extra;
    for (std::size_t v = 0; v < n; ++v) {
      vertices[v].id = "v" + std::to_string(v);
      vertices[v].genus_mark = valence[v] <= 1 ? 1 : 0;
      genus += vertices[v].genus_mark;
    }
    if (genus > kMaxGenus) continue;
    const long spare = uniform(rng, 0, static_cast<int>(kMaxGenus - genus));
    for (long k = 0; k < spare; ++k) {
      ++vertices[static_cast<std::size_t>(uniform(rng, 0, n - 1))].genus_mark;
    }
    return pmg::PolarizedMetrizedGraph(std::move(vertices), std::move(edges));
  }
}

std::vector<pmg::PolarizedMetrizedGraph> random_pm_corpus(std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<pmg::PolarizedMetrizedGraph> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(random_pm_graph(rng));
  return out;
}

Rational random_interior_point(std::mt19937& rng, const Rational& length) {
  const int den = uniform(rng, 2, 9);
  return length * make_rational(uniform(rng, 1, den - 1), den);
}

}  // namespace tautheight::testing
