#include "biorder/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "biorder/errors.hpp"

namespace biorder {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

bool connected_within(const Graph& g, std::uint64_t block) {
  if (block == 0) return false;
  std::uint64_t reached = block & (~block + 1);  // lowest vertex
  std::uint64_t frontier = reached;
  while (frontier) {
    std::uint64_t next = 0;
    for (int v = 0; v < g.size(); ++v) {
      if (frontier & bit(v)) next |= g.neighbors(v) & block;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == block;
}

void restricted_growth(const Graph& g, int v, int blocks_used, std::vector<int>& assignment,
                       std::vector<Flat>& out) {
  const int n = g.size();
  if (v == n) {
    std::vector<std::uint64_t> masks(blocks_used, 0);
    for (int u = 0; u < n; ++u) masks[assignment[u]] |= bit(u);
    for (std::uint64_t m : masks) {
      if (!connected_within(g, m)) return;
    }
    std::vector<std::vector<int>> blocks(blocks_used);
    for (int u = 0; u < n; ++u) blocks[assignment[u]].push_back(u);
    out.push_back(make_flat(g, blocks));
    return;
  }
  for (int b = 0; b <= blocks_used; ++b) {
    assignment[v] = b;
    restricted_growth(g, v + 1, std::max(blocks_used, b + 1), assignment, out);
  }
}

struct OrientationSearch {
  const Graph& graph;
  std::vector<std::uint64_t> out_edges;
  std::vector<std::pair<int, int>> chosen;
  std::vector<AcyclicOrientation> result;

  bool reaches(int from, int to) const {
    std::uint64_t seen = bit(from);
    std::uint64_t frontier = seen;
    while (frontier) {
      if (frontier & bit(to)) return true;
      std::uint64_t next = 0;
      for (int v = 0; v < graph.size(); ++v) {
        if (frontier & bit(v)) next |= out_edges[v];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return false;
  }

  void run(std::size_t e) {
    const auto& edges = graph.edges();
    if (e == edges.size()) {
      result.push_back({chosen});
      return;
    }
    const auto [u, v] = edges[e];
    for (auto [tail, head] : {std::pair{u, v}, std::pair{v, u}}) {
      if (reaches(head, tail)) continue;
      out_edges[tail] |= bit(head);
      chosen.emplace_back(tail, head);
      run(e + 1);
      chosen.pop_back();
      out_edges[tail] &= ~bit(head);
    }
  }
};

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph size must be in [0, " + std::to_string(kMaxVertices) + "]");
  }
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(n, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    for (int w : {u, v}) {
      if (w < 0 || w >= n) {
        throw InputError("edge vertex " + std::to_string(w) + " out of range for n=" + std::to_string(n));
      }
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    g.adjacency_[u] |= bit(v);
    g.adjacency_[v] |= bit(u);
  }
  g.edges_.assign(seen.begin(), seen.end());
  return g;
}

bool Flat::is_contracted(int block) const {
  return std::binary_search(contracted.begin(), contracted.end(), block);
}

Flat make_flat(const Graph& g, const std::vector<std::vector<int>>& blocks) {
  const int n = g.size();
  std::vector<int> block_of(n, -1);
  Flat f;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::uint64_t mask = 0;
    for (int v : blocks[b]) {
      if (v < 0 || v >= n || block_of[v] != -1) throw InputError("blocks must partition the vertex set");
      block_of[v] = static_cast<int>(b);
      mask |= bit(v);
    }
    if (!connected_within(g, mask)) throw InputError("block " + std::to_string(b) + " is not connected");
    std::vector<int> sorted = blocks[b];
    std::sort(sorted.begin(), sorted.end());
    f.blocks.push_back(std::move(sorted));
    if (blocks[b].size() >= 2) f.contracted.push_back(static_cast<int>(b));
  }
  if (std::count(block_of.begin(), block_of.end(), -1) != 0) {
    throw InputError("blocks must partition the vertex set");
  }

  std::set<std::pair<int, int>> quotient_edges;
  for (const auto& [u, v] : g.edges()) {
    int a = block_of[u];
    int b = block_of[v];
    if (a == b) continue;
    quotient_edges.insert({std::min(a, b), std::max(a, b)});
  }
  f.quotient = Graph::build(static_cast<int>(blocks.size()), {quotient_edges.begin(), quotient_edges.end()});
  return f;
}

std::vector<Flat> flats(const Graph& g) {
  std::vector<Flat> out;
  std::vector<int> assignment(g.size(), 0);
  restricted_growth(g, 0, 0, assignment, out);
  return out;
}

std::vector<AcyclicOrientation> acyclic_orientations(const Graph& h) {
  OrientationSearch search{h, std::vector<std::uint64_t>(h.size(), 0), {}, {}};
  search.run(0);
  return std::move(search.result);
}

BicoloredPoset orientation_to_poset(const Flat& f, const AcyclicOrientation& sigma) {
  if (sigma.directed_edges.size() != f.quotient.edges().size()) {
    throw InputError("orientation does not match the flat's quotient edges");
  }
  for (std::size_t e = 0; e < sigma.directed_edges.size(); ++e) {
    auto [tail, head] = sigma.directed_edges[e];
    if (std::pair<int, int>(std::minmax(tail, head)) != f.quotient.edges()[e]) {
      throw InputError("orientation does not match the flat's quotient edges");
    }
  }
  return BicoloredPoset::build(static_cast<int>(f.blocks.size()), sigma.directed_edges, f.contracted);
}

}  // namespace biorder
