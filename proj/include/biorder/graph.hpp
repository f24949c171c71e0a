#ifndef BIORDER_GRAPH_HPP
#define BIORDER_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "biorder/poset.hpp"

namespace biorder {

// Simple undirected graph on vertices 0..n-1. Edges are stored as (u, v)
// with u < v, sorted.
class Graph {
public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  // Throws InputError on loops, duplicate edges (in either orientation) and
  // out-of-range vertices.
  static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::uint64_t neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const { return (adjacency_[u] >> v) & 1U; }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adjacency_;
};

// A contraction of G, identified with a partition of V(G) into blocks that
// each induce a connected subgraph. Block i is quotient vertex i.
struct Flat {
  std::vector<std::vector<int>> blocks;
  Graph quotient;
  // Quotient vertices whose block has at least two vertices.
  std::vector<int> contracted;

  bool is_contracted(int block) const;
};

// Builds the flat for a given partition. Throws InputError if the blocks do
// not partition V(G) or a block is disconnected.
Flat make_flat(const Graph& g, const std::vector<std::vector<int>>& blocks);

// All flats, one per connected partition, in restricted-growth-string order
// (the all-singletons flat first).
std::vector<Flat> flats(const Graph& g);

struct AcyclicOrientation {
  // One (tail, head) pair per edge, aligned with Graph::edges().
  std::vector<std::pair<int, int>> directed_edges;

  friend bool operator==(const AcyclicOrientation&, const AcyclicOrientation&) = default;
};

// All acyclic orientations, lexicographic in the per-edge choice
// (u -> v before v -> u for an edge u < v).
std::vector<AcyclicOrientation> acyclic_orientations(const Graph& h);

// Reachability order of the orientation on the quotient, celeste = contracted blocks.
BicoloredPoset orientation_to_poset(const Flat& f, const AcyclicOrientation& sigma);

}  // namespace biorder

#endif  // BIORDER_GRAPH_HPP
