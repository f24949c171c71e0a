#include "biorder/fixtures.hpp"

namespace biorder::fixtures {

BicoloredPoset chain(int n, const std::vector<int>& celeste) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return BicoloredPoset::build(n, covers, celeste);
}

BicoloredPoset antichain(int n, const std::vector<int>& celeste) {
  return BicoloredPoset::build(n, {}, celeste);
}

BicoloredPoset fence(int n, const std::vector<int>& celeste) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) {
    if (i % 2 == 0) {
      covers.emplace_back(i, i + 1);
    } else {
      covers.emplace_back(i + 1, i);
    }
  }
  return BicoloredPoset::build(n, covers, celeste);
}

BicoloredPoset two_chain_celeste_top() { return chain(2, {1}); }

BicoloredPoset pentagon() {
  enum { a, b, c, d, e };
  return BicoloredPoset::build(5, {{a, b}, {b, c}, {c, e}, {a, d}, {d, e}}, {c});
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(n, edges);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(0, n - 1);
  return Graph::build(n, edges);
}

Graph edgeless(int n) { return Graph::build(n, {}); }

}  // namespace biorder::fixtures
