#ifndef BIORDER_FIXTURES_HPP
#define BIORDER_FIXTURES_HPP

#include <vector>

#include "biorder/graph.hpp"
#include "biorder/poset.hpp"

// Named posets and graphs used by the tests, the acceptance suite and the
// JSON files under fixtures/.
namespace biorder::fixtures {

// 0 < 1 < ... < n-1.
BicoloredPoset chain(int n, const std::vector<int>& celeste = {});
BicoloredPoset antichain(int n, const std::vector<int>& celeste = {});
// Zigzag 0 < 1 > 2 < 3 > ...
BicoloredPoset fence(int n, const std::vector<int>& celeste = {});

// Two-element chain with a celeste top.
BicoloredPoset two_chain_celeste_top();

// Five elements a..e = 0..4 with covers a<b<c<e, a<d<e and celeste {c}.
// Its linear extensions are abcde, abdce, adbce.
BicoloredPoset pentagon();

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph edgeless(int n);

}  // namespace biorder::fixtures

#endif  // BIORDER_FIXTURES_HPP
