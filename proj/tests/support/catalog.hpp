#ifndef BIORDER_TESTS_CATALOG_HPP
#define BIORDER_TESTS_CATALOG_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "biorder/graph.hpp"
#include "biorder/poset.hpp"
#include "biorder/rational.hpp"

namespace biorder::testing {

// Every labeled strict partial order on n elements (n <= 4 is the practical
// range: 1, 1, 3, 19, 219 for n = 0..4), without celeste elements.
std::vector<BicoloredPoset> labeled_posets(int n);

// Same relations, with the given celeste subset (bit i = element i).
BicoloredPoset with_celeste(const BicoloredPoset& p, std::uint64_t celeste_mask);

// Every poset on <= max_n elements paired with every celeste subset.
std::vector<BicoloredPoset> poset_catalog(int max_n);

// Every labeled simple graph on n vertices (2^(n choose 2) of them).
std::vector<Graph> labeled_graphs(int n);

// Every permutation of 1..n paired with every celeste position (and none).
std::vector<Word> all_words(int n);

std::string describe(const BicoloredPoset& p);
std::string describe(const Graph& g);
std::string describe(const Word& w);

// ---- Naive oracles. These walk every point of [x0]^n with no pruning and
// share no code with the library's counters.

// Maps phi: positions -> [x0] with phi_j <= phi_{j+1} at ascents, < at
// descents, and phi at celeste_pos > y0 (strict) or >= y0 (weak).
std::uint64_t naive_type_count(const Word& w, long x0, long y0, bool strict);

// (Strictly) order preserving maps with the celeste threshold.
std::uint64_t naive_poset_count(const BicoloredPoset& p, long x0, long y0, bool strict);

// Classical order polynomial values, ignoring colors.
std::uint64_t naive_order_count(const BicoloredPoset& p, long x0, bool strict);

// Generalized binomial coefficient a (a-1) ... (a-m+1) / m! for any integer a.
Rational falling_binomial(long a, int m);

// Univariate Lagrange interpolation through (xs[i], values[i]); returns the
// coefficient vector c with p(x) = sum c_d x^d.
std::vector<Rational> interpolate_univariate(const std::vector<long>& xs, const std::vector<Rational>& values);

}  // namespace biorder::testing

#endif  // BIORDER_TESTS_CATALOG_HPP
