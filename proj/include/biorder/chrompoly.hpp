#ifndef BIORDER_CHROMPOLY_HPP
#define BIORDER_CHROMPOLY_HPP

#include <cstdint>

#include "biorder/bipoly.hpp"
#include "biorder/check_report.hpp"
#include "biorder/graph.hpp"
#include "biorder/oracle.hpp"

namespace biorder {

// Colorings c: V -> [x0] where every edge vw has c(v) != c(w) or c(v) = c(w) > y0.
std::uint64_t chi_brute(const Graph& g, long x0, long y0, std::uint64_t budget = kDefaultBudget);

// Bivariate chromatic polynomial, summed over flats H and acyclic orientations
// sigma of H of the strict order polynomial of sigma with celeste set C(H).
BiPoly chi_poly(const Graph& g);

// Classical chromatic polynomial in x by deletion-contraction.
BiPoly chi_classical(const Graph& g);

// Colorings c: blocks -> [x0] weakly increasing along sigma with c(v) > y0 on
// contracted blocks.
std::uint64_t m_count(const Flat& f, const AcyclicOrientation& sigma, long x0, long y0,
                      std::uint64_t budget = kDefaultBudget);

// chi(-x0, -y0) == sum over flats H of (-1)^|V(H)| sum_sigma m_count(H, sigma, x0, y0).
CheckReport check_reciprocity_graph(const Graph& g, long x0, long y0, std::uint64_t budget = kDefaultBudget);

// The same identity as polynomials:
// chi(-x, -y) == sum_H (-1)^|V(H)| sum_sigma Omega_{sigma, C(H)}(x, y + 1).
CheckReport check_reciprocity_graph_poly(const Graph& g);

}  // namespace biorder

#endif  // BIORDER_CHROMPOLY_HPP
