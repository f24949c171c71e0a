#ifndef BIORDER_ORACLE_HPP
#define BIORDER_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "biorder/bipoly.hpp"
#include "biorder/orderpoly.hpp"
#include "biorder/poset.hpp"

namespace biorder {

// Default cap on the nominal search space (x0^n maps) of one oracle call.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// x0^n, saturating at UINT64_MAX.
std::uint64_t map_space_size(long x0, int n);
// Throws BudgetExceeded when x0^n > budget.
void require_budget(long x0, int n, std::uint64_t budget, const char* what);

// Number of (strictly) order preserving maps P -> [x0] with celeste elements
// above (at or above) y0, by exhaustive search. Throws InputError on
// negative arguments and BudgetExceeded if x0^n exceeds the budget.
std::uint64_t brute_count_strict(const BicoloredPoset& p, long x0, long y0,
                                 std::uint64_t budget = kDefaultBudget);
std::uint64_t brute_count_weak(const BicoloredPoset& p, long x0, long y0,
                               std::uint64_t budget = kDefaultBudget);
std::uint64_t brute_count(const BicoloredPoset& p, Mode mode, long x0, long y0,
                          std::uint64_t budget = kDefaultBudget);

using Counter = std::function<std::uint64_t(long x0, long y0)>;

struct InterpolationGrid {
  std::vector<long> xs;
  std::vector<long> ys;
};

// y in {0..n} (strict) or {1..n+1} (weak); x in {n+2+y_max, ..., n+2+y_max+n}.
InterpolationGrid interpolation_grid(int n, Mode mode);

// The unique polynomial of bidegree <= (n, n) agreeing with `counter` on the grid.
BiPoly interpolate_poly(const Counter& counter, int n, Mode mode);

}  // namespace biorder

#endif  // BIORDER_ORACLE_HPP
