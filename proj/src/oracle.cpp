#include "biorder/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "biorder/errors.hpp"

namespace biorder {

namespace {

struct MapSearch {
  const BicoloredPoset& poset;
  std::vector<int> order;  // every element after all of its predecessors
  long x0;
  long celeste_floor;  // smallest value allowed on a celeste element
  bool strict;
  std::vector<long> value;

  std::uint64_t count(std::size_t depth) {
    const int a = order[depth];
    long lo = poset.is_celeste(a) ? std::max(1L, celeste_floor) : 1L;
    for (std::size_t i = 0; i < depth; ++i) {
      const int b = order[i];
      if (poset.less(b, a)) lo = std::max(lo, strict ? value[b] + 1 : value[b]);
    }
    if (lo > x0) return 0;
    if (depth + 1 == order.size()) return static_cast<std::uint64_t>(x0 - lo + 1);
    std::uint64_t total = 0;
    for (long v = lo; v <= x0; ++v) {
      value[a] = v;
      total += count(depth + 1);
    }
    return total;
  }
};

std::uint64_t search(const BicoloredPoset& p, long x0, long y0, std::uint64_t budget, bool strict) {
  if (x0 < 0 || y0 < 0) throw InputError("brute count needs nonnegative x and y");
  require_budget(x0, p.size(), budget, "brute_count");
  if (p.size() == 0) return 1;
  // Maps are assigned along a topological order, so each element only checks
  // the already-fixed values of its predecessors.
  MapSearch s{p, natural_labeling(p).labels, x0, strict ? y0 + 1 : y0, strict, std::vector<long>(p.size())};
  std::vector<int> order(p.size());
  for (int a = 0; a < p.size(); ++a) order[s.order[a] - 1] = a;
  s.order = std::move(order);
  return s.count(0);
}

// Lagrange basis polynomial in one variable: prod_{m != i} (t - nodes[m]) / (nodes[i] - nodes[m]).
BiPoly lagrange_basis(const std::vector<long>& nodes, std::size_t i, bool in_x) {
  const BiPoly t = in_x ? BiPoly::x() : BiPoly::y();
  BiPoly basis(1);
  Rational denominator = 1;
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    if (m == i) continue;
    basis *= t - BiPoly(Rational(nodes[m]));
    denominator *= Rational(nodes[i] - nodes[m]);
  }
  return basis * (Rational(1) / denominator);
}

}  // namespace

std::uint64_t map_space_size(long x0, int n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  const auto base = static_cast<std::uint64_t>(std::max(x0, 0L));
  for (int i = 0; i < n; ++i) {
    if (base != 0 && size > kMax / base) return kMax;
    size *= base;
  }
  return size;
}

void require_budget(long x0, int n, std::uint64_t budget, const char* what) {
  const std::uint64_t size = map_space_size(x0, n);
  if (size > budget) {
    throw BudgetExceeded(std::string(what) + ": search space " + std::to_string(x0) + "^" +
                         std::to_string(n) + " exceeds budget " + std::to_string(budget));
  }
}

std::uint64_t brute_count_strict(const BicoloredPoset& p, long x0, long y0, std::uint64_t budget) {
  return search(p, x0, y0, budget, true);
}

std::uint64_t brute_count_weak(const BicoloredPoset& p, long x0, long y0, std::uint64_t budget) {
  return search(p, x0, y0, budget, false);
}

std::uint64_t brute_count(const BicoloredPoset& p, Mode mode, long x0, long y0, std::uint64_t budget) {
  return search(p, x0, y0, budget, mode == Mode::kStrict);
}

InterpolationGrid interpolation_grid(int n, Mode mode) {
  if (n < 0) throw InputError("interpolation degree must be nonnegative");
  InterpolationGrid grid;
  const long y_first = mode == Mode::kStrict ? 0 : 1;
  for (long j = 0; j <= n; ++j) grid.ys.push_back(y_first + j);
  const long x_first = n + 2 + grid.ys.back();
  for (long i = 0; i <= n; ++i) grid.xs.push_back(x_first + i);
  return grid;
}

BiPoly interpolate_poly(const Counter& counter, int n, Mode mode) {
  const InterpolationGrid grid = interpolation_grid(n, mode);
  std::vector<BiPoly> y_basis;
  for (std::size_t j = 0; j < grid.ys.size(); ++j) y_basis.push_back(lagrange_basis(grid.ys, j, false));

  BiPoly result;
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    // Interpolate along y for this x, then weight by the x basis.
    BiPoly slice;
    for (std::size_t j = 0; j < grid.ys.size(); ++j) {
      const std::uint64_t value = counter(grid.xs[i], grid.ys[j]);
      slice += Rational(mpz_class(std::to_string(value), 10)) * y_basis[j];
    }
    result += lagrange_basis(grid.xs, i, true) * slice;
  }
  return result;
}

}  // namespace biorder
