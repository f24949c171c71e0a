#include "biorder/chrompoly.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "biorder/errors.hpp"
#include "biorder/json_io.hpp"
#include "biorder/orderpoly.hpp"

namespace biorder {

namespace {

bool valid_coloring(const Graph& g, const std::vector<long>& color, long y0) {
  for (const auto& [u, v] : g.edges()) {
    if (color[u] == color[v] && color[u] <= y0) return false;
  }
  return true;
}

// Merge w into v, dropping the v-w edge and collapsing parallel edges.
Graph contract_edge(const Graph& g, int v, int w) {
  auto relabel = [&](int u) {
    if (u == w) u = v;
    return u > w ? u - 1 : u;
  };
  std::set<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) {
    int ra = relabel(a);
    int rb = relabel(b);
    if (ra != rb) edges.insert({std::min(ra, rb), std::max(ra, rb)});
  }
  return Graph::build(g.size() - 1, {edges.begin(), edges.end()});
}

Graph delete_edge(const Graph& g, std::size_t index) {
  std::vector<std::pair<int, int>> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
  return Graph::build(g.size(), edges);
}

int sign_for(std::size_t count) { return count % 2 == 0 ? 1 : -1; }

}  // namespace

std::uint64_t chi_brute(const Graph& g, long x0, long y0, std::uint64_t budget) {
  if (x0 < 0 || y0 < 0) throw InputError("chi_brute needs nonnegative x and y");
  const int n = g.size();
  require_budget(x0, n, budget, "chi_brute");
  if (n == 0) return 1;
  if (x0 == 0) return 0;
  std::vector<long> color(n, 1);
  std::uint64_t count = 0;
  // Odometer over [x0]^n.
  while (true) {
    if (valid_coloring(g, color, y0)) ++count;
    int i = 0;
    while (i < n && color[i] == x0) color[i++] = 1;
    if (i == n) break;
    ++color[i];
  }
  return count;
}

BiPoly chi_poly(const Graph& g) {
  BiPoly sum;
  for (const Flat& f : flats(g)) {
    for (const AcyclicOrientation& sigma : acyclic_orientations(f.quotient)) {
      sum += omega_strict(orientation_to_poset(f, sigma));
    }
  }
  return sum;
}

BiPoly chi_classical(const Graph& g) {
  if (g.edges().empty()) return pow(BiPoly::x(), g.size());
  const auto [u, v] = g.edges().back();
  return chi_classical(delete_edge(g, g.edges().size() - 1)) - chi_classical(contract_edge(g, u, v));
}

std::uint64_t m_count(const Flat& f, const AcyclicOrientation& sigma, long x0, long y0, std::uint64_t budget) {
  if (x0 < 0 || y0 < 0) throw InputError("m_count needs nonnegative x and y");
  const int n = static_cast<int>(f.blocks.size());
  require_budget(x0, n, budget, "m_count");
  if (n == 0) return 1;
  if (x0 == 0) return 0;
  std::vector<long> color(n, 1);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (int b : f.contracted) ok = ok && color[b] > y0;
    for (const auto& [tail, head] : sigma.directed_edges) ok = ok && color[tail] <= color[head];
    if (ok) ++count;
    int i = 0;
    while (i < n && color[i] == x0) color[i++] = 1;
    if (i == n) break;
    ++color[i];
  }
  return count;
}

CheckReport check_reciprocity_graph(const Graph& g, long x0, long y0, std::uint64_t budget) {
  const Rational lhs = chi_poly(g).evaluate(Rational(-x0), Rational(-y0));
  mpz_class rhs = 0;
  for (const Flat& f : flats(g)) {
    mpz_class flat_total = 0;
    for (const AcyclicOrientation& sigma : acyclic_orientations(f.quotient)) {
      flat_total += mpz_class(std::to_string(m_count(f, sigma, x0, y0, budget)), 10);
    }
    rhs += sign_for(f.blocks.size()) * flat_total;
  }

  CheckReport report{"graph-reciprocity", lhs == Rational(rhs), std::nullopt};
  report.details = {{"x", x0}, {"y", y0}, {"lhs", lhs.to_string()}, {"rhs", rhs.get_str(10)}};
  if (!report.passed) {
    report.witness = nlohmann::json{{"graph", g},
                                    {"point", {{"x", x0}, {"y", y0}}},
                                    {"lhs_value", lhs.to_string()},
                                    {"rhs_value", rhs.get_str(10)}};
  }
  return report;
}

CheckReport check_reciprocity_graph_poly(const Graph& g) {
  const BiPoly lhs = chi_poly(g).substitute_negate();
  BiPoly rhs;
  for (const Flat& f : flats(g)) {
    for (const AcyclicOrientation& sigma : acyclic_orientations(f.quotient)) {
      rhs += Rational(sign_for(f.blocks.size())) * omega_weak(orientation_to_poset(f, sigma)).substitute_shift_y(1);
    }
  }
  CheckReport report{"graph-reciprocity-poly", lhs == rhs, std::nullopt};
  report.details = {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
  if (!report.passed) {
    nlohmann::json witness{{"graph", g}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
    if (auto point = find_difference_point(lhs, rhs)) {
      witness["point"] = {{"x", point->first}, {"y", point->second}};
    }
    report.witness = std::move(witness);
  }
  return report;
}

}  // namespace biorder
