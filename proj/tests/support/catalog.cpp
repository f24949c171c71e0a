#include "catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace biorder::testing {

namespace {

// Odometer over [x0]^n; calls f(values) for every tuple.
template <typename F>
void for_each_tuple(int n, long x0, F&& f) {
  if (n == 0) {
    f(std::vector<long>{});
    return;
  }
  if (x0 <= 0) return;
  std::vector<long> v(n, 1);
  while (true) {
    f(v);
    int i = 0;
    while (i < n && v[i] == x0) v[i++] = 1;
    if (i == n) return;
    ++v[i];
  }
}

}  // namespace

std::vector<BicoloredPoset> labeled_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) slots.emplace_back(a, b);
    }
  }
  std::vector<BicoloredPoset> out;
  const std::uint64_t subsets = std::uint64_t{1} << slots.size();
  for (std::uint64_t s = 0; s < subsets; ++s) {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((s >> i) & 1U) rel.push_back(slots[i]);
    }
    // Keep only relation sets that are already transitive and antisymmetric,
    // so each partial order appears exactly once.
    bool ok = true;
    for (auto [a, b] : rel) {
      if (std::find(rel.begin(), rel.end(), std::pair{b, a}) != rel.end()) ok = false;
      for (auto [c, d] : rel) {
        if (c == b && std::find(rel.begin(), rel.end(), std::pair{a, d}) == rel.end()) ok = false;
      }
    }
    if (ok) out.push_back(BicoloredPoset::build(n, rel, {}));
  }
  return out;
}

BicoloredPoset with_celeste(const BicoloredPoset& p, std::uint64_t celeste_mask) {
  std::vector<int> celeste;
  for (int a = 0; a < p.size(); ++a) {
    if ((celeste_mask >> a) & 1U) celeste.push_back(a);
  }
  return BicoloredPoset::build(p.size(), p.relations(), celeste);
}

std::vector<BicoloredPoset> poset_catalog(int max_n) {
  std::vector<BicoloredPoset> out;
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& p : labeled_posets(n)) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(with_celeste(p, mask));
    }
  }
  return out;
}

std::vector<Graph> labeled_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Graph> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << slots.size()); ++s) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((s >> i) & 1U) edges.push_back(slots[i]);
    }
    out.push_back(Graph::build(n, edges));
  }
  return out;
}

std::vector<Word> all_words(int n) {
  std::vector<int> letters(n);
  std::iota(letters.begin(), letters.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back({letters, std::nullopt});
    for (int pos = 1; pos <= n; ++pos) out.push_back({letters, pos});
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::string describe(const BicoloredPoset& p) {
  std::ostringstream os;
  os << "poset n=" << p.size() << " rel={";
  for (auto [a, b] : p.relations()) os << a << "<" << b << " ";
  os << "} celeste={";
  for (int c : p.celeste()) os << c << " ";
  os << "}";
  return os.str();
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "graph n=" << g.size() << " edges={";
  for (auto [u, v] : g.edges()) os << u << "-" << v << " ";
  os << "}";
  return os.str();
}

std::string describe(const Word& w) {
  std::ostringstream os;
  os << "word ";
  for (int l : w.letters) os << l;
  os << " celeste_pos=" << (w.celeste_pos ? std::to_string(*w.celeste_pos) : "none");
  return os.str();
}

std::uint64_t naive_type_count(const Word& w, long x0, long y0, bool strict) {
  std::uint64_t count = 0;
  for_each_tuple(w.size(), x0, [&](const std::vector<long>& phi) {
    for (int j = 0; j + 1 < w.size(); ++j) {
      if (w.letters[j] < w.letters[j + 1] ? phi[j] > phi[j + 1] : phi[j] >= phi[j + 1]) return;
    }
    if (w.celeste_pos) {
      long v = phi[*w.celeste_pos - 1];
      if (strict ? v <= y0 : v < y0) return;
    }
    ++count;
  });
  return count;
}

std::uint64_t naive_poset_count(const BicoloredPoset& p, long x0, long y0, bool strict) {
  std::uint64_t count = 0;
  const auto rel = p.relations();
  const auto celeste = p.celeste();
  for_each_tuple(p.size(), x0, [&](const std::vector<long>& phi) {
    for (auto [a, b] : rel) {
      if (strict ? phi[a] >= phi[b] : phi[a] > phi[b]) return;
    }
    for (int c : celeste) {
      if (strict ? phi[c] <= y0 : phi[c] < y0) return;
    }
    ++count;
  });
  return count;
}

std::uint64_t naive_order_count(const BicoloredPoset& p, long x0, bool strict) {
  return naive_poset_count(with_celeste(p, 0), x0, 0, strict);
}

Rational falling_binomial(long a, int m) {
  Rational r = 1;
  for (int t = 0; t < m; ++t) r *= Rational(a - t);
  for (int t = 1; t <= m; ++t) r /= Rational(t);
  return r;
}

std::vector<Rational> interpolate_univariate(const std::vector<long>& xs, const std::vector<Rational>& values) {
  const std::size_t n = xs.size();
  std::vector<Rational> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    // basis numerator as coefficients, built incrementally
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t m = 0; m < n; ++m) {
      if (m == i) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * Rational(xs[m]);
      }
      basis = std::move(next);
      denom *= Rational(xs[i] - xs[m]);
    }
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += values[i] * basis[d] / denom;
  }
  return coeffs;
}

}  // namespace biorder::testing
