#include "biorder/poset.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "biorder/errors.hpp"

namespace biorder {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

void check_index(int n, int a, const char* what) {
  if (a < 0 || a >= n) {
    throw InputError(std::string(what) + " index " + std::to_string(a) + " out of range for n=" +
                     std::to_string(n));
  }
}

// Kahn's algorithm, always taking the smallest available index. With
// `from_top` the dual order is used (maximal elements first).
std::vector<int> smallest_first_topological_order(const BicoloredPoset& p, bool from_top) {
  const int n = p.size();
  std::vector<int> order;
  std::uint64_t done = 0;
  while (static_cast<int>(order.size()) < n) {
    for (int a = 0; a < n; ++a) {
      if (done & bit(a)) continue;
      std::uint64_t blockers = from_top ? p.above(a) : p.below(a);
      if ((blockers & ~done) == 0) {
        order.push_back(a);
        done |= bit(a);
        break;
      }
    }
  }
  return order;
}

void extend(const BicoloredPoset& p, std::uint64_t placed, std::vector<int>& prefix,
            const std::function<void(const std::vector<int>&)>& visit) {
  const int n = p.size();
  if (static_cast<int>(prefix.size()) == n) {
    visit(prefix);
    return;
  }
  for (int a = 0; a < n; ++a) {
    if ((placed & bit(a)) || (p.below(a) & ~placed)) continue;
    prefix.push_back(a);
    extend(p, placed | bit(a), prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

BicoloredPoset BicoloredPoset::build(int n, const std::vector<std::pair<int, int>>& relations,
                                     const std::vector<int>& celeste) {
  if (n < 0 || n > kMaxElements) {
    throw InputError("poset size must be in [0, " + std::to_string(kMaxElements) + "]");
  }
  BicoloredPoset p;
  p.n_ = n;
  p.above_.assign(n, 0);
  p.below_.assign(n, 0);

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : relations) {
    check_index(n, a, "relation");
    check_index(n, b, "relation");
    if (!seen.insert({a, b}).second) {
      throw InputError("duplicate pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (a == b) throw InputError("cycle: self-relation on element " + std::to_string(a));
    p.above_[a] |= bit(b);
  }

  // Warshall closure on bit rows.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (p.above_[i] & bit(k)) p.above_[i] |= p.above_[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (p.above_[i] & bit(i)) {
      throw InputError("cycle: relations do not form a partial order (element " +
                       std::to_string(i) + ")");
    }
    for (int j = 0; j < n; ++j) {
      if (p.above_[i] & bit(j)) p.below_[j] |= bit(i);
    }
  }

  for (int c : celeste) {
    check_index(n, c, "celeste");
    if (p.celeste_mask_ & bit(c)) throw InputError("duplicate celeste element " + std::to_string(c));
    p.celeste_mask_ |= bit(c);
  }
  return p;
}

std::vector<int> BicoloredPoset::celeste() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    if (is_celeste(a)) out.push_back(a);
  }
  return out;
}

std::vector<std::pair<int, int>> BicoloredPoset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::pair<int, int>> BicoloredPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : relations()) {
    if ((above_[a] & below_[b]) == 0) out.emplace_back(a, b);
  }
  return out;
}

bool Labeling::is_natural(const BicoloredPoset& p) const {
  for (const auto& [a, b] : p.relations()) {
    if (labels[a] >= labels[b]) return false;
  }
  return true;
}

bool Labeling::is_reverse_natural(const BicoloredPoset& p) const {
  for (const auto& [a, b] : p.relations()) {
    if (labels[a] <= labels[b]) return false;
  }
  return true;
}

Labeling natural_labeling(const BicoloredPoset& p) {
  Labeling lab{std::vector<int>(p.size())};
  auto order = smallest_first_topological_order(p, false);
  for (int i = 0; i < p.size(); ++i) lab.labels[order[i]] = i + 1;
  return lab;
}

Labeling reverse_natural_labeling(const BicoloredPoset& p) {
  Labeling lab{std::vector<int>(p.size())};
  auto order = smallest_first_topological_order(p, true);
  for (int i = 0; i < p.size(); ++i) lab.labels[order[i]] = i + 1;
  return lab;
}

std::vector<Labeling> all_natural_labelings(const BicoloredPoset& p) {
  std::vector<Labeling> out;
  for_each_linear_extension(p, [&](const std::vector<int>& order) {
    Labeling lab{std::vector<int>(order.size())};
    for (std::size_t i = 0; i < order.size(); ++i) lab.labels[order[i]] = static_cast<int>(i) + 1;
    out.push_back(std::move(lab));
  });
  return out;
}

std::vector<Labeling> all_reverse_natural_labelings(const BicoloredPoset& p) {
  std::vector<Labeling> out;
  const int n = p.size();
  for_each_linear_extension(p, [&](const std::vector<int>& order) {
    Labeling lab{std::vector<int>(order.size())};
    for (int i = 0; i < n; ++i) lab.labels[order[i]] = n - i;
    out.push_back(std::move(lab));
  });
  return out;
}

bool LinearExtension::refines(const BicoloredPoset& p) const {
  const int n = p.size();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) {
    int a = order[i];
    if (a < 0 || a >= n || position[a] != -1) return false;
    position[a] = i;
  }
  for (const auto& [a, b] : p.relations()) {
    if (position[a] > position[b]) return false;
  }
  return true;
}

void for_each_linear_extension(const BicoloredPoset& p,
                               const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> prefix;
  prefix.reserve(p.size());
  extend(p, 0, prefix, visit);
}

std::vector<LinearExtension> linear_extensions(const BicoloredPoset& p) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(p, [&](const std::vector<int>& order) { out.push_back({order}); });
  return out;
}

void Word::validate() const {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int letter : letters) {
    if (letter < 1 || letter > n || seen[letter]) {
      throw InputError("malformed word: letters must be a permutation of 1..n");
    }
    seen[letter] = true;
  }
  if (celeste_pos && (*celeste_pos < 1 || *celeste_pos > n)) {
    throw InputError("malformed word: celeste position out of range");
  }
}

int Word::asc() const {
  int count = 0;
  for (std::size_t j = 0; j + 1 < letters.size(); ++j) count += letters[j] < letters[j + 1];
  return count;
}

int Word::des() const {
  int count = 0;
  for (std::size_t j = 0; j + 1 < letters.size(); ++j) count += letters[j] > letters[j + 1];
  return count;
}

Word Word::celeste_prefix() const {
  if (!celeste_pos) return *this;
  return Word{std::vector<int>(letters.begin(), letters.begin() + *celeste_pos), celeste_pos};
}

Word word_of(const LinearExtension& l, const Labeling& lab, const BicoloredPoset& p) {
  Word w;
  for (std::size_t i = 0; i < l.order.size(); ++i) {
    int a = l.order[i];
    w.letters.push_back(lab(a));
    if (!w.celeste_pos && p.is_celeste(a)) w.celeste_pos = static_cast<int>(i) + 1;
  }
  return w;
}

AscDes asc_des(const Word& w) {
  AscDes out;
  for (int j = 1; j < w.size(); ++j) {
    if (w.letters[j - 1] < w.letters[j]) out.asc.push_back(j);
    if (w.letters[j - 1] > w.letters[j]) out.des.push_back(j);
  }
  return out;
}

Word reverse_word(const Word& w) {
  Word out{std::vector<int>(w.letters.rbegin(), w.letters.rend()), std::nullopt};
  if (w.celeste_pos) out.celeste_pos = w.size() + 1 - *w.celeste_pos;
  return out;
}

}  // namespace biorder
