#ifndef BIORDER_POSET_HPP
#define BIORDER_POSET_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace biorder {

// Finite strict partial order on elements 0..n-1 with a celeste subset C.
// Elements outside C are silver.
class BicoloredPoset {
public:
  static constexpr int kMaxElements = 64;

  BicoloredPoset() = default;

  // `relations` is any generating relation (covers or more); the transitive
  // closure is taken. Throws InputError on an out-of-range index, a duplicate
  // pair, or a cycle (including a self-pair).
  static BicoloredPoset build(int n, const std::vector<std::pair<int, int>>& relations,
                              const std::vector<int>& celeste);

  int size() const { return n_; }
  bool less(int a, int b) const { return (above_[a] >> b) & 1U; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
  bool is_celeste(int a) const { return (celeste_mask_ >> a) & 1U; }

  // Bit b of below(a) is set iff b < a.
  std::uint64_t below(int a) const { return below_[a]; }
  std::uint64_t above(int a) const { return above_[a]; }
  std::uint64_t celeste_mask() const { return celeste_mask_; }

  std::vector<int> celeste() const;
  // All pairs (a, b) with a < b in the closed order, lexicographic.
  std::vector<std::pair<int, int>> relations() const;
  // Pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const BicoloredPoset&, const BicoloredPoset&) = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> below_;
  std::vector<std::uint64_t> above_;
  std::uint64_t celeste_mask_ = 0;
};

// A bijection element -> {1..n}.
struct Labeling {
  std::vector<int> labels;

  int operator()(int element) const { return labels[element]; }
  bool is_natural(const BicoloredPoset& p) const;
  bool is_reverse_natural(const BicoloredPoset& p) const;
};

Labeling natural_labeling(const BicoloredPoset& p);
Labeling reverse_natural_labeling(const BicoloredPoset& p);
// One labeling per linear extension (labels assigned along the extension), in
// extension order.
std::vector<Labeling> all_natural_labelings(const BicoloredPoset& p);
std::vector<Labeling> all_reverse_natural_labelings(const BicoloredPoset& p);

struct LinearExtension {
  std::vector<int> order;

  bool refines(const BicoloredPoset& p) const;
  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
};

// Calls `visit` once per linear extension, lexicographically by element index.
void for_each_linear_extension(const BicoloredPoset& p,
                               const std::function<void(const std::vector<int>&)>& visit);
std::vector<LinearExtension> linear_extensions(const BicoloredPoset& p);

struct AscDes {
  std::vector<int> asc;  // 1-based positions j with w_j < w_{j+1}
  std::vector<int> des;
};

// Sequence of distinct labels, with the 1-based position of the minimal
// celeste element (absent when there is no celeste element).
struct Word {
  std::vector<int> letters;
  std::optional<int> celeste_pos;

  // Throws InputError unless letters are a permutation of 1..n and
  // celeste_pos lies in 1..n.
  void validate() const;
  int size() const { return static_cast<int>(letters.size()); }
  int asc() const;
  int des() const;
  // The prefix through celeste_pos (the whole word when absent).
  Word celeste_prefix() const;

  friend bool operator==(const Word&, const Word&) = default;
};

Word word_of(const LinearExtension& l, const Labeling& lab, const BicoloredPoset& p);
AscDes asc_des(const Word& w);
// Reverses the letters; celeste_pos p becomes n + 1 - p.
Word reverse_word(const Word& w);

}  // namespace biorder

#endif  // BIORDER_POSET_HPP
