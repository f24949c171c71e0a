#ifndef BIORDER_ORDERPOLY_HPP
#define BIORDER_ORDERPOLY_HPP

#include <vector>

#include "biorder/bipoly.hpp"
#include "biorder/check_report.hpp"
#include "biorder/poset.hpp"

namespace biorder {

// strict: comparabilities map to <, celeste elements land above y.
// weak:   comparabilities map to <=, celeste elements land at or above y.
enum class Mode { kStrict, kWeak };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& text);

// Bicolored chain a_1 < ... < a_n whose minimal celeste element is a_{k+1}.
// k == n encodes a chain without celeste elements. Throws InputError unless
// 0 <= k <= n.
//
//   strict: sum_{i=0}^{k} binom(y, i) binom(x - y, n - i)
//   weak:   sum_{i=0}^{k} binom(y - 2 + i, i) binom(x - y + n - i, n - i)
BiPoly chain_strict(int n, int k);
BiPoly chain_weak(int n, int k);

// Counting polynomials for maps of type w: weak steps at ascents, strict at
// descents, with the threshold on the letter at celeste_pos.
//
// type_strict is chain_strict with x -> x + asc(w), y -> y + asc(w~); the
// weak variant is chain_weak with x -> x - des(w), y -> y - des(w~), where w~
// is the prefix of w through celeste_pos.
BiPoly type_strict(const Word& w);
BiPoly type_weak(const Word& w);

struct ExtensionTerm {
  LinearExtension extension;
  Word word;
  BiPoly poly;
};

// Per-extension summands. The strict decomposition needs a reverse natural
// labeling and the weak one a natural labeling; InputError otherwise.
std::vector<ExtensionTerm> decompose_strict(const BicoloredPoset& p, const Labeling& lab);
std::vector<ExtensionTerm> decompose_weak(const BicoloredPoset& p, const Labeling& lab);

BiPoly omega_strict(const BicoloredPoset& p);
BiPoly omega_strict(const BicoloredPoset& p, const Labeling& reverse_natural);
BiPoly omega_weak(const BicoloredPoset& p);
BiPoly omega_weak(const BicoloredPoset& p, const Labeling& natural);
BiPoly omega(const BicoloredPoset& p, Mode mode);

// (-1)^n Omega°(-x, -y) == Omega(x, y + 1) as polynomials.
CheckReport check_reciprocity_poset(const BicoloredPoset& p);

// Word-level reciprocity (-1)^n Omega°_w(-x, -y) == Omega_{reverse(w)}(x, y + 1).
//
// The right side is built from the weak chain formula with k taken from w and
// the prefix statistic des(reverse(w~)) = asc(w~); this is the reading under
// which the identity is checked. Two alternative readings are evaluated and
// recorded in details without affecting `passed`:
//   "same_element_reading":  type_weak(reverse_word(w)), celeste at n - k
//   "same_position_reading": reversed letters with celeste_pos kept at k + 1
CheckReport check_word_reciprocity(const Word& w);

}  // namespace biorder

#endif  // BIORDER_ORDERPOLY_HPP
