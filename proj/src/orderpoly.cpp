#include "biorder/orderpoly.hpp"

#include <string>

#include "biorder/errors.hpp"
#include "biorder/json_io.hpp"

namespace biorder {

namespace {

// sum_{i=0}^{k} binom(y + ys, i) binom(x + xs - y - ys, n - i)
BiPoly strict_chain_shifted(int n, int k, long xs, long ys) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  const BiPoly low = y + BiPoly(Rational(ys));
  const BiPoly high = x - y + BiPoly(Rational(xs - ys));
  BiPoly sum;
  for (int i = 0; i <= k; ++i) sum += binom_poly(low, i) * binom_poly(high, n - i);
  return sum;
}

// sum_{i=0}^{k} binom(y + ys - 2 + i, i) binom(x + xs - y - ys + n - i, n - i)
BiPoly weak_chain_shifted(int n, int k, long xs, long ys) {
  const BiPoly x = BiPoly::x();
  const BiPoly y = BiPoly::y();
  BiPoly sum;
  for (int i = 0; i <= k; ++i) {
    sum += binom_poly(y + BiPoly(Rational(ys - 2 + i)), i) *
           binom_poly(x - y + BiPoly(Rational(xs - ys + n - i)), n - i);
  }
  return sum;
}

void check_chain_args(int n, int k) {
  if (n < 0) throw InputError("chain length must be nonnegative");
  if (k < 0 || k > n) {
    throw InputError("chain: k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  }
}

int word_k(const Word& w) { return w.celeste_pos ? *w.celeste_pos - 1 : w.size(); }

void check_labeling(const BicoloredPoset& p, const Labeling& lab) {
  Word as_word{lab.labels, std::nullopt};
  if (static_cast<int>(lab.labels.size()) != p.size()) {
    throw InputError("labeling size does not match poset");
  }
  as_word.validate();
}

std::vector<ExtensionTerm> decompose(const BicoloredPoset& p, const Labeling& lab, Mode mode) {
  std::vector<ExtensionTerm> terms;
  for_each_linear_extension(p, [&](const std::vector<int>& order) {
    LinearExtension l{order};
    Word w = word_of(l, lab, p);
    BiPoly poly = mode == Mode::kStrict ? type_strict(w) : type_weak(w);
    terms.push_back({std::move(l), std::move(w), std::move(poly)});
  });
  return terms;
}

BiPoly sum_terms(const std::vector<ExtensionTerm>& terms) {
  BiPoly sum;
  for (const auto& t : terms) sum += t.poly;
  return sum;
}

nlohmann::json word_json(const Word& w) {
  nlohmann::json j;
  j["letters"] = w.letters;
  j["celeste_pos"] = w.celeste_pos ? nlohmann::json(*w.celeste_pos) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

const char* to_string(Mode mode) { return mode == Mode::kStrict ? "strict" : "weak"; }

Mode parse_mode(const std::string& text) {
  if (text == "strict") return Mode::kStrict;
  if (text == "weak") return Mode::kWeak;
  throw InputError("mode must be 'strict' or 'weak', got '" + text + "'");
}

BiPoly chain_strict(int n, int k) {
  check_chain_args(n, k);
  return strict_chain_shifted(n, k, 0, 0);
}

BiPoly chain_weak(int n, int k) {
  check_chain_args(n, k);
  return weak_chain_shifted(n, k, 0, 0);
}

BiPoly type_strict(const Word& w) {
  w.validate();
  // Shifting phi(a_i) up by asc(w_1..w_i) turns every weak ascent step into a
  // strict one; the chain formula then applies with x and y shifted.
  return strict_chain_shifted(w.size(), word_k(w), w.asc(), w.celeste_prefix().asc());
}

BiPoly type_weak(const Word& w) {
  w.validate();
  return weak_chain_shifted(w.size(), word_k(w), -w.des(), -w.celeste_prefix().des());
}

std::vector<ExtensionTerm> decompose_strict(const BicoloredPoset& p, const Labeling& lab) {
  check_labeling(p, lab);
  if (!lab.is_reverse_natural(p)) throw InputError("strict decomposition needs a reverse natural labeling");
  return decompose(p, lab, Mode::kStrict);
}

std::vector<ExtensionTerm> decompose_weak(const BicoloredPoset& p, const Labeling& lab) {
  check_labeling(p, lab);
  if (!lab.is_natural(p)) throw InputError("weak decomposition needs a natural labeling");
  return decompose(p, lab, Mode::kWeak);
}

BiPoly omega_strict(const BicoloredPoset& p) { return omega_strict(p, reverse_natural_labeling(p)); }

BiPoly omega_strict(const BicoloredPoset& p, const Labeling& reverse_natural) {
  return sum_terms(decompose_strict(p, reverse_natural));
}

BiPoly omega_weak(const BicoloredPoset& p) { return omega_weak(p, natural_labeling(p)); }

BiPoly omega_weak(const BicoloredPoset& p, const Labeling& natural) {
  return sum_terms(decompose_weak(p, natural));
}

BiPoly omega(const BicoloredPoset& p, Mode mode) {
  return mode == Mode::kStrict ? omega_strict(p) : omega_weak(p);
}

CheckReport check_reciprocity_poset(const BicoloredPoset& p) {
  const BiPoly strict = omega_strict(p);
  const BiPoly weak = omega_weak(p);
  BiPoly lhs = strict.substitute_negate();
  if (p.size() % 2 != 0) lhs = -lhs;
  const BiPoly rhs = weak.substitute_shift_y(1);

  CheckReport report{"poset-reciprocity", lhs == rhs, std::nullopt};
  report.details["lhs"] = lhs.to_string();
  report.details["rhs"] = rhs.to_string();
  if (!report.passed) {
    nlohmann::json witness;
    witness["poset"] = p;
    witness["lhs"] = lhs.to_string();
    witness["rhs"] = rhs.to_string();
    if (auto point = find_difference_point(lhs, rhs)) {
      witness["point"] = {{"x", point->first}, {"y", point->second}};
      witness["lhs_value"] = lhs.evaluate(point->first, point->second).to_string();
      witness["rhs_value"] = rhs.evaluate(point->first, point->second).to_string();
    }
    report.witness = std::move(witness);
  }
  return report;
}

CheckReport check_word_reciprocity(const Word& w) {
  w.validate();
  if (!w.celeste_pos) throw InputError("check_word_reciprocity needs a word with a celeste position");
  const int n = w.size();
  const int k = word_k(w);
  const Word prefix = w.celeste_prefix();

  BiPoly lhs = type_strict(w).substitute_negate();
  if (n % 2 != 0) lhs = -lhs;

  // Weak formula for the reversed word: des(reverse(w)) = asc(w) and
  // des(reverse(w~)) = asc(w~), with k unchanged.
  const BiPoly rhs = weak_chain_shifted(n, k, -w.asc(), -prefix.asc()).substitute_shift_y(1);

  const Word same_element = reverse_word(w);
  const BiPoly same_element_rhs = type_weak(same_element).substitute_shift_y(1);
  Word same_position = same_element;
  same_position.celeste_pos = w.celeste_pos;
  const BiPoly same_position_rhs = type_weak(same_position).substitute_shift_y(1);

  CheckReport report{"word-reciprocity", lhs == rhs, std::nullopt};
  report.details["word"] = word_json(w);
  report.details["lhs"] = lhs.to_string();
  report.details["rhs"] = rhs.to_string();
  report.details["same_element_reading"] = same_element_rhs == lhs;
  report.details["same_position_reading"] = same_position_rhs == lhs;
  if (!report.passed) {
    report.witness = nlohmann::json{{"word", word_json(w)}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}};
  }
  return report;
}

}  // namespace biorder
