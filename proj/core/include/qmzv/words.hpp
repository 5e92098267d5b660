#pragma once

#include <json.hpp>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmzv/rational.hpp"

namespace qmzv {

/// Plain index (k_1, ..., k_r). Entries are >= 1 for the dagger/BZ models and >= 0 for SZ.
using Index = std::vector<int>;

/// A word over the alphabet {x, y}, stored as a packed byte string.
class Word {
 public:
  Word() = default;
  /// Accepts only the letters 'x' and 'y'.
  explicit Word(std::string_view letters);

  static Word x(int power = 1);
  static Word y();

  const std::string& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

/// Text rendering with run-length exponents: "y x^2 y"; the empty word is "1".
std::string to_text(const Word& w);

/// y x^{k_1-1} ... y x^{k_r-1}; the empty index gives the empty word.
Word word_from_index(const Index& k);
/// Inverse of word_from_index on words in y{x,y}* and the empty word.
Index index_from_word(const Word& w);

/// Index with optional bar-one entries; bars are stored as 0 internally.
class BarIndex {
 public:
  BarIndex() = default;
  /// Entries: positive integers, or 0 for a bar-one.
  explicit BarIndex(std::vector<int> raw);
  static BarIndex plain(const Index& k);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  bool is_bar(int i) const { return entries_[static_cast<std::size_t>(i)] == 0; }
  int value(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  bool has_bars() const;
  /// Empty, or last entry is not a bar.
  bool admissible() const;
  const std::vector<int>& raw() const { return entries_; }

  friend bool operator==(const BarIndex&, const BarIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// "b,b,3" style rendering (the CLI's encoding of bars).
std::string to_text(const BarIndex& b);

/// Run-length form (l_1, k_1, ..., l_r, k_r) of an admissible bar-index, all entries >= 1.
/// Also the flattened argument c = (c_1, ..., c_{2r}) of the word constructors.
class PairIndex {
 public:
  PairIndex() = default;
  /// Flattened tuple; must have even length and positive entries.
  explicit PairIndex(std::vector<int> flat);
  static PairIndex from_lk(const Index& l, const Index& k);

  int depth() const { return static_cast<int>(flat_.size()) / 2; }
  int l(int j) const { return flat_[2 * static_cast<std::size_t>(j)]; }
  int k(int j) const { return flat_[2 * static_cast<std::size_t>(j) + 1]; }
  Index ls() const;
  Index ks() const;
  const std::vector<int>& flat() const { return flat_; }
  int total() const;

  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;

 private:
  std::vector<int> flat_;
};

std::string to_text(const PairIndex& c);

/// Admissible bar-index -> run-length pairs.
PairIndex bar_to_pairs(const BarIndex& b);
/// ({bar}^{l_1-1}, k_1, ..., {bar}^{l_r-1}, k_r)
BarIndex pairs_to_bar(const PairIndex& c);
/// ({1}^{l_1-1}, k_1+1, ..., {1}^{l_r-1}, k_r+1), the argument of the diamond models.
Index pairs_to_diamond_index(const PairIndex& c);

/// sum_j (k_j + l_j - 1)
int weight(const PairIndex& c);
/// sum of the entries (a bar counts 1)
int weight(const BarIndex& b);
int weight(const Index& k);
int weight(const Word& w);

/// Finite Z-linear combination of words with nonzero integer coefficients, kept canonical
/// and ordered lexicographically by word.
class AlgebraElement {
 public:
  using Terms = std::map<Word, Integer>;

  AlgebraElement() = default;
  /// c * w
  AlgebraElement(const Word& w, const Integer& c = 1);
  static AlgebraElement one() { return AlgebraElement(Word{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(const Word& w) const;

  void add_term(const Word& w, const Integer& c);

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Integer& c);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= -1; }
  friend AlgebraElement operator*(AlgebraElement a, const Integer& c) { return a *= c; }
  friend AlgebraElement operator*(const Integer& c, AlgebraElement a) { return a *= c; }
  /// Concatenation product, extended bilinearly.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const Word& w);

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Terms terms_;
};

/// Right multiplication by x^k.
AlgebraElement times_x(const AlgebraElement& u, int k);
/// Right multiplication by y x^h.
AlgebraElement times_yx(const AlgebraElement& u, int h);

/// The automorphism x -> -x, y -> -y: each word w picks up (-1)^{|w|}.
AlgebraElement theta(const AlgebraElement& u);

/// Sum of terms whose word has exactly `length` letters.
AlgebraElement graded_part(const AlgebraElement& u, int length);
/// Largest word length present, or -1 for zero.
int top_degree(const AlgebraElement& u);

enum class Subspace { H1, H0, Hgeq2 };

bool in_subspace(const Word& w, Subspace space);
bool membership(const AlgebraElement& u, Subspace space);

/// Signed integer combination, e.g. "y x^2 - 3 y y + 1"; "0" for the zero element.
std::string to_text(const AlgebraElement& u);
/// {"terms":[{"word":"yxx","coeff":"-3"}, ...]}
nlohmann::ordered_json to_json(const AlgebraElement& u);
AlgebraElement element_from_json(const nlohmann::json& j);

}  // namespace qmzv
