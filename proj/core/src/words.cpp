#include "qmzv/words.hpp"

#include <algorithm>
#include <sstream>

namespace qmzv {

Word::Word(std::string_view letters) : letters_(letters) {
  for (char ch : letters_) {
    if (ch != 'x' && ch != 'y') {
      throw DomainError("word letters must be x or y, got '" + std::string(letters) + "'");
    }
  }
}

Word Word::x(int power) {
  Word w;
  w.letters_.assign(static_cast<std::size_t>(std::max(power, 0)), 'x');
  return w;
}

Word Word::y() { return Word("y"); }

Word operator*(const Word& a, const Word& b) {
  Word w;
  w.letters_ = a.letters_ + b.letters_;
  return w;
}

std::string to_text(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  const auto& s = w.letters();
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (i > 0) out << ' ';
    out << s[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

Word word_from_index(const Index& k) {
  std::string letters;
  for (int kj : k) {
    if (kj < 1) throw DomainError("word_from_index: entries must be >= 1");
    letters += 'y';
    letters.append(static_cast<std::size_t>(kj - 1), 'x');
  }
  return Word(letters);
}

Index index_from_word(const Word& w) {
  const auto& s = w.letters();
  if (!s.empty() && s.front() != 'y') {
    throw DomainError("word '" + s + "' is not in h^1 (it starts with x)");
  }
  Index k;
  for (char ch : s) {
    if (ch == 'y') {
      k.push_back(1);
    } else {
      ++k.back();
    }
  }
  return k;
}

BarIndex::BarIndex(std::vector<int> raw) : entries_(std::move(raw)) {
  for (int e : entries_) {
    if (e < 0) throw DomainError("bar-index entries must be positive or bar");
  }
}

BarIndex BarIndex::plain(const Index& k) {
  for (int e : k) {
    if (e < 1) throw DomainError("plain index entries must be >= 1");
  }
  return BarIndex(k);
}

bool BarIndex::has_bars() const {
  return std::find(entries_.begin(), entries_.end(), 0) != entries_.end();
}

bool BarIndex::admissible() const { return entries_.empty() || entries_.back() != 0; }

std::string to_text(const BarIndex& b) {
  std::ostringstream out;
  for (int i = 0; i < b.size(); ++i) {
    if (i) out << ',';
    if (b.is_bar(i)) {
      out << 'b';
    } else {
      out << b.value(i);
    }
  }
  return out.str();
}

PairIndex::PairIndex(std::vector<int> flat) : flat_(std::move(flat)) {
  if (flat_.size() % 2 != 0) throw DomainError("pair index must have even length");
  for (int e : flat_) {
    if (e < 1) throw DomainError("pair index entries must be >= 1");
  }
}

PairIndex PairIndex::from_lk(const Index& l, const Index& k) {
  if (l.size() != k.size()) throw DomainError("l and k must have equal length");
  std::vector<int> flat;
  for (std::size_t j = 0; j < l.size(); ++j) {
    flat.push_back(l[j]);
    flat.push_back(k[j]);
  }
  return PairIndex(std::move(flat));
}

Index PairIndex::ls() const {
  Index out;
  for (int j = 0; j < depth(); ++j) out.push_back(l(j));
  return out;
}

Index PairIndex::ks() const {
  Index out;
  for (int j = 0; j < depth(); ++j) out.push_back(k(j));
  return out;
}

int PairIndex::total() const {
  int s = 0;
  for (int e : flat_) s += e;
  return s;
}

std::string to_text(const PairIndex& c) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < c.flat().size(); ++i) {
    if (i) out << ',';
    out << c.flat()[i];
  }
  out << ')';
  return out.str();
}

PairIndex bar_to_pairs(const BarIndex& b) {
  if (!b.admissible()) throw DomainError("bar_to_pairs: index ends with a bar");
  std::vector<int> flat;
  int run = 0;
  for (int i = 0; i < b.size(); ++i) {
    if (b.is_bar(i)) {
      ++run;
    } else {
      flat.push_back(run + 1);
      flat.push_back(b.value(i));
      run = 0;
    }
  }
  return PairIndex(std::move(flat));
}

BarIndex pairs_to_bar(const PairIndex& c) {
  std::vector<int> raw;
  for (int j = 0; j < c.depth(); ++j) {
    raw.insert(raw.end(), static_cast<std::size_t>(c.l(j) - 1), 0);
    raw.push_back(c.k(j));
  }
  return BarIndex(std::move(raw));
}

Index pairs_to_diamond_index(const PairIndex& c) {
  Index k;
  for (int j = 0; j < c.depth(); ++j) {
    k.insert(k.end(), static_cast<std::size_t>(c.l(j) - 1), 1);
    k.push_back(c.k(j) + 1);
  }
  return k;
}

int weight(const PairIndex& c) {
  int s = 0;
  for (int j = 0; j < c.depth(); ++j) s += c.k(j) + c.l(j) - 1;
  return s;
}

int weight(const BarIndex& b) {
  int s = 0;
  for (int i = 0; i < b.size(); ++i) s += b.is_bar(i) ? 1 : b.value(i);
  return s;
}

int weight(const Index& k) {
  int s = 0;
  for (int e : k) s += e;
  return s;
}

int weight(const Word& w) { return w.length(); }

AlgebraElement::AlgebraElement(const Word& w, const Integer& c) {
  if (c != 0) terms_.emplace(w, c);
}

Integer AlgebraElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void AlgebraElement::add_term(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const Word& w) {
  AlgebraElement out;
  for (const auto& [wa, ca] : a.terms_) out.terms_.emplace(wa * w, ca);
  return out;
}

AlgebraElement times_x(const AlgebraElement& u, int k) { return u * Word::x(k); }

AlgebraElement times_yx(const AlgebraElement& u, int h) { return u * (Word::y() * Word::x(h)); }

AlgebraElement theta(const AlgebraElement& u) {
  AlgebraElement out;
  for (const auto& [w, c] : u.terms()) out.add_term(w, sign_power(w.length()) * c);
  return out;
}

AlgebraElement graded_part(const AlgebraElement& u, int length) {
  AlgebraElement out;
  for (const auto& [w, c] : u.terms()) {
    if (w.length() == length) out.add_term(w, c);
  }
  return out;
}

int top_degree(const AlgebraElement& u) {
  int d = -1;
  for (const auto& [w, c] : u.terms()) d = std::max(d, w.length());
  return d;
}

bool in_subspace(const Word& w, Subspace space) {
  const auto& s = w.letters();
  if (s.empty()) return true;
  switch (space) {
    case Subspace::H1:
      return s.front() == 'y';
    case Subspace::H0:
      return s.front() == 'y' && s.back() == 'x';
    case Subspace::Hgeq2:
      if (s.front() != 'y') return false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'y' && (i + 1 == s.size() || s[i + 1] != 'x')) return false;
      }
      return true;
  }
  return false;
}

bool membership(const AlgebraElement& u, Subspace space) {
  return std::all_of(u.terms().begin(), u.terms().end(),
                     [space](const auto& t) { return in_subspace(t.first, space); });
}

std::string to_text(const AlgebraElement& u) {
  if (u.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : u.terms()) {
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (w.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << ' ';
      out << to_text(w);
    }
  }
  return out.str();
}

nlohmann::ordered_json to_json(const AlgebraElement& u) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : u.terms()) {
    nlohmann::ordered_json t;
    t["word"] = w.letters();
    t["coeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  nlohmann::ordered_json j;
  j["terms"] = std::move(terms);
  return j;
}

AlgebraElement element_from_json(const nlohmann::json& j) {
  AlgebraElement u;
  for (const auto& t : j.at("terms")) {
    const auto coeff = parse_rational(t.at("coeff").get<std::string>());
    if (coeff.get_den() != 1) throw DomainError("algebra coefficients must be integers");
    u.add_term(Word(t.at("word").get<std::string>()), coeff.get_num());
  }
  return u;
}

}  // namespace qmzv
