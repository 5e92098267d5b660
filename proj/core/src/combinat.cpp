#include "qmzv/combinat.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "qmzv/rational.hpp"

namespace qmzv {
namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << (i - 1); }

}  // namespace

Mask::Mask(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > 64) throw DomainError("mask universe must be within [0, 64]");
  if (n < 64 && (bits >> n) != 0) throw DomainError("mask has elements outside [n]");
}

Mask Mask::from_elements(int n, const std::vector<int>& elements) {
  std::uint64_t bits = 0;
  for (int i : elements) {
    if (i < 1 || i > n) throw DomainError("mask element outside [n]");
    bits |= bit(i);
  }
  return Mask(n, bits);
}

int Mask::count() const { return std::popcount(bits_); }

std::vector<int> Mask::elements() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

Mask Mask::with(int i) const {
  if (i < 1 || i > n_) throw DomainError("mask element outside [n]");
  return Mask(n_, bits_ | bit(i));
}

Mask Mask::operator|(const Mask& other) const {
  return Mask(std::max(n_, other.n_), bits_ | other.bits_);
}

std::string to_text(const Mask& m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i : m.elements()) {
    if (!first) out << ',';
    first = false;
    out << i;
  }
  out << '}';
  return out.str();
}

nlohmann::ordered_json to_json(const Mask& m) { return m.elements(); }

std::vector<Mask> even_odd_sets(int r) {
  std::vector<Mask> out;
  const int slots = std::max(r - 1, 0);
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << slots); ++sel) {
    std::uint64_t bits = 0;
    for (int j = 1; j <= slots; ++j) {
      if ((sel >> (j - 1)) & 1U) bits |= bit(2 * j) | bit(2 * j + 1);
    }
    out.emplace_back(2 * r, bits);
  }
  return out;
}

std::vector<Mask> odd_even_star_sets(int r) {
  std::vector<Mask> out;
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << r); ++sel) {
    // Adjacent odd-even dominoes put 2j and 2j+2 at distance 2.
    if ((sel & (sel >> 1)) != 0) continue;
    std::uint64_t bits = 0;
    for (int j = 1; j <= r; ++j) {
      if ((sel >> (j - 1)) & 1U) bits |= bit(2 * j - 1) | bit(2 * j);
    }
    out.emplace_back(2 * r, bits);
  }
  return out;
}

std::vector<Mask> tilings(int r) {
  if (r < 0 || r > 16) throw DomainError("tilings: r must be within [0, 16]");
  std::set<std::vector<int>> seen;
  std::vector<Mask> out;
  const auto eos = even_odd_sets(r);
  const auto oes = odd_even_star_sets(r);
  for (const auto& s : eos) {
    for (const auto& sp : oes) {
      if (!s.disjoint(sp)) continue;
      const Mask t = s | sp;
      if (seen.insert(t.elements()).second) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int eo(const Mask& s) {
  int count = 0;
  for (int j = 1; 2 * j + 1 <= s.universe(); ++j) {
    if (s.contains(2 * j) && s.contains(2 * j + 1)) ++count;
  }
  return count;
}

int oe(const Mask& s) {
  int count = 0;
  for (int j = 1; 2 * j <= s.universe(); ++j) {
    if (s.contains(2 * j - 1) && s.contains(2 * j)) ++count;
  }
  return count;
}

int kappa(const Mask& t) {
  if (t.count() % 2 != 0) throw DomainError("kappa needs a mask of even cardinality");
  return t.count() / 2;
}

int sigma_map(const Mask& s, int i) {
  if (s.contains(i)) throw DomainError("sigma_S is undefined on elements of S");
  int below = 0;
  for (int e : s.elements()) {
    if (e <= i) ++below;
  }
  return i - below;
}

Mask sigma_image(const Mask& s, const Mask& b) {
  if (!s.disjoint(b)) throw DomainError("sigma_S(B) needs B disjoint from S");
  std::vector<int> image;
  for (int i : b.elements()) image.push_back(sigma_map(s, i));
  return Mask::from_elements(std::max(b.universe() - s.count(), 0), image);
}

int alpha(const Mask& b) { return b.count() - eo(b); }

int beta(const Mask& b) { return b.count() - oe(b); }

int beta_after(const Mask& a, const Mask& b) {
  if (!a.disjoint(b)) throw DomainError("beta_A(B) needs A and B disjoint");
  return beta(sigma_image(a, b));
}

std::pair<Mask, Mask> split_ones(const std::vector<int>& c) {
  const int n = static_cast<int>(c.size());
  std::uint64_t ones = 0;
  std::uint64_t rest = 0;
  for (int i = 1; i <= n; ++i) {
    if (c[static_cast<std::size_t>(i - 1)] == 1) {
      ones |= bit(i);
    } else {
      rest |= bit(i);
    }
  }
  return {Mask(n, ones), Mask(n, rest)};
}

std::vector<int> delete_positions(const std::vector<int>& seq, const Mask& positions) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(seq.size()); ++i) {
    if (!positions.contains(i)) out.push_back(seq[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

std::vector<int> index_surgery(const std::vector<int>& c, const Mask& a, const Mask& b) {
  std::vector<int> work = c;
  for (int i : a.elements()) {
    if (i > static_cast<int>(c.size()) || c[static_cast<std::size_t>(i - 1)] != 1) {
      throw DomainError("index_surgery: A must index entries equal to 1");
    }
  }
  for (int i : b.elements()) {
    if (i > static_cast<int>(c.size()) || c[static_cast<std::size_t>(i - 1)] <= 1) {
      throw DomainError("index_surgery: B must index entries greater than 1");
    }
    --work[static_cast<std::size_t>(i - 1)];
  }
  return delete_positions(work, a);
}

}  // namespace qmzv
