#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace qmzv {

/// A subset of [n] = {1, ..., n}, n <= 64, as a bit set (element i is bit i-1).
class Mask {
 public:
  Mask() = default;
  Mask(int n, std::uint64_t bits);
  static Mask from_elements(int n, const std::vector<int>& elements);

  int universe() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int i) const { return i >= 1 && i <= n_ && ((bits_ >> (i - 1)) & 1U) != 0; }
  int count() const;
  bool empty() const { return bits_ == 0; }
  std::vector<int> elements() const;

  Mask with(int i) const;
  bool disjoint(const Mask& other) const { return (bits_ & other.bits_) == 0; }
  bool subset_of(const Mask& other) const { return (bits_ & ~other.bits_) == 0; }
  Mask operator|(const Mask& other) const;

  friend bool operator==(const Mask&, const Mask&) = default;
  friend bool operator<(const Mask& a, const Mask& b) { return a.elements() < b.elements(); }

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

/// "{1,2,5}"
std::string to_text(const Mask& m);
/// Sorted element list.
nlohmann::ordered_json to_json(const Mask& m);

/// Even-odd unions: unions of {2j, 2j+1} over j in subsets of [r-1].
std::vector<Mask> even_odd_sets(int r);
/// Odd-even unions of {2j-1, 2j} over j in subsets of [r], with no two elements at distance 2.
std::vector<Mask> odd_even_star_sets(int r);
/// Partial domino tilings of a row of length 2r with no two odd-even dominoes adjacent:
/// all S u S' with S even-odd, S' odd-even-star, S and S' disjoint. Sorted by element list.
std::vector<Mask> tilings(int r);

/// #{j >= 1 : {2j, 2j+1} in S}
int eo(const Mask& s);
/// #{j >= 1 : {2j-1, 2j} in S}
int oe(const Mask& s);
/// #T / 2; throws DomainError for odd cardinality.
int kappa(const Mask& t);

/// #([i] \ S) for i not in S.
int sigma_map(const Mask& s, int i);
/// Elementwise image of B (disjoint from S) under sigma_S, inside [n - #S].
Mask sigma_image(const Mask& s, const Mask& b);

/// #B - eo(B)
int alpha(const Mask& b);
/// #B - oe(B)
int beta(const Mask& b);
/// beta(sigma_A(B)); A and B must be disjoint.
int beta_after(const Mask& a, const Mask& b);

/// Positions with c_i = 1 and with c_i > 1, as masks over [n].
std::pair<Mask, Mask> split_ones(const std::vector<int>& c);
/// Removes the entries indexed by `positions` (1-based) from `seq`.
std::vector<int> delete_positions(const std::vector<int>& seq, const Mask& positions);
/// c_{A,B}: subtract 1 at the positions of B, then delete the positions of A.
std::vector<int> index_surgery(const std::vector<int>& c, const Mask& a, const Mask& b);

}  // namespace qmzv
