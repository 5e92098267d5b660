#include "qmzv/constructor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>

#include "qmzv/combinat.hpp"

namespace qmzv {

namespace {

void check_eps(int eps) {
  if (eps != 0 && eps != 1) throw DomainError("eps must be 0 or 1");
}

std::vector<Mask> nonempty_subsets(const Mask& m) {
  std::vector<Mask> out;
  const auto bits = m.bits();
  for (std::uint64_t s = bits; s != 0; s = (s - 1) & bits) out.emplace_back(m.universe(), s);
  return out;
}

std::vector<Mask> all_subsets(const Mask& m) {
  auto out = nonempty_subsets(m);
  out.emplace_back(m.universe(), 0);
  return out;
}

AlgebraElement yx_power(int e) { return AlgebraElement(Word::y() * Word::x(e)); }

// Memo keyed on (kind, eps, fault, literal tuple). kind 0 = q-version, 1 = classical.
using Key = std::tuple<int, int, int, std::vector<int>>;
std::mutex g_memo_mutex;
std::map<Key, AlgebraElement> g_memo;

bool lookup(const Key& key, AlgebraElement& out) {
  std::lock_guard lock(g_memo_mutex);
  auto it = g_memo.find(key);
  if (it == g_memo.end()) return false;
  out = it->second;
  return true;
}

void store(const Key& key, const AlgebraElement& value) {
  std::lock_guard lock(g_memo_mutex);
  g_memo.emplace(key, value);
}

AlgebraElement eq_rec(int eps, const std::vector<int>& c, SignFault fault) {
  if (c.empty()) return AlgebraElement::one();
  const Key key{0, eps, static_cast<int>(fault), c};
  AlgebraElement cached;
  if (lookup(key, cached)) return cached;

  const int r = static_cast<int>(c.size()) / 2;
  const auto [ones, big] = split_ones(c);
  const Mask none(2 * r, 0);
  AlgebraElement result;

  for (const Mask& b : nonempty_subsets(big)) {
    const AlgebraElement sub = eq_rec(eps, index_surgery(c, none, b), fault);
    const int sb = sign_power(b.count());
    const int t1 = fault == SignFault::term1_sign ? sb : -sb;
    result += times_x(sub, alpha(b)) * Integer(t1);
    result += sub * signed_yx_range(alpha(b), beta(b)) * Integer(sb);
  }

  for (const Mask& a : tilings(r)) {
    if (a.empty() || !a.subset_of(ones)) continue;
    const int kap = kappa(a);
    const int eo_sign = fault == SignFault::eo_factor ? 1 : sign_power(eo(a));
    for (const Mask& b : all_subsets(big)) {
      const AlgebraElement sub = eq_rec(eps, index_surgery(c, a, b), fault);
      if (sub.is_zero()) continue;
      const int ba = beta_after(a, b);
      for (int h = 1; h <= kap; ++h) {
        const Integer coeff = eo_sign * sign_power(b.count() + kap - h) * binomial(kap - 1, h - 1);
        result += sub * yx_power(h + eps * kap + ba - 1) * coeff;
      }
    }
  }
  store(key, result);
  return result;
}

AlgebraElement classical_rec(int eps, const std::vector<int>& c) {
  if (c.empty()) return AlgebraElement::one();
  const Key key{1, eps, 0, c};
  AlgebraElement cached;
  if (lookup(key, cached)) return cached;

  const int r = static_cast<int>(c.size()) / 2;
  const auto [ones, big] = split_ones(c);
  const Mask none(2 * r, 0);
  AlgebraElement result;

  for (const Mask& b : nonempty_subsets(big)) {
    if (eo(b) != 0) continue;
    const AlgebraElement sub = classical_rec(eps, index_surgery(c, none, b));
    const int nb = b.count();
    result -= times_x(sub, nb) * Integer(sign_power(nb));
    if (nb >= 2) result -= sub * yx_power(nb - 1) * Integer(sign_power(nb));
  }

  for (const Mask& a : tilings(r)) {
    if (!a.subset_of(ones)) continue;
    for (const Mask& b : all_subsets(big)) {
      if (a.count() + b.count() < 2) continue;
      if (oe(sigma_image(a, b)) != 0) continue;
      const AlgebraElement sub = classical_rec(eps, index_surgery(c, a, b));
      const int e = (1 + eps) * kappa(a) + b.count() - 1;
      result += sub * yx_power(e) * Integer(sign_power(eo(a) + b.count()));
    }
  }
  store(key, result);
  return result;
}

AlgebraElement theta_y_only(const AlgebraElement& u) {
  AlgebraElement out;
  for (const auto& [w, coeff] : u.terms()) {
    long ys = 0;
    for (char ch : w.letters()) ys += ch == 'y' ? 1 : 0;
    out.add_term(w, coeff * sign_power(ys));
  }
  return out;
}

}  // namespace

void clear_constructor_cache() {
  std::lock_guard lock(g_memo_mutex);
  g_memo.clear();
}

AlgebraElement signed_yx_range(int lo, int hi) {
  AlgebraElement out;
  if (lo <= hi) {
    for (int h = lo + 1; h <= hi; ++h) out += yx_power(h - 1);
  } else {
    for (int h = hi + 1; h <= lo; ++h) out -= yx_power(h - 1);
  }
  return out;
}

AlgebraElement E_q(int eps, const PairIndex& c, SignFault fault) {
  check_eps(eps);
  return eq_rec(eps, c.flat(), fault);
}

AlgebraElement D_q(const PairIndex& c, SignFault fault) {
  const AlgebraElement e1 = E_q(1, c, fault);
  AlgebraElement twisted = fault == SignFault::theta_sign ? theta_y_only(e1) : theta(e1);
  if (fault != SignFault::d_prefactor) twisted *= Integer(sign_power(c.total()));
  return twisted;
}

AlgebraElement E_classical(int eps, const PairIndex& c) {
  check_eps(eps);
  return classical_rec(eps, c.flat());
}

AlgebraElement D_classical(const PairIndex& c) { return E_classical(1, c); }

std::vector<int> symmetry_reverse(const std::vector<int>& c) {
  if (c.size() % 2 != 0) throw DomainError("flattened pair index must have even length");
  return {c.rbegin(), c.rend()};
}

std::vector<PairIndex> pair_indices_up_to(int max_total) {
  std::vector<PairIndex> out;
  // compositions of t into an even number of positive parts
  for (int t = 0; t <= max_total; ++t) {
    if (t == 0) {
      out.emplace_back();
      continue;
    }
    std::vector<std::vector<int>> comps;
    // bit i set in mask = cut after position i+1 of t units
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (t - 1)); ++mask) {
      std::vector<int> parts;
      int run = 1;
      for (int i = 0; i < t - 1; ++i) {
        if ((mask >> i) & 1U) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      parts.push_back(run);
      if (parts.size() % 2 == 0) comps.push_back(std::move(parts));
    }
    std::sort(comps.begin(), comps.end());
    for (auto& p : comps) out.emplace_back(std::move(p));
  }
  return out;
}

}  // namespace qmzv
