#pragma once

// Brute-force reference implementations used as test oracles. They enumerate lattice points
// directly and share nothing with the library evaluators beyond QSeries storage.

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "qmzv/series.hpp"
#include "qmzv/words.hpp"

namespace oracle {

using qmzv::Rational;
using Series = std::vector<Rational>;

inline Series zero(int order) { return Series(static_cast<std::size_t>(order) + 1, Rational(0)); }

inline Series mul(const Series& a, const Series& b) {
  Series out = zero(static_cast<int>(a.size()) - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

inline void add_into(Series& acc, const Series& s) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s[i];
}

/// q^a / (1 - q^m)^k expanded with the negative-binomial coefficients C(j+k-1, k-1).
inline Series geom(int a, int m, int k, int order) {
  Series out = zero(order);
  if (k == 0) {
    if (a <= order) out[static_cast<std::size_t>(a)] = 1;
    return out;
  }
  for (int j = 0; a + m * j <= order; ++j) {
    Rational c = 1;
    for (int t = 1; t <= k - 1; ++t) c = c * (j + t) / t;
    out[static_cast<std::size_t>(a + m * j)] += c;
    if (m == 0) break;
  }
  return out;
}

inline qmzv::QSeries to_qseries(const Series& s) { return qmzv::QSeries::from_coeffs(s); }

/// Visits all tuples M < n_1 <= ... <= n_r < N with n_i < n_{i+1} where strict[i].
inline void lattice(int r, int M, int N, const std::vector<bool>& strict,
                    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> n(static_cast<std::size_t>(r));
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i == r) {
      visit(n);
      return;
    }
    for (int v = lo; v < N; ++v) {
      n[static_cast<std::size_t>(i)] = v;
      rec(i + 1, strict[static_cast<std::size_t>(i)] ? v + 1 : v);
    }
  };
  rec(0, M + 1);
}

/// Finite dagger model, bars encoded as 0.
inline Series dagger_finite(const std::vector<int>& k, int M, int N, int order) {
  Series acc = zero(order);
  std::vector<bool> strict;
  for (int e : k) strict.push_back(e != 0);
  lattice(static_cast<int>(k.size()), M, N, strict, [&](const std::vector<int>& n) {
    Series term = geom(0, 0, 0, order);
    for (std::size_t j = 0; j < k.size(); ++j) {
      term = mul(term, k[j] == 0 ? geom(0, N - n[j], 1, order) : geom(n[j], n[j], k[j], order));
    }
    add_into(acc, term);
  });
  return acc;
}

inline Series bz_finite(const std::vector<int>& k, int M, int N, int order) {
  Series acc = zero(order);
  lattice(static_cast<int>(k.size()), M, N, std::vector<bool>(k.size(), true), [&](const std::vector<int>& n) {
    Series term = geom(0, 0, 0, order);
    for (std::size_t j = 0; j < k.size(); ++j) term = mul(term, geom(n[j] * (k[j] - 1), n[j], k[j], order));
    add_into(acc, term);
  });
  return acc;
}

/// Diamond models: bz = true uses q^{N-n}/(1-q^{N-n}) on A, otherwise 1/(1-q^{N-n}) and
/// q^n/(1-q^n)^k off A.
inline Series diamond_finite(bool bz, const std::vector<int>& k, int M, int N, int order) {
  Series acc = zero(order);
  std::vector<int> ones;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] == 1) ones.push_back(static_cast<int>(i));
  for (std::uint32_t bits = 0; bits < (1U << ones.size()); ++bits) {
    std::vector<bool> inA(k.size(), false);
    for (std::size_t t = 0; t < ones.size(); ++t)
      if ((bits >> t) & 1U) inA[static_cast<std::size_t>(ones[t])] = true;
    std::vector<bool> strict;
    for (bool a : inA) strict.push_back(!a);
    lattice(static_cast<int>(k.size()), M, N, strict, [&](const std::vector<int>& n) {
      Series term = geom(0, 0, 0, order);
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (inA[j]) {
          term = mul(term, geom(bz ? N - n[j] : 0, N - n[j], 1, order));
        } else {
          term = mul(term, geom(bz ? n[j] * (k[j] - 1) : n[j], n[j], k[j], order));
        }
      }
      add_into(acc, term);
    });
  }
  return acc;
}

/// Infinite models by summing n_r <= order; every admissible summand has valuation >= n_r.
inline Series dagger_infinite(const std::vector<int>& k, int order) {
  Series acc = zero(order);
  std::vector<bool> strict;
  for (int e : k) strict.push_back(e != 0);
  lattice(static_cast<int>(k.size()), 0, order + 1, strict, [&](const std::vector<int>& n) {
    Series term = geom(0, 0, 0, order);
    for (std::size_t j = 0; j < k.size(); ++j)
      if (k[j] != 0) term = mul(term, geom(n[j], n[j], k[j], order));
    add_into(acc, term);
  });
  return acc;
}

inline Series bz_infinite(const std::vector<int>& k, int order) { return bz_finite(k, 0, order + 1, order); }

inline Series sz_infinite(const std::vector<int>& k, int order) {
  Series acc = zero(order);
  lattice(static_cast<int>(k.size()), 0, order + 1, std::vector<bool>(k.size(), true), [&](const std::vector<int>& n) {
    Series term = geom(0, 0, 0, order);
    for (std::size_t j = 0; j < k.size(); ++j) term = mul(term, geom(n[j] * k[j], n[j], k[j], order));
    add_into(acc, term);
  });
  return acc;
}

/// sum_{d | n} d^s
inline Rational divisor_sigma(int n, int s) {
  Rational acc = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Rational p = 1;
    for (int i = 0; i < s; ++i) p *= d;
    acc += p;
  }
  return acc;
}

inline Rational classical_zeta(const std::vector<int>& k, int N) {
  Rational acc = 0;
  lattice(static_cast<int>(k.size()), 0, N, std::vector<bool>(k.size(), true), [&](const std::vector<int>& n) {
    Rational t = 1;
    for (std::size_t j = 0; j < k.size(); ++j)
      for (int e = 0; e < k[j]; ++e) t /= n[j];
    acc += t;
  });
  return acc;
}

inline Rational classical_diamond(const std::vector<int>& k, int N) {
  Rational acc = 0;
  std::vector<int> ones;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] == 1) ones.push_back(static_cast<int>(i));
  for (std::uint32_t bits = 0; bits < (1U << ones.size()); ++bits) {
    std::vector<bool> inA(k.size(), false);
    for (std::size_t t = 0; t < ones.size(); ++t)
      if ((bits >> t) & 1U) inA[static_cast<std::size_t>(ones[t])] = true;
    std::vector<bool> strict;
    for (bool a : inA) strict.push_back(!a);
    lattice(static_cast<int>(k.size()), 0, N, strict, [&](const std::vector<int>& n) {
      Rational t = 1;
      for (std::size_t j = 0; j < k.size(); ++j) {
        if (inA[j]) {
          t /= N - n[j];
        } else {
          for (int e = 0; e < k[j]; ++e) t /= n[j];
        }
      }
      acc += t;
    });
  }
  return acc;
}

/// Exact finite dagger sum at a rational q, bars encoded as 0.
inline Rational dagger_at(const std::vector<int>& k, int N, const Rational& q) {
  auto pw = [](const Rational& b, int e) {
    Rational p = 1;
    for (int i = 0; i < e; ++i) p *= b;
    return p;
  };
  Rational acc = 0;
  std::vector<bool> strict;
  for (int e : k) strict.push_back(e != 0);
  lattice(static_cast<int>(k.size()), 0, N, strict, [&](const std::vector<int>& n) {
    Rational t = 1;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) {
        t /= 1 - pw(q, N - n[j]);
      } else {
        t *= pw(q, n[j]) / pw(1 - pw(q, n[j]), k[j]);
      }
    }
    acc += t;
  });
  return acc;
}

/// Partial tilings of [2r] by brute force over all subsets: keep a set if it splits into
/// disjoint dominoes {2j,2j+1} (1 <= j <= r-1) and {2j-1,2j} with no two of the latter adjacent.
inline std::set<std::uint64_t> tilings(int r) {
  std::set<std::uint64_t> out;
  std::vector<std::uint64_t> eo;
  std::vector<std::uint64_t> oe;
  for (int j = 1; j <= r - 1; ++j) eo.push_back((1ULL << (2 * j - 1)) | (1ULL << (2 * j)));
  for (int j = 1; j <= r; ++j) oe.push_back((1ULL << (2 * j - 2)) | (1ULL << (2 * j - 1)));
  const std::size_t dominoes = eo.size() + oe.size();
  for (std::uint64_t pick = 0; pick < (1ULL << dominoes); ++pick) {
    std::uint64_t used = 0;
    bool ok = true;
    int last_oe = -10;
    for (std::size_t d = 0; d < dominoes && ok; ++d) {
      if (((pick >> d) & 1ULL) == 0) continue;
      const bool is_oe = d >= eo.size();
      const std::uint64_t dom = is_oe ? oe[d - eo.size()] : eo[d];
      if (used & dom) ok = false;
      if (is_oe) {
        const int j = static_cast<int>(d - eo.size());
        if (j == last_oe + 1) ok = false;
        last_oe = j;
      }
      used |= dom;
    }
    if (ok) out.insert(used);
  }
  return out;
}

}  // namespace oracle

namespace qmzv {

// readable gtest failure output
inline void PrintTo(const QSeries& s, std::ostream* os) { *os << to_text(s) << " (order " << s.order() << ")"; }
inline void PrintTo(const AlgebraElement& u, std::ostream* os) { *os << to_text(u); }

}  // namespace qmzv
