#pragma once

// Shared lattice-sum engine for every finite model.
//
// A finite model is a chain of slots M < n_1 <=/< n_2 <=/< ... < N. Each slot carries one or
// more alternatives; an alternative is a factor q^a / (1 - q^m)^k, with a and m affine in n and
// N, plus the relation (weak or strict) it imposes on the next slot. Summing over
// alternatives at a slot is how the diamond models sum over their subsets A.
//
// The sum is evaluated left to right with prefix sums over n, so a chain of r slots costs
// O(r * N) kernel products instead of enumerating lattice points.

#include <vector>

#include "qmzv/rational.hpp"
#include "qmzv/series.hpp"

namespace qmzv::detail {

struct Factor {
  int shift_n = 0;       // exponent a = shift_n * n + shift_tail * (N - n)
  int shift_tail = 0;
  bool tail_base = false;  // base m = N - n instead of n
  int power = 0;           // k

  static Factor dagger(int k) { return {1, 0, false, k}; }
  static Factor bz(int k) { return {k - 1, 0, false, k}; }
  static Factor plain(int k) { return {0, 0, false, k}; }
  static Factor bar() { return {0, 0, true, 1}; }
  static Factor boundary_bz() { return {0, 1, true, 1}; }
};

struct Alternative {
  Factor factor;
  bool weak_next = false;
};

using Slot = std::vector<Alternative>;

/// Kernel producing q^a / (1 - q^m)^k as truncated series.
class SeriesKernel {
 public:
  using Value = QSeries;
  explicit SeriesKernel(int order) : order_(order) {}
  Value zero() const { return QSeries(order_); }
  Value one() const { return QSeries::constant(1, order_); }
  bool is_zero(const Value& v) const { return v.is_zero(); }
  Value frac(int a, int m, int k) const { return q_fraction(a, m, k, order_); }

 private:
  int order_;
};

/// Kernel producing the exact value of q^a / (1 - q^m)^k at a rational point q.
class RationalKernel {
 public:
  using Value = Rational;
  explicit RationalKernel(Rational q) : q_(std::move(q)) {
    if (q_ == 0 || q_ == 1 || q_ == -1) throw DomainError("rational q must avoid 0, 1 and -1");
  }
  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value frac(int a, int m, int k) const {
    const Rational denom = 1 - power(q_, m);
    if (sgn(denom) == 0) throw DomainError("vanishing denominator 1 - q^" + std::to_string(m));
    return power(q_, a) / power(denom, k);
  }

 private:
  Rational q_;
};

/// q -> 1 limit of (1-q)^k q^a / (1-q^m)^k, i.e. 1 / m^k; gives the classical harmonic sums.
class ClassicalKernel {
 public:
  using Value = Rational;
  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value frac(int /*a*/, int m, int k) const { return power(Rational(1, m), k); }
};

/// q^a / [m]_q^k with [m]_q = 1 + q + ... + q^{m-1}, at any rational q (q = 1 included). This is
/// (1-q)^k times the RationalKernel value, so it interpolates to the classical sums at q = 1.
class NormalizedKernel {
 public:
  using Value = Rational;
  explicit NormalizedKernel(Rational q) : q_(std::move(q)) {}
  Value zero() const { return 0; }
  Value one() const { return 1; }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value frac(int a, int m, int k) const {
    Rational qint = 0;
    Rational p = 1;
    for (int i = 0; i < m; ++i) {
      qint += p;
      p *= q_;
    }
    if (sgn(qint) == 0) throw DomainError("vanishing q-integer [" + std::to_string(m) + "]");
    return power(q_, a) / power(qint, k);
  }

 private:
  Rational q_;
};

template <class Kernel>
typename Kernel::Value nested_sum(const Kernel& kernel, const std::vector<Slot>& slots, int lower,
                                  int upper) {
  using Value = typename Kernel::Value;
  if (lower < 0 || lower >= upper) throw DomainError("nested sum needs 0 <= M < N");
  if (slots.empty()) return kernel.one();

  // incoming[n]: weight of all configurations of earlier slots that allow the current slot at n.
  std::vector<Value> incoming(static_cast<std::size_t>(upper), kernel.zero());
  for (int n = lower + 1; n < upper; ++n) incoming[static_cast<std::size_t>(n)] = kernel.one();

  Value total = kernel.zero();
  for (std::size_t j = 0; j < slots.size(); ++j) {
    const bool last = j + 1 == slots.size();
    std::vector<Value> weak(static_cast<std::size_t>(upper), kernel.zero());
    std::vector<Value> strict(static_cast<std::size_t>(upper), kernel.zero());
    for (int n = lower + 1; n < upper; ++n) {
      const auto& in = incoming[static_cast<std::size_t>(n)];
      if (kernel.is_zero(in)) continue;
      for (const auto& alt : slots[j]) {
        const Factor& f = alt.factor;
        const int a = f.shift_n * n + f.shift_tail * (upper - n);
        const int m = f.tail_base ? upper - n : n;
        Value term = in * kernel.frac(a, m, f.power);
        if (last) {
          total += term;
        } else if (alt.weak_next) {
          weak[static_cast<std::size_t>(n)] += term;
        } else {
          strict[static_cast<std::size_t>(n)] += term;
        }
      }
    }
    if (last) break;
    // next[n] = sum_{m <= n} weak[m] + sum_{m < n} strict[m]
    Value running = kernel.zero();
    for (int n = lower + 1; n < upper; ++n) {
      if (n - 1 > lower) running += strict[static_cast<std::size_t>(n - 1)];
      running += weak[static_cast<std::size_t>(n)];
      incoming[static_cast<std::size_t>(n)] = running;
    }
  }
  return total;
}

}  // namespace qmzv::detail
