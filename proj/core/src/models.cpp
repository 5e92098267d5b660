#include "qmzv/models.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

#include "nested_sum.hpp"

namespace qmzv {

using detail::Alternative;
using detail::Factor;
using detail::Slot;

namespace {

void check_params(const FiniteEvalParams& p) {
  if (p.M < 0 || p.M >= p.N) throw DomainError("finite models need 0 <= M < N");
  if (p.order < 0) throw DomainError("series order must be non-negative");
}

std::vector<Slot> dagger_slots(const BarIndex& k) {
  if (!k.admissible()) throw DomainError("dagger model needs an admissible index (last entry not a bar)");
  std::vector<Slot> slots;
  for (int i = 0; i < k.size(); ++i) {
    if (k.is_bar(i)) {
      slots.push_back({Alternative{Factor::bar(), true}});
    } else {
      slots.push_back({Alternative{Factor::dagger(k.value(i)), false}});
    }
  }
  return slots;
}

void check_plain(const Index& k, const char* what) {
  for (int e : k) {
    if (e < 1) throw DomainError(std::string(what) + ": entries must be >= 1");
  }
}

std::vector<Slot> bz_slots(const Index& k) {
  check_plain(k, "BZ model");
  std::vector<Slot> slots;
  for (int e : k) slots.push_back({Alternative{Factor::bz(e), false}});
  return slots;
}

std::vector<Slot> diamond_slots(DiamondVariant variant, const Index& k) {
  check_plain(k, "diamond model");
  if (!k.empty() && k.back() == 1) throw DomainError("diamond model needs k_r != 1");
  const bool bz = variant == DiamondVariant::BZ;
  std::vector<Slot> slots;
  for (int e : k) {
    const Factor main = bz ? Factor::bz(e) : Factor::dagger(e);
    if (e == 1) {
      const Factor boundary = bz ? Factor::boundary_bz() : Factor::bar();
      slots.push_back({Alternative{boundary, true}, Alternative{main, false}});
    } else {
      slots.push_back({Alternative{main, false}});
    }
  }
  return slots;
}

std::vector<Slot> msw_slots(const Index& k) {
  check_plain(k, "MSW block sum");
  std::vector<Slot> slots;
  for (int e : k) {
    for (int i = 0; i < e; ++i) {
      const Factor f = i == 0 ? Factor::boundary_bz() : Factor::plain(1);
      slots.push_back({Alternative{f, i + 1 < e}});
    }
  }
  return slots;
}

// T_j(n) = factor(j, n) * sum_{0 <= m < n} weight(j, n, m) T_{j-1}(m), T_0 = [n == 0],
// for 1 <= n <= order. Returns sum_n T_r(n).
QSeries infinite_chain(int order, int depth, const std::function<QSeries(int, int)>& factor,
                       const std::function<Integer(int, int, int)>& weight) {
  if (depth == 0) return QSeries::constant(1, order);
  std::vector<QSeries> prev(static_cast<std::size_t>(order) + 1, QSeries(order));
  prev[0] = QSeries::constant(1, order);
  for (int j = 0; j < depth; ++j) {
    std::vector<QSeries> cur(static_cast<std::size_t>(order) + 1, QSeries(order));
    for (int n = 1; n <= order; ++n) {
      QSeries f = factor(j, n);
      if (f.is_zero()) continue;
      QSeries acc(order);
      for (int m = 0; m < n; ++m) {
        const auto& t = prev[static_cast<std::size_t>(m)];
        if (t.is_zero()) continue;
        const Integer w = weight(j, n, m);
        if (w == 0) continue;
        acc += t * Rational(w);
      }
      if (!acc.is_zero()) cur[static_cast<std::size_t>(n)] = f * acc;
    }
    prev = std::move(cur);
  }
  QSeries total(order);
  for (const auto& t : prev) total += t;
  return total;
}

Integer unit_weight(int, int, int) { return 1; }

QSeries poly_at_qn(const std::vector<Rational>& poly, int n, int order) {
  QSeries s(order);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const long e = static_cast<long>(n) * static_cast<long>(i);
    if (e <= order) s[static_cast<int>(e)] += poly[i];
  }
  return s;
}

// Memo for word evaluations; evaluators are pure so a shared cache is safe.
using CacheKey = std::tuple<int, std::string, int, int, int>;
std::mutex g_cache_mutex;
std::map<CacheKey, QSeries> g_word_cache;

QSeries eval_word(ZModel model, const Word& w, const FiniteEvalParams& p) {
  const bool infinite = model == ZModel::DaggerInfinite || model == ZModel::BZInfinite;
  const CacheKey key{static_cast<int>(model), w.letters(), infinite ? 0 : p.M, infinite ? 0 : p.N,
                     p.order};
  {
    std::lock_guard lock(g_cache_mutex);
    auto it = g_word_cache.find(key);
    if (it != g_word_cache.end()) return it->second;
  }
  const Index k = index_from_word(w);
  QSeries value(p.order);
  switch (model) {
    case ZModel::DaggerFinite:
      value = zeta_dagger_finite(BarIndex::plain(k), p);
      break;
    case ZModel::BZFinite:
      value = zeta_bz_finite(k, p);
      break;
    case ZModel::DaggerInfinite:
      value = zeta_dagger_infinite(BarIndex::plain(k), p.order);
      break;
    case ZModel::BZInfinite:
      value = zeta_bz_infinite(k, p.order);
      break;
  }
  std::lock_guard lock(g_cache_mutex);
  g_word_cache.emplace(key, value);
  return value;
}

}  // namespace

void clear_word_cache() {
  std::lock_guard lock(g_cache_mutex);
  g_word_cache.clear();
}

QSeries zeta_dagger_finite(const BarIndex& k, const FiniteEvalParams& p) {
  check_params(p);
  return detail::nested_sum(detail::SeriesKernel(p.order), dagger_slots(k), p.M, p.N);
}

QSeries zeta_bz_finite(const Index& k, const FiniteEvalParams& p) {
  check_params(p);
  return detail::nested_sum(detail::SeriesKernel(p.order), bz_slots(k), p.M, p.N);
}

QSeries zeta_diamond_finite(DiamondVariant variant, const Index& k, const FiniteEvalParams& p) {
  check_params(p);
  return detail::nested_sum(detail::SeriesKernel(p.order), diamond_slots(variant, k), p.M, p.N);
}

QSeries xi(int eps, const PairIndex& c, const FiniteEvalParams& p) {
  if (eps == 0) return zeta_dagger_finite(pairs_to_bar(c), p);
  if (eps == 1) return zeta_diamond_finite(DiamondVariant::Dagger, pairs_to_diamond_index(c), p);
  throw DomainError("eps must be 0 or 1");
}

QSeries msw_block_sum(const Index& k, const FiniteEvalParams& p) {
  check_params(p);
  return detail::nested_sum(detail::SeriesKernel(p.order), msw_slots(k), p.M, p.N);
}

QSeries zeta_dagger_infinite(const BarIndex& k, int order) {
  const PairIndex c = bar_to_pairs(k);
  // Between consecutive strict variables, l_j - 1 weakly increasing bars contribute a factor 1
  // each; counting them gives C(n_j - n_{j-1} + l_j - 2, l_j - 1).
  return infinite_chain(
      order, c.depth(), [&](int j, int n) { return q_fraction(n, n, c.k(j), order); },
      [&](int j, int n, int m) { return binomial(n - m + c.l(j) - 2, c.l(j) - 1); });
}

QSeries zeta_bz_infinite(const Index& k, int order) {
  check_plain(k, "BZ model");
  if (!k.empty() && k.back() < 2) throw DomainError("infinite BZ model needs k_r >= 2");
  return infinite_chain(
      order, static_cast<int>(k.size()),
      [&](int j, int n) {
        const int e = k[static_cast<std::size_t>(j)];
        return q_fraction(n * (e - 1), n, e, order);
      },
      unit_weight);
}

QSeries zeta_sz_infinite(const Index& k, int order) {
  for (int e : k) {
    if (e < 0) throw DomainError("SZ model entries must be >= 0");
  }
  if (!k.empty() && k.back() < 1) throw DomainError("SZ model needs k_r >= 1");
  return infinite_chain(
      order, static_cast<int>(k.size()),
      [&](int j, int n) {
        const int e = k[static_cast<std::size_t>(j)];
        return q_fraction(n * e, n, e, order);
      },
      unit_weight);
}

QSeries zeta_infinite(InfiniteModel model, const std::vector<int>& entries, int order) {
  switch (model) {
    case InfiniteModel::Dagger:
      return zeta_dagger_infinite(BarIndex(entries), order);
    case InfiniteModel::BZ:
      return zeta_bz_infinite(entries, order);
    case InfiniteModel::SZ:
      return zeta_sz_infinite(entries, order);
  }
  throw DomainError("unknown infinite model");
}

QSeries zeta_q_poly(const PolyModelArg& arg, int order) {
  if (arg.k.size() != arg.polys.size()) throw DomainError("poly model: one polynomial per entry");
  check_plain(arg.k, "poly model");
  for (std::size_t j = 0; j < arg.k.size(); ++j) {
    const auto& poly = arg.polys[j];
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (static_cast<int>(i) > arg.k[j] && sgn(poly[i]) != 0) {
        throw DomainError("poly model: deg Q_j must not exceed k_j");
      }
    }
  }
  if (!arg.polys.empty() && !arg.polys.back().empty() && sgn(arg.polys.back()[0]) != 0) {
    throw DomainError("poly model: Q_r must have zero constant term");
  }
  return infinite_chain(
      order, static_cast<int>(arg.k.size()),
      [&](int j, int n) {
        return poly_at_qn(arg.polys[static_cast<std::size_t>(j)], n, order) *
               inv_one_minus_qn(n, arg.k[static_cast<std::size_t>(j)], order);
      },
      unit_weight);
}

QSeries z_map(ZModel model, const AlgebraElement& u, const FiniteEvalParams& p) {
  if (!membership(u, Subspace::H1)) throw DomainError("Z map needs an element of h^1");
  if (model == ZModel::BZInfinite && !membership(u, Subspace::H0)) {
    throw DomainError("infinite BZ map needs admissible monomials (an element of h^0)");
  }
  if (model == ZModel::DaggerFinite || model == ZModel::BZFinite) check_params(p);
  QSeries total(p.order);
  for (const auto& [w, c] : u.terms()) total += eval_word(model, w, p) * Rational(c);
  return total;
}

Rational z_classical(const AlgebraElement& u, int N) {
  if (!membership(u, Subspace::H1)) throw DomainError("Z_N needs an element of h^1");
  Rational total = 0;
  for (const auto& [w, c] : u.terms()) total += Rational(c) * classical_zeta(index_from_word(w), N);
  return total;
}

Rational classical_zeta(const Index& k, int N) {
  if (N < 1) throw DomainError("classical sums need N >= 1");
  return detail::nested_sum(detail::ClassicalKernel{}, bz_slots(k), 0, N);
}

Rational classical_diamond(const Index& k, int N) {
  if (N < 1) throw DomainError("classical sums need N >= 1");
  return detail::nested_sum(detail::ClassicalKernel{}, diamond_slots(DiamondVariant::BZ, k), 0, N);
}

Rational classical_binom(const PairIndex& c, int N) {
  if (N < 1) throw DomainError("classical sums need N >= 1");
  return detail::nested_sum(detail::ClassicalKernel{}, dagger_slots(pairs_to_bar(c)), 0, N);
}

Rational eval_at_rational_q(FiniteModel model, const BarIndex& k, int N, const Rational& qval, int M) {
  if (M < 0 || M >= N) throw DomainError("finite models need 0 <= M < N");
  const detail::RationalKernel kernel(qval);
  if (model != FiniteModel::Dagger && k.has_bars()) {
    throw DomainError("bar entries are only valid for the dagger model");
  }
  switch (model) {
    case FiniteModel::Dagger:
      return detail::nested_sum(kernel, dagger_slots(k), M, N);
    case FiniteModel::BZ:
      return detail::nested_sum(kernel, bz_slots(k.raw()), M, N);
    case FiniteModel::DiamondBZ:
      return detail::nested_sum(kernel, diamond_slots(DiamondVariant::BZ, k.raw()), M, N);
    case FiniteModel::DiamondDagger:
      return detail::nested_sum(kernel, diamond_slots(DiamondVariant::Dagger, k.raw()), M, N);
  }
  throw DomainError("unknown finite model");
}

Rational eval_normalized_at(FiniteModel model, const BarIndex& k, int N, const Rational& qval) {
  if (N < 1) throw DomainError("finite models need N >= 1");
  const detail::NormalizedKernel kernel(qval);
  if (model != FiniteModel::Dagger && k.has_bars()) {
    throw DomainError("bar entries are only valid for the dagger model");
  }
  switch (model) {
    case FiniteModel::Dagger:
      return detail::nested_sum(kernel, dagger_slots(k), 0, N);
    case FiniteModel::BZ:
      return detail::nested_sum(kernel, bz_slots(k.raw()), 0, N);
    case FiniteModel::DiamondBZ:
      return detail::nested_sum(kernel, diamond_slots(DiamondVariant::BZ, k.raw()), 0, N);
    case FiniteModel::DiamondDagger:
      return detail::nested_sum(kernel, diamond_slots(DiamondVariant::Dagger, k.raw()), 0, N);
  }
  throw DomainError("unknown finite model");
}

Rational z_map_at(ZModel model, const AlgebraElement& u, int N, const Rational& qval) {
  if (!membership(u, Subspace::H1)) throw DomainError("Z map needs an element of h^1");
  FiniteModel fm{};
  if (model == ZModel::DaggerFinite) {
    fm = FiniteModel::Dagger;
  } else if (model == ZModel::BZFinite) {
    fm = FiniteModel::BZ;
  } else {
    throw DomainError("rational-point evaluation is only defined for the finite maps");
  }
  Rational total = 0;
  for (const auto& [w, c] : u.terms()) {
    total += Rational(c) * eval_at_rational_q(fm, BarIndex::plain(index_from_word(w)), N, qval);
  }
  return total;
}

Report verify_bridge(const Word& w, int N, const Rational& qval) {
  nlohmann::ordered_json params;
  params["word"] = w.letters();
  params["N"] = N;
  params["q"] = to_string(qval);
  const AlgebraElement u(w);
  const Rational lhs = z_map_at(ZModel::DaggerFinite, u, N, 1 / qval);
  const Rational rhs = sign_power(weight(w)) * z_map_at(ZModel::BZFinite, u, N, qval);
  return compare_rational("bridge", std::move(params), lhs, rhs);
}

ModelName parse_model_name(std::string_view name) {
  static const std::map<std::string_view, ModelName> names{
      {"dagger", ModelName::Dagger},        {"bz", ModelName::BZ},
      {"sz", ModelName::SZ},                {"poly", ModelName::Poly},
      {"diamond-bz", ModelName::DiamondBZ}, {"diamond-dagger", ModelName::DiamondDagger},
      {"xi", ModelName::Xi},                {"classical", ModelName::Classical}};
  auto it = names.find(name);
  if (it == names.end()) throw DomainError("unknown model '" + std::string(name) + "'");
  return it->second;
}

}  // namespace qmzv
