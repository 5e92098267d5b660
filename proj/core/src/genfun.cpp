#include "qmzv/genfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qmzv/combinat.hpp"
#include "qmzv/models.hpp"
#include "qmzv/words.hpp"

namespace qmzv {

namespace {

std::size_t checked_size(int nvars, int maxdeg) {
  if (nvars < 0 || maxdeg < 0) throw DomainError("MultiPoly needs nvars >= 0 and maxdeg >= 0");
  std::size_t size = 1;
  for (int i = 0; i < nvars; ++i) {
    size *= static_cast<std::size_t>(maxdeg) + 1;
    if (size > (std::size_t{1} << 24)) throw DomainError("MultiPoly too large");
  }
  return size;
}

}  // namespace

MultiPoly::MultiPoly(int nvars, int maxdeg, int order)
    : nvars_(nvars), maxdeg_(maxdeg), order_(order),
      terms_(checked_size(nvars, maxdeg), QSeries(order)) {}

MultiPoly MultiPoly::constant(int nvars, int maxdeg, const QSeries& c) {
  MultiPoly p(nvars, maxdeg, c.order());
  p.terms_[0] = c;
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int maxdeg, int var, const QSeries& c) {
  if (var < 0 || var >= nvars) throw DomainError("MultiPoly variable out of range");
  MultiPoly p(nvars, maxdeg, c.order());
  if (maxdeg >= 1) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(var)] = 1;
    p[e] = c;
  }
  return p;
}

std::size_t MultiPoly::flat(const Exponents& e) const {
  if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent tuple has wrong length");
  std::size_t idx = 0;
  for (int v : e) {
    if (v < 0 || v > maxdeg_) throw DomainError("exponent outside the truncation box");
    idx = idx * (static_cast<std::size_t>(maxdeg_) + 1) + static_cast<std::size_t>(v);
  }
  return idx;
}

MultiPoly::Exponents MultiPoly::exponents(std::size_t i) const {
  Exponents e(static_cast<std::size_t>(nvars_), 0);
  const auto base = static_cast<std::size_t>(maxdeg_) + 1;
  for (int v = nvars_ - 1; v >= 0; --v) {
    e[static_cast<std::size_t>(v)] = static_cast<int>(i % base);
    i /= base;
  }
  return e;
}

void MultiPoly::require_compatible(const MultiPoly& rhs, const char* op) const {
  if (nvars_ != rhs.nvars_ || maxdeg_ != rhs.maxdeg_ || order_ != rhs.order_) {
    throw DomainError(std::string("MultiPoly shape mismatch in ") + op);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_compatible(rhs, "+");
  for (std::size_t i = 0; i < terms_.size(); ++i) terms_[i] += rhs.terms_[i];
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_compatible(rhs, "-");
  for (std::size_t i = 0; i < terms_.size(); ++i) terms_[i] -= rhs.terms_[i];
  return *this;
}

MultiPoly& MultiPoly::operator*=(const QSeries& c) {
  for (auto& t : terms_) {
    if (!t.is_zero()) t *= c;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_compatible(b, "*");
  MultiPoly out(a.nvars_, a.maxdeg_, a.order_);
  std::vector<std::pair<std::size_t, MultiPoly::Exponents>> nb;
  for (std::size_t j = 0; j < b.terms_.size(); ++j) {
    if (!b.terms_[j].is_zero()) nb.emplace_back(j, b.exponents(j));
  }
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].is_zero()) continue;
    const auto ea = a.exponents(i);
    for (const auto& [j, eb] : nb) {
      bool fits = true;
      for (std::size_t v = 0; v < ea.size(); ++v) {
        if (ea[v] + eb[v] > a.maxdeg_) {
          fits = false;
          break;
        }
      }
      // digit-wise sums stay below the base, so flat indices add without carries
      if (fits) out.terms_[i + j] += a.terms_[i] * b.terms_[j];
    }
  }
  return out;
}

MultiPoly MultiPoly::inverse() const {
  const QSeries inv0 = invert_unit(terms_[0]);
  std::vector<std::size_t> by_degree(terms_.size());
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::vector<int> degree(terms_.size());
  std::vector<Exponents> exps(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    exps[i] = exponents(i);
    degree[i] = std::accumulate(exps[i].begin(), exps[i].end(), 0);
  }
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](std::size_t x, std::size_t y) { return degree[x] < degree[y]; });
  std::vector<std::size_t> nonzero;
  for (std::size_t f = 1; f < terms_.size(); ++f) {
    if (!terms_[f].is_zero()) nonzero.push_back(f);
  }

  MultiPoly out(nvars_, maxdeg_, order_);
  out.terms_[0] = inv0;
  for (std::size_t e : by_degree) {
    if (e == 0) continue;
    QSeries acc(order_);
    for (std::size_t f : nonzero) {
      bool below = true;
      for (std::size_t v = 0; v < exps[e].size(); ++v) {
        if (exps[f][v] > exps[e][v]) {
          below = false;
          break;
        }
      }
      if (below && !out.terms_[e - f].is_zero()) acc += terms_[f] * out.terms_[e - f];
    }
    out.terms_[e] = -(inv0 * acc);
  }
  return out;
}

MultiPoly MultiPoly::embed(int target_nvars, const std::vector<int>& positions) const {
  if (static_cast<int>(positions.size()) != nvars_) throw DomainError("embed needs one position per variable");
  MultiPoly out(target_nvars, maxdeg_, order_);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].is_zero()) continue;
    const auto e = exponents(i);
    Exponents t(static_cast<std::size_t>(target_nvars), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      const int p = positions[v];
      if (p < 0 || p >= target_nvars) throw DomainError("embed position out of range");
      t[static_cast<std::size_t>(p)] += e[v];
    }
    out[t] += terms_[i];
  }
  return out;
}

Report compare_multipoly(std::string identity, nlohmann::ordered_json params, const MultiPoly& lhs,
                         const MultiPoly& rhs) {
  if (lhs.nvars() != rhs.nvars() || lhs.maxdeg() != rhs.maxdeg() || lhs.order() != rhs.order()) {
    throw DomainError("compare_multipoly: shape mismatch");
  }
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs.at_flat(i) == rhs.at_flat(i)) continue;
    Report r = compare_series(identity, params, lhs.at_flat(i), rhs.at_flat(i));
    r.witness->u_exponents = lhs.exponents(i);
    return r;
  }
  return make_pass(std::move(identity), std::move(params));
}

namespace {

void check_eps(int eps) {
  if (eps != 0 && eps != 1) throw DomainError("eps must be 0 or 1");
}

void check_range(int M, int N, int r, int maxdeg, int order) {
  if (M < 0 || M >= N) throw DomainError("generating functions need 0 <= M < N");
  if (r < 0) throw DomainError("r must be >= 0");
  if (maxdeg < 0 || order < 0) throw DomainError("maxdeg and order must be >= 0");
}

// sum_{t=0}^{maxdeg} u_var^t c^t
MultiPoly geometric(int nvars, int maxdeg, int var, const QSeries& c) {
  MultiPoly out = MultiPoly::constant(nvars, maxdeg, QSeries::constant(1, c.order()));
  QSeries power = QSeries::constant(1, c.order());
  MultiPoly::Exponents e(static_cast<std::size_t>(nvars), 0);
  for (int t = 1; t <= maxdeg; ++t) {
    power *= c;
    e[static_cast<std::size_t>(var)] = t;
    out[e] = power;
  }
  return out;
}

// sum_{t=0}^{maxdeg} u_var^t q^n / [n]^{t + first}
MultiPoly final_factor(int nvars, int maxdeg, int var, int n, int first, int order) {
  MultiPoly out(nvars, maxdeg, order);
  MultiPoly::Exponents e(static_cast<std::size_t>(nvars), 0);
  for (int t = 0; t <= maxdeg; ++t) {
    e[static_cast<std::size_t>(var)] = t;
    out[e] = q_fraction(n, n, t + first, order);
  }
  return out;
}

QSeries unit(int order) { return QSeries::constant(1, order); }

// [N] - (u + v - uv) in the given variables
MultiPoly bracket_sum_factor(int nvars, int maxdeg, int N, int u, int v, int order) {
  MultiPoly f = MultiPoly::constant(nvars, maxdeg, bracket(N, order));
  f -= MultiPoly::variable(nvars, maxdeg, u, unit(order));
  f -= MultiPoly::variable(nvars, maxdeg, v, unit(order));
  f += MultiPoly::variable(nvars, maxdeg, u, unit(order)) * MultiPoly::variable(nvars, maxdeg, v, unit(order));
  return f;
}

std::vector<int> iota_from(int start, int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), start);
  return v;
}

nlohmann::ordered_json gen_params(int eps, int M, int N, int r, int maxdeg, int order) {
  nlohmann::ordered_json p;
  p["eps"] = eps;
  p["M"] = M;
  p["N"] = N;
  p["r"] = r;
  p["maxdeg"] = maxdeg;
  p["order"] = order;
  return p;
}

}  // namespace

MultiPoly G_truncated(int eps, int M, int N, int r, int maxdeg, int order) {
  check_eps(eps);
  check_range(M, N, r, maxdeg, order);
  const int nv = 2 * r;
  if (r == 0) return MultiPoly::constant(0, maxdeg, unit(order));

  // incoming[n]: weight of the earlier blocks when the current block may start at n
  std::vector<MultiPoly> incoming(static_cast<std::size_t>(N), MultiPoly(nv, maxdeg, order));
  for (int n = M + 1; n < N; ++n) {
    incoming[static_cast<std::size_t>(n)] = MultiPoly::constant(nv, maxdeg, unit(order));
  }

  MultiPoly total(nv, maxdeg, order);
  for (int j = 0; j < r; ++j) {
    const int yvar = 2 * j;
    const int xvar = 2 * j + 1;
    MultiPoly running(nv, maxdeg, order);  // Y * sum_{m<n} (weak + strict)(m) T(m)
    MultiPoly finished(nv, maxdeg, order);  // sum_{m<n} F(m)
    std::vector<MultiPoly> next(static_cast<std::size_t>(N), MultiPoly(nv, maxdeg, order));
    for (int n = M + 1; n < N; ++n) {
      next[static_cast<std::size_t>(n)] = finished;
      const QSeries weak = inv_one_minus_qn(N - n, 1, order);
      QSeries step = weak;
      if (eps == 1) step += q_fraction(n, n, 1, order);
      const MultiPoly t = (incoming[static_cast<std::size_t>(n)] + running) * geometric(nv, maxdeg, yvar, weak);
      running += t * MultiPoly::variable(nv, maxdeg, yvar, step);
      const MultiPoly f = t * final_factor(nv, maxdeg, xvar, n, 1 + eps, order);
      finished += f;
      if (j + 1 == r) total += f;
    }
    incoming = std::move(next);
  }
  return total;
}

MultiPoly G_from_xi(int eps, int M, int N, int r, int maxdeg, int order) {
  check_eps(eps);
  check_range(M, N, r, maxdeg, order);
  MultiPoly out(2 * r, maxdeg, order);
  const FiniteEvalParams p{M, N, order};
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto c = out.exponents(i);
    for (int& v : c) ++v;
    out[out.exponents(i)] = xi(eps, PairIndex(c), p);
  }
  return out;
}

MultiPoly G_tilde(const MultiPoly& gp, int N) {
  if (gp.nvars() % 2 != 0) throw DomainError("G_tilde needs an even number of variables");
  MultiPoly out = gp;
  for (int i = 0; i < gp.nvars() / 2; ++i) {
    out = out * bracket_sum_factor(gp.nvars(), gp.maxdeg(), N, 2 * i, 2 * i + 1, gp.order());
  }
  return out;
}

Kernels AB_kernels(int M, int N, int eps, int order, int maxdeg) {
  check_eps(eps);
  if (M <= 0 || M >= N) throw DomainError("kernels A_M, B_M need 0 < M < N");
  const QSeries bnm = bracket(N - M, order);
  const QSeries bm = bracket(M, order);
  const QSeries inv_bm = invert_unit(bm);
  const QSeries qm = QSeries::monomial(M, 1, order);

  auto tail = [&](int nvars, int yvar) {
    MultiPoly d = MultiPoly::constant(nvars, maxdeg, bnm) - MultiPoly::variable(nvars, maxdeg, yvar, unit(order));
    return d.inverse() * bnm;
  };

  MultiPoly A = tail(1, 0);
  if (eps == 1) {
    A = A * (MultiPoly::constant(1, maxdeg, unit(order)) + MultiPoly::variable(1, maxdeg, 0, qm * inv_bm));
  }

  QSeries lead = qm;
  if (eps == 1) lead *= inv_bm;
  // variables (u_X, u_Y)
  const MultiPoly num = bracket_sum_factor(2, maxdeg, N, 0, 1, order);
  const MultiPoly den = MultiPoly::constant(2, maxdeg, bm) - MultiPoly::variable(2, maxdeg, 0, unit(order));
  MultiPoly B = tail(2, 1) * num * den.inverse() * lead;
  return {std::move(A), std::move(B)};
}

Report verify_G_diff(int eps, int M, int N, int r, int maxdeg, int order) {
  auto params = gen_params(eps, M, N, r, maxdeg, order);
  if (M <= 0 || M >= N) throw DomainError("G_diff needs 0 < M < N");
  if (r < 1) throw DomainError("G_diff needs r >= 1");
  const int nv = 2 * r;
  const MultiPoly g_prev = G_truncated(eps, M - 1, N, r, maxdeg, order);
  const MultiPoly g = G_truncated(eps, M, N, r, maxdeg, order);
  const MultiPoly g_short =
      G_truncated(eps, M, N, r - 1, maxdeg, order).embed(nv, iota_from(2, nv - 2));

  const QSeries bnm = bracket(N - M, order);
  const QSeries bm = bracket(M, order);
  const QSeries qm = QSeries::monomial(M, 1, order);
  const MultiPoly one = MultiPoly::constant(nv, maxdeg, unit(order));
  const MultiPoly u1 = MultiPoly::variable(nv, maxdeg, 0, unit(order));
  const MultiPoly u2 = MultiPoly::variable(nv, maxdeg, 1, unit(order));
  const MultiPoly x_den = one * bm - u2;

  const MultiPoly lhs = (one * bnm - u1) * x_den * g_prev;
  MultiPoly boost = one;
  QSeries lead = qm;
  if (eps == 1) {
    const QSeries inv_bm = invert_unit(bm);
    boost += u1 * (qm * inv_bm);
    lead *= inv_bm;
  }
  const MultiPoly rhs = x_den * boost * g * bnm + g_short * (bnm * lead);
  return compare_multipoly("G_diff", std::move(params), lhs, rhs);
}

namespace {

// sum_{T in tilings(r)} (-1)^{eo(T)} (q^N/[N]^eps)^{kappa(T)} G~_{M,N}(X without T)
MultiPoly tiling_side(int eps, int M, int N, int r, int maxdeg, int order) {
  const int nv = 2 * r;
  std::map<int, MultiPoly> tilde_by_depth;
  const QSeries weight = q_fraction(N, N, eps, order);
  MultiPoly total(nv, maxdeg, order);
  for (const Mask& t : tilings(r)) {
    const int kap = kappa(t);
    const int rest = r - kap;
    auto it = tilde_by_depth.find(rest);
    if (it == tilde_by_depth.end()) {
      it = tilde_by_depth.emplace(rest, G_tilde(G_truncated(eps, M, N, rest, maxdeg, order), N)).first;
    }
    std::vector<int> keep;
    for (int i = 1; i <= nv; ++i) {
      if (!t.contains(i)) keep.push_back(i - 1);
    }
    QSeries coeff = weight.pow(static_cast<unsigned>(kap));
    if (eo(t) % 2 != 0) coeff = -coeff;
    total += it->second.embed(nv, keep) * coeff;
  }
  return total;
}

// prod_{i=1}^{r-1} ([N] - [X_i + Y_{i+1}]) ([N] - [X_r])
MultiPoly interior_factors(int N, int r, int maxdeg, int order) {
  const int nv = 2 * r;
  MultiPoly f = MultiPoly::constant(nv, maxdeg, unit(order));
  for (int i = 1; i < r; ++i) f = f * bracket_sum_factor(nv, maxdeg, N, 2 * i - 1, 2 * i, order);
  f = f * (MultiPoly::constant(nv, maxdeg, bracket(N, order)) -
           MultiPoly::variable(nv, maxdeg, nv - 1, unit(order)));
  return f;
}

}  // namespace

Report verify_recurrence(int eps, int M, int N, int r, int maxdeg, int order) {
  check_eps(eps);
  check_range(M, N, r, maxdeg, order);
  auto params = gen_params(eps, M, N, r, maxdeg, order);
  const int nv = 2 * r;
  const QSeries diff = bracket(N, order) - bracket(M, order);
  const MultiPoly g_next = G_truncated(eps, M, N + 1, r, maxdeg, order);

  MultiPoly factors = MultiPoly::constant(nv, maxdeg, diff);
  if (r >= 1) {
    // [N] - [M + Y_1] = [N] - [M] - q^M u_1
    factors -= MultiPoly::variable(nv, maxdeg, 0, QSeries::monomial(M, 1, order));
    factors = factors * interior_factors(N, r, maxdeg, order);
  }
  const MultiPoly lhs = factors * g_next;
  const MultiPoly rhs = tiling_side(eps, M, N, r, maxdeg, order) * diff;
  return compare_multipoly("recurrence", std::move(params), lhs, rhs);
}

Report verify_recurrence_corollary(int eps, int N, int r, int maxdeg, int order) {
  check_eps(eps);
  check_range(0, N, r, maxdeg, order);
  auto params = gen_params(eps, 0, N, r, maxdeg, order);
  const int nv = 2 * r;
  const QSeries bn = bracket(N, order);
  MultiPoly factors = MultiPoly::constant(nv, maxdeg, bn);
  if (r >= 1) {
    factors -= MultiPoly::variable(nv, maxdeg, 0, unit(order));
    factors = factors * interior_factors(N, r, maxdeg, order);
  }
  const MultiPoly lhs = factors * G_truncated(eps, 0, N + 1, r, maxdeg, order);
  const MultiPoly rhs = tiling_side(eps, 0, N, r, maxdeg, order) * bn;
  return compare_multipoly("recurrence_corollary", std::move(params), lhs, rhs);
}

Report verify_B_diff(int eps, int M, int N, int maxdeg, int order) {
  nlohmann::ordered_json params;
  params["eps"] = eps;
  params["M"] = M;
  params["N"] = N;
  params["maxdeg"] = maxdeg;
  params["order"] = order;
  const Kernels k = AB_kernels(M, N, eps, order, maxdeg);
  // variables (X, Y, Y')
  const MultiPoly lhs = k.B.embed(3, {0, 1}) - k.B.embed(3, {0, 2});
  const MultiPoly rhs = (k.A.embed(3, {1}) - k.A.embed(3, {2})) * q_fraction(N, N, eps, order);
  return compare_multipoly("B_diff", std::move(params), lhs, rhs);
}

}  // namespace qmzv
