#include "qmzv/transforms.hpp"

#include <map>
#include <utility>

#include "qmzv/models.hpp"

namespace qmzv {

namespace {

void check_positive(const Index& v, const char* what) {
  for (int e : v) {
    if (e < 1) throw DomainError(std::string(what) + " entries must be >= 1");
  }
}

// All m' with 1 <= m'_j <= m_j, lexicographic.
std::vector<Index> boxes_below(const Index& m) {
  std::vector<Index> out;
  Index cur(m.size(), 1);
  while (true) {
    out.push_back(cur);
    std::size_t j = m.size();
    while (j > 0) {
      --j;
      if (cur[j] < m[j]) {
        ++cur[j];
        for (std::size_t t = j + 1; t < m.size(); ++t) cur[t] = 1;
        break;
      }
      if (j == 0) return out;
    }
    if (m.empty()) return out;
  }
}

Index ones(std::size_t n) { return Index(n, 1); }

using Combination = std::map<std::pair<Index, Index>, Integer>;

Combination substitute(Direction first, Direction second, bool with_bars, const Index& l, const Index& k) {
  Combination out;
  for (const auto& t : expand(first, with_bars, l, k)) {
    for (const auto& s : expand(second, with_bars, with_bars ? t.l : Index{}, t.k)) {
      out[{s.l, s.k}] += t.coeff * s.coeff;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

Integer transform_coeff(CoeffKind kind, const Index& m, const Index& mp) {
  if (m.size() != mp.size()) throw DomainError("transform coefficient needs sequences of equal length");
  Integer value = 1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] < 1 || mp[j] < 1) throw DomainError("transform coefficient entries must be >= 1");
    value *= binomial(m[j] - 1, mp[j] - 1);
    if (kind == CoeffKind::bbar) value *= sign_power(m[j] - mp[j]);
  }
  return value;
}

std::vector<TransformTerm> expand(Direction direction, bool with_bars, const Index& l, const Index& k) {
  check_positive(k, "k");
  Index ll = l;
  if (!with_bars) {
    if (!l.empty()) throw DomainError("l must be omitted without bars");
    ll = ones(k.size());
  }
  check_positive(ll, "l");
  if (ll.size() != k.size()) throw DomainError("l and k must have equal length");
  const CoeffKind kind = direction == Direction::SZ_from_dagger ? CoeffKind::bbar : CoeffKind::b;
  std::vector<TransformTerm> out;
  for (const Index& lp : boxes_below(ll)) {
    const Integer cl = transform_coeff(kind, ll, lp);
    for (const Index& kp : boxes_below(k)) {
      Integer c = cl * transform_coeff(kind, k, kp);
      if (c != 0) out.push_back({std::move(c), lp, kp});
    }
  }
  return out;
}

std::vector<int> sz_zero_blocks(const Index& l, const Index& k) {
  if (l.size() != k.size()) throw DomainError("l and k must have equal length");
  std::vector<int> out;
  for (std::size_t j = 0; j < k.size(); ++j) {
    out.insert(out.end(), static_cast<std::size_t>(l[j] - 1), 0);
    out.push_back(k[j]);
  }
  return out;
}

Report verify_transform(int which, const Index& l, const Index& k, int order) {
  if (which < 1 || which > 4) throw DomainError("transform formula must be 1..4");
  const bool bars = which == 1 || which == 3;
  const Index ll = bars ? l : ones(k.size());
  nlohmann::ordered_json params;
  params["formula"] = which;
  if (bars) params["l"] = l;
  params["k"] = k;
  params["order"] = order;

  auto sz = [&](const Index& a, const Index& b) {
    return zeta_sz_infinite(sz_zero_blocks(a, b), order);
  };
  auto dagger = [&](const Index& a, const Index& b) {
    return zeta_dagger_infinite(pairs_to_bar(PairIndex::from_lk(a, b)), order);
  };

  const Direction dir = which <= 2 ? Direction::SZ_from_dagger : Direction::dagger_from_SZ;
  const auto terms = expand(dir, bars, bars ? l : Index{}, k);
  QSeries lhs = dir == Direction::SZ_from_dagger ? sz(ll, k) : dagger(ll, k);
  QSeries rhs(order);
  for (const auto& t : terms) {
    rhs += (dir == Direction::SZ_from_dagger ? dagger(t.l, t.k) : sz(t.l, t.k)) * Rational(t.coeff);
  }
  Report r = compare_series("transform", std::move(params), lhs, rhs);
  r.details["terms"] = terms.size();
  return r;
}

Report verify_round_trip(bool with_bars, const Index& l, const Index& k) {
  nlohmann::ordered_json params;
  params["with_bars"] = with_bars;
  if (with_bars) params["l"] = l;
  params["k"] = k;
  const Index ll = with_bars ? l : ones(k.size());
  const Combination identity{{{ll, k}, Integer(1)}};
  for (auto [a, b] : {std::pair{Direction::SZ_from_dagger, Direction::dagger_from_SZ},
                      std::pair{Direction::dagger_from_SZ, Direction::SZ_from_dagger}}) {
    const Combination got = substitute(a, b, with_bars, l, k);
    if (got == identity) continue;
    // first index where the composite differs from the identity
    Combination diff = got;
    diff[{ll, k}] -= 1;
    for (const auto& [key, c] : diff) {
      if (c == 0) continue;
      Witness w;
      w.lhs = to_string(got.count(key) ? got.at(key) : Integer(0));
      w.rhs = key == std::pair{ll, k} ? "1" : "0";
      w.u_exponents = key.first;
      w.u_exponents.insert(w.u_exponents.end(), key.second.begin(), key.second.end());
      return make_fail("transform_round_trip", std::move(params), std::move(w));
    }
  }
  return make_pass("transform_round_trip", std::move(params));
}

}  // namespace qmzv
