#include "qmzv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "qmzv/genfun.hpp"
#include "qmzv/transforms.hpp"

namespace qmzv {

namespace {

nlohmann::ordered_json c_params(const PairIndex& c) {
  nlohmann::ordered_json p;
  p["c"] = c.flat();
  return p;
}

// Coefficient statistics of a constructor output, recorded without asserting anything.
nlohmann::ordered_json word_stats(const AlgebraElement& u) {
  Integer max_abs = 0;
  std::size_t negative = 0;
  for (const auto& [w, coeff] : u.terms()) {
    if (abs(coeff) > max_abs) max_abs = abs(coeff);
    if (coeff < 0) ++negative;
  }
  nlohmann::ordered_json j;
  j["terms"] = u.size();
  j["max_abs_coeff"] = to_string(max_abs);
  j["negative_terms"] = negative;
  return j;
}

Report fail_with_message(std::string identity, nlohmann::ordered_json params, std::string message) {
  Witness w;
  w.lhs = std::move(message);
  w.rhs = "";
  return make_fail(std::move(identity), std::move(params), std::move(w));
}

Rational sign_of_weight(int w) { return Rational(sign_power(w)); }

}  // namespace

// --- theorem-level identities ------------------------------------------------------------

Report verify_main_finite(int eps, const PairIndex& c, int N, int order, SignFault fault) {
  auto params = c_params(c);
  params["eps"] = eps;
  params["N"] = N;
  params["order"] = order;
  const FiniteEvalParams p{0, N, order};
  const AlgebraElement word = E_q(eps, c, fault);
  Report r = compare_series("main_finite", std::move(params), xi(eps, c, p),
                            z_map(ZModel::DaggerFinite, word, p));
  r.details["word"] = word_stats(word);
  return r;
}

Report verify_main_finite_bz(const PairIndex& c, int N, int order,
                             const std::vector<Rational>& qsamples, SignFault fault) {
  auto params = c_params(c);
  params["N"] = N;
  params["order"] = order;
  std::vector<std::string> qs;
  for (const auto& q : qsamples) qs.push_back(to_string(q));
  params["q"] = qs;

  const FiniteEvalParams p{0, N, order};
  const Index k = pairs_to_diamond_index(c);
  const BarIndex kb = BarIndex::plain(k);
  const AlgebraElement d = D_q(c, fault);
  const AlgebraElement e1 = E_q(1, c, fault);

  std::vector<Report> parts;
  parts.push_back(compare_series("series", c_params(c), zeta_diamond_finite(DiamondVariant::BZ, k, p),
                                 z_map(ZModel::BZFinite, d, p)));
  for (const auto& q : qsamples) {
    nlohmann::ordered_json at;
    at["q"] = to_string(q);
    const Rational bz = eval_at_rational_q(FiniteModel::DiamondBZ, kb, N, q);
    const Rational dagger_inv = eval_at_rational_q(FiniteModel::DiamondDagger, kb, N, 1 / q);
    parts.push_back(compare_rational("at_q", at, bz, z_map_at(ZModel::BZFinite, d, N, q)));
    parts.push_back(compare_rational("diamond_inversion", at, dagger_inv, sign_of_weight(weight(k)) * bz));
    parts.push_back(compare_rational("dagger_at_inverse_q", at, dagger_inv,
                                     z_map_at(ZModel::DaggerFinite, e1, N, 1 / q)));
    for (const auto& [w, coeff] : d.terms()) parts.push_back(verify_bridge(w, N, q));
  }
  Report r = combine("main_finite_bz", std::move(params), parts);
  r.details["word"] = word_stats(d);
  return r;
}

Report verify_main_infinite(const PairIndex& c, int order) {
  auto params = c_params(c);
  params["order"] = order;
  const FiniteEvalParams p{0, 1, order};
  std::vector<Report> parts;
  parts.push_back(compare_series("dagger", c_params(c), zeta_dagger_infinite(pairs_to_bar(c), order),
                                 z_map(ZModel::DaggerInfinite, E_q(0, c), p)));
  parts.push_back(compare_series("bz", c_params(c), zeta_bz_infinite(pairs_to_diamond_index(c), order),
                                 z_map(ZModel::BZInfinite, D_q(c), p)));
  return combine("main_infinite", std::move(params), parts);
}

RemarkKind parse_remark_kind(const std::string& name) {
  if (name == "dual_flat") return RemarkKind::dual_flat;
  if (name == "dual_diamond") return RemarkKind::dual_diamond;
  if (name == "qmsw") return RemarkKind::qmsw;
  throw DomainError("unknown remark '" + name + "' (expected dual_flat, dual_diamond or qmsw)");
}

Report verify_remarks(RemarkKind kind, const Index& l, const Index& k, int N, int order) {
  nlohmann::ordered_json params;
  if (kind != RemarkKind::qmsw) params["l"] = l;
  params["k"] = k;
  params["N"] = N;
  params["order"] = order;
  const FiniteEvalParams p{0, N, order};
  switch (kind) {
    case RemarkKind::dual_flat: {
      const PairIndex c = PairIndex::from_lk(l, k);
      const PairIndex dual(symmetry_reverse(c.flat()));
      return compare_series("dual_flat", std::move(params), zeta_dagger_finite(pairs_to_bar(c), p),
                            zeta_dagger_finite(pairs_to_bar(dual), p));
    }
    case RemarkKind::dual_diamond: {
      const PairIndex c = PairIndex::from_lk(l, k);
      const PairIndex dual(symmetry_reverse(c.flat()));
      return compare_series("dual_diamond", std::move(params),
                            zeta_diamond_finite(DiamondVariant::BZ, pairs_to_diamond_index(c), p),
                            zeta_diamond_finite(DiamondVariant::BZ, pairs_to_diamond_index(dual), p));
    }
    case RemarkKind::qmsw:
      return compare_series("qmsw", std::move(params), zeta_dagger_finite(BarIndex::plain(k), p),
                            msw_block_sum(k, p));
  }
  throw DomainError("unknown remark kind");
}

Report verify_classical(const PairIndex& c, int N) {
  auto params = c_params(c);
  params["N"] = N;
  std::vector<Report> parts;
  parts.push_back(compare_rational("E", c_params(c), classical_binom(c, N), z_classical(E_classical(0, c), N)));
  parts.push_back(compare_rational("D", c_params(c), classical_diamond(pairs_to_diamond_index(c), N),
                                   z_classical(D_classical(c), N)));
  return combine("classical", std::move(params), parts);
}

std::vector<Word> h1_basis_words(int max_weight) {
  std::vector<Word> out;
  if (max_weight < 0) return out;
  out.emplace_back();
  for (int w = 1; w <= max_weight; ++w) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (w - 1)); ++bits) {
      std::string letters = "y";
      for (int i = w - 2; i >= 0; --i) letters += ((bits >> i) & 1U) ? 'y' : 'x';
      out.emplace_back(letters);
    }
  }
  return out;
}

int exact_rank(std::vector<std::vector<Integer>> rows) {
  std::vector<std::vector<Rational>> m;
  for (auto& row : rows) m.emplace_back(row.begin(), row.end());
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (sgn(m[i][col]) == 0) continue;
      const Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

Report independence_check(ZModel model, int max_weight, const std::vector<int>& N_list, int order) {
  if (model != ZModel::DaggerFinite && model != ZModel::BZFinite) {
    throw DomainError("independence check is defined for the finite dagger and BZ maps");
  }
  nlohmann::ordered_json params;
  params["model"] = model == ZModel::DaggerFinite ? "dagger" : "bz";
  params["max_weight"] = max_weight;
  params["N"] = N_list;
  params["order"] = order;
  const auto words = h1_basis_words(max_weight);
  std::vector<std::vector<Integer>> rows;
  for (const Word& w : words) {
    std::vector<Integer> row;
    for (int N : N_list) {
      const QSeries s = z_map(model, AlgebraElement(w), FiniteEvalParams{0, N, order});
      for (const auto& coeff : s.coeffs()) {
        if (coeff.get_den() != 1) throw DomainError("non-integral coefficient in a Z-map value");
        row.push_back(coeff.get_num());
      }
    }
    rows.push_back(std::move(row));
  }
  const int rank = exact_rank(rows);
  const int expected = static_cast<int>(words.size());
  Report r = rank == expected
                 ? make_pass("independence", std::move(params))
                 : make_fail("independence", std::move(params),
                             Witness{-1, {}, std::to_string(rank), std::to_string(expected)});
  r.details["rank"] = rank;
  r.details["rows"] = expected;
  r.details["note"] = "full row rank at finite truncation is evidence for injectivity, not a proof";
  return r;
}

// --- structural invariants ---------------------------------------------------------------

Report check_membership(const PairIndex& c) {
  auto params = c_params(c);
  const bool ok_e0 = membership(E_q(0, c), Subspace::H1);
  const bool ok_e1 = membership(E_q(1, c), Subspace::Hgeq2);
  const bool ok_d = membership(D_q(c), Subspace::Hgeq2);
  if (ok_e0 && ok_e1 && ok_d) return make_pass("membership", std::move(params));
  const std::string which = !ok_e0 ? "E_q^0 not in h^1" : !ok_e1 ? "E_q^1 not in h^>=2" : "D_q not in h^>=2";
  return fail_with_message("membership", std::move(params), which);
}

Report check_symmetry(const PairIndex& c) {
  auto params = c_params(c);
  const PairIndex rev(symmetry_reverse(c.flat()));
  for (int eps = 0; eps <= 1; ++eps) {
    if (E_q(eps, c) != E_q(eps, rev)) {
      return make_fail("symmetry", std::move(params),
                       Witness{-1, {}, to_text(E_q(eps, c)), to_text(E_q(eps, rev))});
    }
  }
  if (D_q(c) != D_q(rev)) {
    return make_fail("symmetry", std::move(params), Witness{-1, {}, to_text(D_q(c)), to_text(D_q(rev))});
  }
  return make_pass("symmetry", std::move(params));
}

Report check_theta_involution(const PairIndex& c) {
  auto params = c_params(c);
  for (const auto& u : {E_q(0, c), E_q(1, c), D_q(c)}) {
    if (theta(theta(u)) != u) {
      return make_fail("theta_involution", std::move(params), Witness{-1, {}, to_text(theta(theta(u))), to_text(u)});
    }
  }
  return make_pass("theta_involution", std::move(params));
}

Report check_stabilization(StabilizedModel model, const BarIndex& k, int N, int order) {
  nlohmann::ordered_json params;
  params["model"] = model == StabilizedModel::Dagger ? "dagger" : model == StabilizedModel::BZ ? "bz" : "diamond-bz";
  params["index"] = to_text(k);
  params["N"] = N;
  params["order"] = order;
  const FiniteEvalParams p{0, N, order};
  QSeries finite(order);
  QSeries infinite(order);
  switch (model) {
    case StabilizedModel::Dagger:
      finite = zeta_dagger_finite(k, p);
      infinite = zeta_dagger_infinite(k, order);
      break;
    case StabilizedModel::BZ:
      finite = zeta_bz_finite(k.raw(), p);
      infinite = zeta_bz_infinite(k.raw(), order);
      break;
    case StabilizedModel::DiamondBZ:
      finite = zeta_diamond_finite(DiamondVariant::BZ, k.raw(), p);
      infinite = zeta_bz_infinite(k.raw(), order);
      break;
  }
  const int shared = std::min(N - 1, order);
  return compare_series("stabilization", std::move(params), finite.truncated(shared), infinite.truncated(shared));
}

Report check_diamond_collapse(const Index& k, int N, int order) {
  nlohmann::ordered_json params;
  params["k"] = k;
  params["N"] = N;
  params["order"] = order;
  for (int e : k) {
    if (e < 2) throw DomainError("diamond collapse needs all entries >= 2");
  }
  const FiniteEvalParams p{0, N, order};
  return compare_series("diamond_collapse", std::move(params), zeta_diamond_finite(DiamondVariant::BZ, k, p),
                        zeta_bz_finite(k, p));
}

Report check_forward_difference(const Word& u, int k, int N, int order) {
  nlohmann::ordered_json params;
  params["u"] = to_text(u);
  params["k"] = k;
  params["N"] = N;
  params["order"] = order;
  if (!in_subspace(u, Subspace::H1)) throw DomainError("forward difference needs u in h^1");
  if (k < 1) throw DomainError("forward difference needs k >= 1");
  auto Z = [&](const Word& w, int n) {
    return z_map(ZModel::DaggerFinite, AlgebraElement(w), FiniteEvalParams{0, n, order});
  };
  auto delta = [&](const Word& w) { return Z(w, N + 1) - Z(w, N); };
  std::vector<Report> parts;
  const Word tail_y = u * Word::y() * Word::x(k - 1);
  parts.push_back(compare_series("append_yx", {}, delta(tail_y), q_fraction(N, N, k, order) * Z(u, N)));
  if (!u.empty()) {
    const Word tail_x = u * Word::x(k);
    parts.push_back(compare_series("append_x", {}, delta(tail_x), inv_one_minus_qn(N, k, order) * delta(u)));
  }
  return combine("forward_difference", std::move(params), parts);
}

Report check_integrality(ZModel model, const Word& w, int N, int order) {
  nlohmann::ordered_json params;
  params["model"] = model == ZModel::DaggerFinite ? "dagger" : "bz";
  params["word"] = to_text(w);
  params["N"] = N;
  params["order"] = order;
  const QSeries s = z_map(model, AlgebraElement(w), FiniteEvalParams{0, N, order});
  for (int m = 0; m <= order; ++m) {
    if (s[m].get_den() != 1 || sgn(s[m]) < 0) {
      return make_fail("integrality", std::move(params), Witness{m, {}, to_string(s[m]), "non-negative integer"});
    }
  }
  return make_pass("integrality", std::move(params));
}

Report check_telescoping(int N, int m, int order) {
  nlohmann::ordered_json params;
  params["N"] = N;
  params["m"] = m;
  params["order"] = order;
  QSeries rhs(order);
  for (int h = 1; h <= m; ++h) rhs += inv_one_minus_qn(N, h, order);
  rhs = QSeries::constant(1, order) + rhs.shifted(N);
  return compare_series("telescoping", std::move(params), inv_one_minus_qn(N, m, order), rhs);
}

Report check_binomial_expansion(int eps, int N, int m, int order) {
  nlohmann::ordered_json params;
  params["eps"] = eps;
  params["N"] = N;
  params["m"] = m;
  params["order"] = order;
  QSeries rhs(order);
  for (int mp = 1; mp <= m; ++mp) {
    rhs += q_fraction(N, N, mp + eps * m, order) * Rational(sign_power(m - mp) * binomial(m - 1, mp - 1));
  }
  return compare_series("binomial_expansion", std::move(params), q_fraction(N * m, N, (1 + eps) * m, order), rhs);
}

Report check_classical_limit(FiniteModel model, const BarIndex& k, int N, const Rational& qval) {
  nlohmann::ordered_json params;
  params["model"] = model == FiniteModel::Dagger ? "dagger" : model == FiniteModel::BZ ? "bz" : "diamond-bz";
  params["index"] = to_text(k);
  params["N"] = N;
  params["q"] = to_string(qval);
  Rational classical;
  switch (model) {
    case FiniteModel::Dagger:
      classical = classical_binom(bar_to_pairs(k), N);
      break;
    case FiniteModel::BZ:
      classical = classical_zeta(k.raw(), N);
      break;
    case FiniteModel::DiamondBZ:
      classical = classical_diamond(k.raw(), N);
      break;
    case FiniteModel::DiamondDagger:
      throw DomainError("no classical counterpart is checked for the dagger diamond model");
  }
  std::vector<Report> parts;
  parts.push_back(compare_rational("at_one", {}, eval_normalized_at(model, k, N, 1), classical));
  parts.push_back(compare_rational("scaling", {}, eval_normalized_at(model, k, N, qval),
                                   power(1 - qval, weight(k)) * eval_at_rational_q(model, k, N, qval)));
  return combine("classical_limit", std::move(params), parts);
}

// --- suite -------------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw DomainError("config key '" + key + "' needs an integer, got '" + value + "'");
  }
}

std::vector<Rational> parse_samples(const std::string& value) {
  std::vector<Rational> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

// All compositions (entries >= 1) with sum <= max_total, shortest sums first.
std::vector<Index> compositions_up_to(int max_total) {
  std::vector<Index> out;
  for (const auto& c : pair_indices_up_to(0)) out.push_back(c.flat());
  for (int t = 1; t <= max_total; ++t) {
    std::vector<Index> level;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (t - 1)); ++mask) {
      Index parts;
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
      level.push_back(std::move(parts));
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

struct Case {
  std::string identity;
  std::function<Report()> run;
};

std::vector<Case> enumerate_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  auto add = [&](std::string id, std::function<Report()> f) { cases.push_back({std::move(id), std::move(f)}); };
  const auto cs = pair_indices_up_to(cfg.max_weight);
  const auto comps = compositions_up_to(cfg.max_weight);
  const int order = cfg.order;
  const int rmax = std::min(cfg.max_r, cfg.max_weight / 2);
  std::vector<int> N_list;
  for (int N = 1; N <= cfg.max_N; ++N) N_list.push_back(N);

  for (int eps = 0; eps <= 1; ++eps) {
    for (const auto& c : cs) {
      for (int N : N_list) add("main_finite", [=] { return verify_main_finite(eps, c, N, order); });
    }
  }
  for (const auto& c : cs) {
    for (int N : N_list) {
      add("main_finite_bz", [=, q = cfg.rational_q_samples] { return verify_main_finite_bz(c, N, order, q); });
    }
  }
  for (const auto& c : cs) add("main_infinite", [=] { return verify_main_infinite(c, order); });

  for (int eps = 0; eps <= 1; ++eps) {
    for (int r = 1; r <= rmax; ++r) {
      for (int N = 2; N <= cfg.max_N; ++N) {
        for (int M = 1; M < N; ++M) {
          add("G_diff", [=] { return verify_G_diff(eps, M, N, r, cfg.maxdeg, order); });
        }
      }
    }
    for (int r = 0; r <= rmax; ++r) {
      for (int N = 1; N < cfg.max_N; ++N) {
        for (int M = 0; M < N; ++M) {
          add("recurrence", [=] { return verify_recurrence(eps, M, N, r, cfg.maxdeg, order); });
        }
        add("recurrence_corollary", [=] { return verify_recurrence_corollary(eps, N, r, cfg.maxdeg, order); });
      }
    }
    if (rmax >= 1) {
      for (int N = 2; N <= cfg.max_N; ++N) {
        for (int M = 1; M < N; ++M) add("B_diff", [=] { return verify_B_diff(eps, M, N, cfg.maxdeg, order); });
      }
    }
  }

  for (const auto& c : cs) {
    if (c.depth() < 1 || c.depth() > cfg.max_r) continue;
    const Index l = c.ls();
    const Index k = c.ks();
    for (int which : {1, 3}) add("transform", [=] { return verify_transform(which, l, k, order); });
    add("transform_round_trip", [=] { return verify_round_trip(true, l, k); });
    if (std::all_of(l.begin(), l.end(), [](int v) { return v == 1; })) {
      for (int which : {2, 4}) add("transform", [=] { return verify_transform(which, {}, k, order); });
      add("transform_round_trip", [=] { return verify_round_trip(false, {}, k); });
    }
  }

  for (const auto& c : cs) {
    for (int N : N_list) {
      add("dual_flat", [=] { return verify_remarks(RemarkKind::dual_flat, c.ls(), c.ks(), N, order); });
      add("dual_diamond", [=] { return verify_remarks(RemarkKind::dual_diamond, c.ls(), c.ks(), N, order); });
    }
  }
  for (const auto& k : comps) {
    for (int N : N_list) add("qmsw", [=] { return verify_remarks(RemarkKind::qmsw, {}, k, N, order); });
  }
  for (const auto& c : cs) {
    for (int N : N_list) add("classical", [=] { return verify_classical(c, N); });
  }
  const auto words = h1_basis_words(cfg.max_weight);
  for (const auto& w : words) {
    for (int N : N_list) {
      for (const auto& q : cfg.rational_q_samples) add("bridge", [=] { return verify_bridge(w, N, q); });
    }
  }
  for (ZModel m : {ZModel::DaggerFinite, ZModel::BZFinite}) {
    add("independence", [=] { return independence_check(m, cfg.max_weight, N_list, order); });
  }

  for (const auto& c : cs) {
    add("membership", [=] { return check_membership(c); });
    add("symmetry", [=] { return check_symmetry(c); });
    add("theta_involution", [=] { return check_theta_involution(c); });
  }
  for (int N : N_list) {
    for (const auto& c : cs) {
      add("stabilization", [=] { return check_stabilization(StabilizedModel::Dagger, pairs_to_bar(c), N, order); });
    }
    for (const auto& k : comps) {
      if (k.empty() || k.back() < 2) continue;
      const BarIndex kb = BarIndex::plain(k);
      add("stabilization", [=] { return check_stabilization(StabilizedModel::BZ, kb, N, order); });
      add("stabilization", [=] { return check_stabilization(StabilizedModel::DiamondBZ, kb, N, order); });
      if (std::all_of(k.begin(), k.end(), [](int v) { return v >= 2; })) {
        add("diamond_collapse", [=] { return check_diamond_collapse(k, N, order); });
      }
    }
  }
  for (const auto& u : words) {
    if (u.length() + 1 > cfg.max_weight) continue;
    for (int N = 1; N < cfg.max_N; ++N) {
      for (int k = 1; u.length() + k <= cfg.max_weight; ++k) {
        add("forward_difference", [=] { return check_forward_difference(u, k, N, order); });
      }
    }
  }
  for (const auto& w : words) {
    for (int N : N_list) {
      for (ZModel m : {ZModel::DaggerFinite, ZModel::BZFinite}) {
        add("integrality", [=] { return check_integrality(m, w, N, order); });
      }
    }
  }
  for (int N : N_list) {
    for (int m = 1; m <= cfg.max_weight; ++m) {
      add("telescoping", [=] { return check_telescoping(N, m, order); });
      for (int eps = 0; eps <= 1; ++eps) {
        add("binomial_expansion", [=] { return check_binomial_expansion(eps, N, m, order); });
      }
    }
  }
  if (!cfg.rational_q_samples.empty()) {
    const Rational q = cfg.rational_q_samples.front();
    for (int N : N_list) {
      for (const auto& c : cs) {
        add("classical_limit", [=] { return check_classical_limit(FiniteModel::Dagger, pairs_to_bar(c), N, q); });
        const BarIndex kd = BarIndex::plain(pairs_to_diamond_index(c));
        add("classical_limit", [=] { return check_classical_limit(FiniteModel::DiamondBZ, kd, N, q); });
      }
      for (const auto& k : comps) {
        add("classical_limit", [=] { return check_classical_limit(FiniteModel::BZ, BarIndex::plain(k), N, q); });
      }
    }
  }
  return cases;
}

}  // namespace

SuiteConfig parse_suite_config(const std::string& text) {
  SuiteConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DomainError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "max_weight") {
      cfg.max_weight = parse_int(key, value);
    } else if (key == "max_N") {
      cfg.max_N = parse_int(key, value);
    } else if (key == "order") {
      cfg.order = parse_int(key, value);
    } else if (key == "maxdeg") {
      cfg.maxdeg = parse_int(key, value);
    } else if (key == "max_r") {
      cfg.max_r = parse_int(key, value);
    } else if (key == "rational_q_samples" || key == "q_samples") {
      cfg.rational_q_samples = parse_samples(value);
    } else if (key == "parallelism") {
      cfg.parallelism = parse_int(key, value);
    } else {
      throw DomainError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.max_weight < 0) throw DomainError("max_weight must be >= 0");
  if (cfg.max_N < 1) throw DomainError("max_N must be >= 1");
  if (cfg.order < 0) throw DomainError("order must be >= 0");
  if (cfg.maxdeg < 0) throw DomainError("maxdeg must be >= 0");
  if (cfg.max_r < 0) throw DomainError("max_r must be >= 0");
  if (cfg.parallelism < 0) throw DomainError("parallelism must be >= 0");
  for (const auto& q : cfg.rational_q_samples) {
    if (q == 0 || q == 1 || q == -1) throw DomainError("q samples must avoid 0, 1 and -1");
  }
}

nlohmann::ordered_json suite_config_to_json(const SuiteConfig& cfg) {
  nlohmann::ordered_json j;
  j["max_weight"] = cfg.max_weight;
  j["max_N"] = cfg.max_N;
  j["order"] = cfg.order;
  j["maxdeg"] = cfg.maxdeg;
  j["max_r"] = cfg.max_r;
  std::vector<std::string> qs;
  for (const auto& q : cfg.rational_q_samples) qs.push_back(to_string(q));
  j["rational_q_samples"] = qs;
  j["parallelism"] = cfg.parallelism;
  return j;
}

std::vector<std::string> suite_identities() {
  return {"main_finite",  "main_finite_bz",     "main_infinite",    "G_diff",
          "recurrence",   "recurrence_corollary", "B_diff",         "transform",
          "transform_round_trip", "dual_flat",  "dual_diamond",     "qmsw",
          "classical",    "bridge",             "independence",     "membership",
          "symmetry",     "theta_involution",   "stabilization",    "diamond_collapse",
          "forward_difference", "integrality",  "telescoping",      "binomial_expansion",
          "classical_limit"};
}

SuiteResult run_suite(const SuiteConfig& cfg, const std::string& filter) {
  validate(cfg);
  if (!filter.empty()) {
    const auto ids = suite_identities();
    if (std::find(ids.begin(), ids.end(), filter) == ids.end()) {
      throw DomainError("unknown identity '" + filter + "' for --filter");
    }
  }
  std::vector<Case> cases;
  for (auto& c : enumerate_cases(cfg)) {
    if (filter.empty() || c.identity == filter) cases.push_back(std::move(c));
  }

  SuiteResult result;
  result.reports.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      try {
        result.reports[i] = cases[i].run();
      } catch (const std::exception& e) {
        result.reports[i] = fail_with_message(cases[i].identity, {}, std::string("error: ") + e.what());
      }
    }
  };
  unsigned threads = cfg.parallelism > 0 ? static_cast<unsigned>(cfg.parallelism)
                                         : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& r : result.reports) (r.pass ? result.passed : result.failed)++;
  return result;
}

nlohmann::ordered_json suite_summary(const SuiteResult& result) {
  nlohmann::ordered_json j;
  j["total"] = result.reports.size();
  j["passed"] = result.passed;
  j["failed"] = result.failed;
  nlohmann::ordered_json by_identity = nlohmann::ordered_json::object();
  for (const auto& id : suite_identities()) {
    std::size_t pass = 0;
    std::size_t fail = 0;
    for (const auto& r : result.reports) {
      if (r.identity != id) continue;
      (r.pass ? pass : fail)++;
    }
    if (pass + fail == 0) continue;
    by_identity[id] = {{"passed", pass}, {"failed", fail}};
  }
  j["identities"] = by_identity;
  return j;
}

}  // namespace qmzv
