#pragma once

#include <string>
#include <vector>

#include "qmzv/constructor.hpp"
#include "qmzv/models.hpp"
#include "qmzv/report.hpp"

namespace qmzv {

// --- theorem-level identities ------------------------------------------------------------

/// xi^eps_{q,N}(c) = Z^dagger_{q,N}(E_q^eps(c)) up to q^order.
Report verify_main_finite(int eps, const PairIndex& c, int N, int order,
                          SignFault fault = SignFault::none);

/// zeta^{diamond,BZ}_{q,N}(diamond index of c) = Z^BZ_{q,N}(D_q(c)) as series, plus, at each
/// rational sample q: the same identity at q, the dagger/BZ diamond relation between q and 1/q,
/// the dagger-side identity at 1/q, and the word bridge for every monomial of D_q(c).
Report verify_main_finite_bz(const PairIndex& c, int N, int order,
                             const std::vector<Rational>& qsamples,
                             SignFault fault = SignFault::none);

/// Both infinite identities at order D, using the direct infinite evaluators.
Report verify_main_infinite(const PairIndex& c, int order);

enum class RemarkKind { dual_flat, dual_diamond, qmsw };
RemarkKind parse_remark_kind(const std::string& name);
/// dual_flat / dual_diamond take (l, k); qmsw takes k only (l is ignored).
Report verify_remarks(RemarkKind kind, const Index& l, const Index& k, int N, int order);

/// zeta_N(l;k) = Z_N(E(c)) and zeta_N^diamond = Z_N(D(c)) exactly.
Report verify_classical(const PairIndex& c, int N);

/// Exact rank of the matrix (basis words of h^1 with weight <= max_weight) x (coefficients of
/// q^0..q^order of Z_{q,N}(word) for N in N_list). Full row rank is finite evidence for
/// injectivity, not a proof. Model must be DaggerFinite or BZFinite.
Report independence_check(ZModel model, int max_weight, const std::vector<int>& N_list, int order);

/// Exact rank of an integer matrix (Gaussian elimination over the rationals).
int exact_rank(std::vector<std::vector<Integer>> rows);

/// Words of h^1 (empty or starting with y) with at most max_weight letters, shortest first.
std::vector<Word> h1_basis_words(int max_weight);

// --- structural invariants ---------------------------------------------------------------

/// E_q^0(c) in h^1, E_q^1(c) and D_q(c) in h^{>=2}.
Report check_membership(const PairIndex& c);
/// E_q^eps and D_q are unchanged under full reversal of c.
Report check_symmetry(const PairIndex& c);
/// theta(theta(u)) = u on the constructor outputs for c.
Report check_theta_involution(const PairIndex& c);

enum class StabilizedModel { Dagger, BZ, DiamondBZ };
/// Coefficients of q^m, m < N, of the finite value equal those of the infinite value
/// (dagger -> dagger, BZ -> BZ, diamond BZ -> BZ).
Report check_stabilization(StabilizedModel model, const BarIndex& k, int N, int order);
/// zeta^{diamond,BZ}_{q,N}(k) = zeta^BZ_{q,N}(k) when all k_i >= 2.
Report check_diamond_collapse(const Index& k, int N, int order);
/// Delta_N Z(u y x^{k-1}) = q^N/[N]^k Z_N(u) and Delta_N Z(u x^k) = Delta_N Z(u)/[N]^k.
Report check_forward_difference(const Word& u, int k, int N, int order);
/// All coefficients of Z_{q,N}(w) are non-negative integers.
Report check_integrality(ZModel model, const Word& w, int N, int order);
/// 1/[N]^m = 1 + q^N sum_{h=1}^m 1/[N]^h.
Report check_telescoping(int N, int m, int order);
/// q^{Nm}/[N]^{(1+eps)m} = sum_{m'=1}^m (-1)^{m-m'} C(m-1,m'-1) q^N/[N]^{m'+eps m}.
Report check_binomial_expansion(int eps, int N, int m, int order);
/// The normalized evaluator at q = 1 equals the classical sum, and at q = qval it equals
/// (1-q)^{weight} times the plain rational-point value.
Report check_classical_limit(FiniteModel model, const BarIndex& k, int N, const Rational& qval);

// --- suite -------------------------------------------------------------------------------

struct SuiteConfig {
  int max_weight = 4;
  int max_N = 5;
  int order = 12;
  int maxdeg = 2;
  int max_r = 2;
  std::vector<Rational> rational_q_samples{Rational(2), Rational(1, 2), Rational(3), Rational(-2),
                                           Rational(5, 7)};
  /// 0 means one worker per hardware thread.
  int parallelism = 0;
};

/// Flat "key = value" lines; '#' starts a comment; q samples are comma-separated rationals.
SuiteConfig parse_suite_config(const std::string& text);
nlohmann::ordered_json suite_config_to_json(const SuiteConfig& cfg);
void validate(const SuiteConfig& cfg);

struct SuiteResult {
  std::vector<Report> reports;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_pass() const { return failed == 0; }
};

/// Identity names accepted by the suite's filter.
std::vector<std::string> suite_identities();

/// Runs every identity instance within the configured bounds. Cases are evaluated in parallel
/// and returned in enumeration order. An empty filter runs everything.
SuiteResult run_suite(const SuiteConfig& cfg, const std::string& filter = "");

nlohmann::ordered_json suite_summary(const SuiteResult& result);

}  // namespace qmzv
