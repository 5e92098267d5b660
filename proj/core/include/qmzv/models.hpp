#pragma once

#include <string_view>
#include <vector>

#include "qmzv/rational.hpp"
#include "qmzv/report.hpp"
#include "qmzv/series.hpp"
#include "qmzv/words.hpp"

namespace qmzv {

/// Truncation data for the finite models: sums run over M < n_1 <= ... <= n_r < N.
struct FiniteEvalParams {
  int M = 0;
  int N = 1;
  int order = 10;
};

// --- finite models (series-valued) -------------------------------------------------------

/// dagger model: bars give weak steps and a factor 1/(1-q^{N-n}); other entries give
/// q^n/(1-q^n)^k and a strict step. Requires an admissible index.
QSeries zeta_dagger_finite(const BarIndex& k, const FiniteEvalParams& p);

/// Bradley-Zhao model truncated at N: strict sum of q^{n(k-1)}/(1-q^n)^k. Any k_i >= 1.
QSeries zeta_bz_finite(const Index& k, const FiniteEvalParams& p);

enum class DiamondVariant { BZ, Dagger };

/// Diamond models: sum over subsets A of the 1-entries; entries in A take a weak step and
/// the boundary factor (q^{N-n}/(1-q^{N-n}) for BZ, 1/(1-q^{N-n}) for dagger). Requires
/// k_r != 1.
QSeries zeta_diamond_finite(DiamondVariant variant, const Index& k, const FiniteEvalParams& p);

/// eps = 0: dagger model at ({bar}^{l_1-1}, k_1, ...); eps = 1: dagger diamond model at
/// ({1}^{l_1-1}, k_1+1, ...).
QSeries xi(int eps, const PairIndex& c, const FiniteEvalParams& p);

/// Right-hand side of the q-analogue of the MSW formula: weak blocks of length k_j with
/// q^{N-n}/(1-q^{N-n}) at the head of each block and 1/(1-q^n) on the rest.
QSeries msw_block_sum(const Index& k, const FiniteEvalParams& p);

// --- infinite models ---------------------------------------------------------------------

enum class InfiniteModel { Dagger, BZ, SZ };

/// dagger model, computed from the run-length binomial form (independent of the finite code).
QSeries zeta_dagger_infinite(const BarIndex& k, int order);
/// Bradley-Zhao model; needs k_r >= 2.
QSeries zeta_bz_infinite(const Index& k, int order);
/// Schlesinger-Zudilin model; entries >= 0 with k_r >= 1.
QSeries zeta_sz_infinite(const Index& k, int order);
/// Dispatcher on raw entries. For Dagger, 0 encodes a bar; for SZ, 0 is a genuine zero entry.
QSeries zeta_infinite(InfiniteModel model, const std::vector<int>& entries, int order);

/// Polynomial-numerator model: sum over 0<n_1<...<n_r of prod Q_j(q^{n_j})/(1-q^{n_j})^{k_j}.
struct PolyModelArg {
  Index k;
  /// Q_j as coefficient lists, constant term first.
  std::vector<std::vector<Rational>> polys;
};
QSeries zeta_q_poly(const PolyModelArg& arg, int order);

// --- evaluation maps on words ------------------------------------------------------------

enum class ZModel { DaggerFinite, BZFinite, DaggerInfinite, BZInfinite };

/// Linear extension of the model to h^1. Infinite models ignore p.M and p.N; BZInfinite
/// requires every monomial to be admissible (in h^0).
QSeries z_map(ZModel model, const AlgebraElement& u, const FiniteEvalParams& p);

/// z_map memoizes per-word series; this drops them.
void clear_word_cache();

/// Classical truncated harmonic sums extended linearly: Z_N(yx^{k_1-1}...) = zeta_N(k).
Rational z_classical(const AlgebraElement& u, int N);

// --- classical sums ----------------------------------------------------------------------

/// sum_{0<n_1<...<n_r<N} prod 1/n_j^{k_j}
Rational classical_zeta(const Index& k, int N);
/// Diamond harmonic sum: subsets A of the 1-entries get weak steps and 1/(N-n).
Rational classical_diamond(const Index& k, int N);
/// Weak blocks with 1/(N-n) on all but the last entry of each block and 1/n^k on the last.
Rational classical_binom(const PairIndex& c, int N);

// --- exact evaluation at rational q ------------------------------------------------------

enum class FiniteModel { Dagger, BZ, DiamondBZ, DiamondDagger };

/// Exact rational value of a finite model at q = qval (qval not in {0, 1, -1}). Bars are only
/// accepted for the dagger model.
Rational eval_at_rational_q(FiniteModel model, const BarIndex& k, int N, const Rational& qval,
                            int M = 0);
/// Same nested sum with every factor q^a/(1-q^m)^k replaced by q^a/[m]_q^k, [m]_q = 1+...+q^{m-1};
/// defined at q = 1 as well, where it reduces to the classical harmonic-type sums.
Rational eval_normalized_at(FiniteModel model, const BarIndex& k, int N, const Rational& qval);
/// Linear extension over words for the DaggerFinite and BZFinite maps.
Rational z_map_at(ZModel model, const AlgebraElement& u, int N, const Rational& qval);

/// Checks Z^dagger_{1/q,N}(w) = (-1)^{|w|} Z^BZ_{q,N}(w) exactly.
Report verify_bridge(const Word& w, int N, const Rational& qval);

/// Parses the CLI model names dagger|bz|sz|poly|diamond-bz|diamond-dagger|xi|classical.
enum class ModelName { Dagger, BZ, SZ, Poly, DiamondBZ, DiamondDagger, Xi, Classical };
ModelName parse_model_name(std::string_view name);

}  // namespace qmzv
