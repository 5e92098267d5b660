#pragma once

#include <vector>

#include "qmzv/report.hpp"
#include "qmzv/series.hpp"

namespace qmzv {

/// Polynomial in nvars commuting variables u_1..u_n with QSeries coefficients, truncated at
/// degree maxdeg in each variable separately. Dense storage, row-major in the exponents with
/// u_1 varying slowest.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly(int nvars, int maxdeg, int order);
  static MultiPoly constant(int nvars, int maxdeg, const QSeries& c);
  /// u_var (0-based variable index) with coefficient c.
  static MultiPoly variable(int nvars, int maxdeg, int var, const QSeries& c);

  int nvars() const { return nvars_; }
  int maxdeg() const { return maxdeg_; }
  int order() const { return order_; }
  std::size_t size() const { return terms_.size(); }

  const QSeries& operator[](const Exponents& e) const { return terms_[flat(e)]; }
  QSeries& operator[](const Exponents& e) { return terms_[flat(e)]; }
  const QSeries& at_flat(std::size_t i) const { return terms_[i]; }
  Exponents exponents(std::size_t i) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const QSeries& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const QSeries& c) { return a *= c; }
  friend MultiPoly operator*(const QSeries& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  /// Inverse as a power series; the constant coefficient must be a unit series.
  MultiPoly inverse() const;
  /// Re-indexes variables: source variable i becomes target variable positions[i].
  MultiPoly embed(int target_nvars, const std::vector<int>& positions) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::size_t flat(const Exponents& e) const;
  void require_compatible(const MultiPoly& rhs, const char* op) const;

  int nvars_;
  int maxdeg_;
  int order_;
  std::vector<QSeries> terms_;
};

/// First differing coefficient (in flat order) becomes the witness.
Report compare_multipoly(std::string identity, nlohmann::ordered_json params, const MultiPoly& lhs,
                         const MultiPoly& rhs);

/// Generating function of xi^eps_{q,M,N} in 2r variables (u_{2j-1} ~ [Y_j], u_{2j} ~ [X_j]); the
/// coefficient at exponent tuple e is xi^eps at c = e + 1. Computed by a transfer recursion
/// over n, without calling the per-index evaluators.
MultiPoly G_truncated(int eps, int M, int N, int r, int maxdeg, int order);
/// Same object assembled coefficient by coefficient from models::xi.
MultiPoly G_from_xi(int eps, int M, int N, int r, int maxdeg, int order);

/// Multiplies by prod_i ([N] - u_{2i-1} - u_{2i} + u_{2i-1} u_{2i}).
MultiPoly G_tilde(const MultiPoly& gp, int N);

struct Kernels {
  MultiPoly A;  // one variable: u = [Y]
  MultiPoly B;  // two variables: (u_X, u_Y)
};
/// A_M(Y) and B_M(X, Y); needs 0 < M < N.
Kernels AB_kernels(int M, int N, int eps, int order, int maxdeg);

/// Lemma relating G_{M-1,N} and G_{M,N}, cross-multiplied by [N-M] ([M] - u_2).
Report verify_G_diff(int eps, int M, int N, int r, int maxdeg, int order);
/// Recurrence in N, cross-multiplied by [N] - [M]; boundary X_0 = M, Y_{r+1} = 0.
Report verify_recurrence(int eps, int M, int N, int r, int maxdeg, int order);
/// The M = 0 specialization written with its own boundary factors [N] - u_1 and [N] - u_{2r}.
Report verify_recurrence_corollary(int eps, int N, int r, int maxdeg, int order);
/// B_M(X,Y) - B_M(X,Y') = (q^N/[N]^eps) (A_M(Y) - A_M(Y')).
Report verify_B_diff(int eps, int M, int N, int maxdeg, int order);

}  // namespace qmzv
