#pragma once

#include <vector>

#include "qmzv/words.hpp"

namespace qmzv {

/// Deliberate sign corruptions used by the mutation tests. `none` is the only correct setting.
enum class SignFault {
  none,
  term1_sign,   // drop the leading minus of the first sum
  eo_factor,    // drop (-1)^{eo(A)} in the tiling sum
  theta_sign,   // theta fixes x and negates only y
  d_prefactor,  // omit (-1)^{c_1 + ... + c_{2r}} in D_q
};

/// E_q^eps(c) for c = (c_1, ..., c_{2r}) with all c_i >= 1. Memoized; thread-safe.
AlgebraElement E_q(int eps, const PairIndex& c, SignFault fault = SignFault::none);
/// (-1)^{c_1+...+c_{2r}} theta(E_q^1(c)).
AlgebraElement D_q(const PairIndex& c, SignFault fault = SignFault::none);

/// Top-weight recursion of the classical limit; D = E_classical(1, c).
AlgebraElement E_classical(int eps, const PairIndex& c);
AlgebraElement D_classical(const PairIndex& c);

/// (c_1, ..., c_{2r}) -> (c_{2r}, ..., c_1). Throws on odd length.
std::vector<int> symmetry_reverse(const std::vector<int>& c);

/// sum_{h=lo+1}^{hi} y x^{h-1}, read as -sum_{h=hi+1}^{lo} y x^{h-1} when lo > hi.
AlgebraElement signed_yx_range(int lo, int hi);

/// Drops all memoized words.
void clear_constructor_cache();

/// All flattened tuples c in Z_{>=1}^{2r} (any r >= 0) with c_1 + ... + c_{2r} <= max_total,
/// in a deterministic order (by total, then lexicographically).
std::vector<PairIndex> pair_indices_up_to(int max_total);

}  // namespace qmzv
