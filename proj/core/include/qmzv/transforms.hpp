#pragma once

#include <vector>

#include "qmzv/rational.hpp"
#include "qmzv/report.hpp"
#include "qmzv/words.hpp"

namespace qmzv {

enum class CoeffKind { b, bbar };

/// b(m; m') = prod C(m_j - 1, m'_j - 1); bbar adds prod (-1)^{m_j - m'_j}.
Integer transform_coeff(CoeffKind kind, const Index& m, const Index& mp);

enum class Direction { SZ_from_dagger, dagger_from_SZ };

/// One term coeff * zeta(l, k) of an expansion. For SZ targets the index is
/// ({0}^{l_1-1}, k_1, ...); for dagger targets it is ({bar}^{l_1-1}, k_1, ...). Without bars,
/// l is all ones.
struct TransformTerm {
  Integer coeff;
  Index l;
  Index k;

  friend bool operator==(const TransformTerm&, const TransformTerm&) = default;
};

/// Expands the source value at (l, k) in the target model. With with_bars = false, l must be
/// empty (treated as all ones). Terms come out in lexicographic order of (l', k').
std::vector<TransformTerm> expand(Direction direction, bool with_bars, const Index& l, const Index& k);

/// SZ entries ({0}^{l_1-1}, k_1, ..., {0}^{l_r-1}, k_r).
std::vector<int> sz_zero_blocks(const Index& l, const Index& k);

/// which = 1: SZ with zero blocks from dagger with bars; 2: SZ from dagger;
/// 3: dagger with bars from SZ with zero blocks; 4: dagger from SZ. Both sides as infinite
/// series at the given order.
Report verify_transform(int which, const Index& l, const Index& k, int order);

/// Substituting one expansion into the other gives back the identity, in both orders.
Report verify_round_trip(bool with_bars, const Index& l, const Index& k);

}  // namespace qmzv
