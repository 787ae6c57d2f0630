#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "g2/elliptic/j_invariant.hpp"
#include "g2/genus2/igusa.hpp"

namespace oracle {

/// Root-difference definition of J2, J4, J6, J10 for a sextic with leading
/// coefficient `lead` and roots r (an infinite root stands for a quintic;
/// any difference with it counts as 1). Sums run over all 720 orderings and
/// are divided by the stabilizer size of each monomial.
template <class K>
g2::IgusaInvariants<K> igusa_from_roots(const K& lead, const std::array<g2::ProjectivePoint<K>, 6>& r) {
  auto diff = [&](int i, int j) -> K {
    if (r[i].is_infinity() || r[j].is_infinity()) return K(g2::Rational(1));
    return *r[i].value - *r[j].value;
  };
  K sq[6][6];
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) sq[i][j] = i == j ? K(0) : diff(i, j) * diff(i, j);

  std::array<int, 6> p{0, 1, 2, 3, 4, 5};
  K s2(0), s4(0), s6(0);
  do {
    auto d = [&](int a, int b) { return sq[p[a - 1]][p[b - 1]]; };
    s2 = s2 + d(1, 2) * d(3, 4) * d(5, 6);
    s4 = s4 + d(1, 2) * d(2, 3) * d(3, 1) * d(4, 5) * d(5, 6) * d(6, 4);
    s6 = s6 + d(1, 2) * d(2, 3) * d(3, 1) * d(4, 5) * d(5, 6) * d(6, 4) * d(1, 4) * d(2, 5) * d(3, 6);
  } while (std::next_permutation(p.begin(), p.end()));

  K prod(g2::Rational(1));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) prod = prod * sq[i][j];

  K a2 = lead * lead, a4 = a2 * a2, a6 = a4 * a2, a10 = a6 * a4;
  return {a2 * s2 / K(g2::Rational(48)), a4 * s4 / K(g2::Rational(72)), a6 * s6 / K(g2::Rational(12)),
          a10 * prod};
}

}  // namespace oracle
