#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "g2/errors.hpp"

namespace g2 {

/// Branching data of a degree-n cover of the projective line: for each branch
/// point the ramification indices >= 2 over it (points of index 1 implicit).
struct RamificationProfile {
  int degree = 0;
  std::vector<std::vector<int>> fibers;

  static int fiber_defect(const std::vector<int>& f) {
    int d = 0;
    for (int e : f) d += e - 1;
    return d;
  }
  int rh_defect() const {
    int d = 0;
    for (const auto& f : fibers) d += fiber_defect(f);
    return d;
  }
  /// Every fiber fits inside n points counted with multiplicity.
  bool fits() const {
    return std::all_of(fibers.begin(), fibers.end(), [&](const auto& f) {
      return std::accumulate(f.begin(), f.end(), 0) <= degree;
    });
  }
  /// The full multiset over fiber k, implicit 1's included, largest first.
  std::vector<int> full_fiber(std::size_t k) const {
    std::vector<int> out = fibers.at(k);
    int used = std::accumulate(out.begin(), out.end(), 0);
    for (int i = used; i < degree; ++i) out.push_back(1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }
  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;
};

/// "(2)^2 (4)" style text for one fiber, "(-)" when unramified.
inline std::string fiber_text(const std::vector<int>& f) {
  if (f.empty()) return "(-)";
  std::vector<int> s = f;
  std::sort(s.begin(), s.end(), std::greater<>());
  std::string out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(s[i]) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::string to_string(const RamificationProfile& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.fibers.size(); ++k) {
    if (k) out += ", ";
    out += fiber_text(p.fibers[k]);
  }
  return out + ")";
}

/// Parity filter on the four fibers over the 2-torsion points. The points of
/// odd index there are Weierstrass points; six must be accounted for, either
/// directly or with one pair of index-2 Weierstrass points sharing a fiber.
inline bool weierstrass_parity_ok(const RamificationProfile& p) {
  if (p.fibers.size() < 4) return false;
  int odd = 0;
  bool has_pair = false;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& f = p.fibers[k];
    int explicit_sum = std::accumulate(f.begin(), f.end(), 0);
    int ones = p.degree - explicit_sum;
    if (ones < 0) return false;
    odd += ones + static_cast<int>(std::count_if(f.begin(), f.end(), [](int e) { return e % 2; }));
    if (std::count(f.begin(), f.end(), 2) >= 2) has_pair = true;
  }
  if (odd == 6) return true;
  return odd == 4 && has_pair;
}

}  // namespace g2
