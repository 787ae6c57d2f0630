#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "g2/elliptic/j_invariant.hpp"
#include "g2/errors.hpp"
#include "g2/exact/polynomial.hpp"
#include "g2/exact/squarefree.hpp"
#include "g2/ramification/enumerate.hpp"
#include "g2/ramification/profile.hpp"

namespace g2 {

/// z = num(x) / den(x) as a self-map of the projective line.
template <class K>
struct RationalMap {
  Polynomial<K> num, den;

  RationalMap(Polynomial<K> n, Polynomial<K> d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw InvalidArgument("rational map with zero denominator");
    if (num.is_zero()) throw InvalidArgument("constant rational map");
    if (gcd(num, den).degree() > 0) throw InvalidArgument("numerator and denominator share a factor");
    if (degree() < 1) throw InvalidArgument("constant rational map");
  }
  int degree() const { return std::max(num.degree(), den.degree()); }
};

/// Ramification indices over q (a full multiset summing to deg phi, largest
/// first). Points of the fiber at infinity are read off the degree drop.
template <class K>
std::vector<int> fiber_profile(const RationalMap<K>& phi, const ProjectivePoint<K>& q) {
  const int n = phi.degree();
  Polynomial<K> fiber = q.is_infinity() ? phi.den : phi.num - phi.den * *q.value;
  if (fiber.is_zero()) throw InvalidArgument("fiber polynomial vanishes identically");
  std::vector<int> out = multiplicity_profile(fiber);
  if (fiber.degree() < n) out.push_back(n - fiber.degree());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

template <class K>
std::vector<int> fiber_profile(const Polynomial<K>& num, const Polynomial<K>& den,
                               const ProjectivePoint<K>& q) {
  return fiber_profile(RationalMap<K>(num, den), q);
}

struct FiberCheck {
  std::string point;
  std::vector<int> expected, actual;
  bool match;
};

struct CoverReport {
  int degree = 0;
  int claimed_degree = 0;
  std::vector<FiberCheck> fibers;
  int defect_listed = 0;        // sum of sum(e-1) over the listed points
  bool unramified_elsewhere = false;  // defect_listed == 2n - 2
  bool match = false;
  std::vector<std::string> diffs;
};

namespace detail {
inline std::string multiset_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}
}  // namespace detail

/// Compares phi fiber by fiber with a claimed profile whose k-th fiber lies
/// over branch_points[k]. Mismatches are reported, never thrown.
template <class K>
CoverReport verify_cover(const RationalMap<K>& phi, const std::vector<ProjectivePoint<K>>& branch_points,
                         const RamificationProfile& claimed,
                         const std::function<std::string(const ProjectivePoint<K>&)>& label = {}) {
  CoverReport r;
  r.degree = phi.degree();
  r.claimed_degree = claimed.degree;
  if (r.degree != claimed.degree)
    r.diffs.push_back("degree " + std::to_string(r.degree) + " vs claimed " + std::to_string(claimed.degree));
  if (branch_points.size() != claimed.fibers.size())
    r.diffs.push_back(std::to_string(branch_points.size()) + " branch points vs " +
                      std::to_string(claimed.fibers.size()) + " claimed fibers");
  RamificationProfile as_n{r.degree, claimed.fibers};
  std::size_t k = 0;
  for (; k < branch_points.size() && k < claimed.fibers.size(); ++k) {
    FiberCheck fc;
    fc.point = label ? label(branch_points[k]) : "q" + std::to_string(k + 1);
    fc.actual = fiber_profile(phi, branch_points[k]);
    fc.expected = as_n.full_fiber(k);
    fc.match = fc.actual == fc.expected;
    for (int e : fc.actual) r.defect_listed += e - 1;
    if (!fc.match)
      r.diffs.push_back("over " + fc.point + ": expected " + detail::multiset_text(fc.expected) +
                        ", found " + detail::multiset_text(fc.actual));
    r.fibers.push_back(std::move(fc));
  }
  r.unramified_elsewhere = r.defect_listed == 2 * r.degree - 2;
  if (!r.unramified_elsewhere)
    r.diffs.push_back("listed fibers carry defect " + std::to_string(r.defect_listed) + " of " +
                      std::to_string(2 * r.degree - 2));
  r.match = r.diffs.empty();
  return r;
}

/// Cases of the classification at degree n whose fibers agree with the
/// observed ones, as multisets of fibers (branch point order ignored).
inline std::vector<CaseLabel> matching_cases(int n, std::vector<std::vector<int>> observed) {
  auto normalize = [](std::vector<std::vector<int>> fibers) {
    for (auto& f : fibers) {
      f.erase(std::remove(f.begin(), f.end(), 1), f.end());
      std::sort(f.begin(), f.end(), std::greater<>());
    }
    fibers.erase(std::remove_if(fibers.begin(), fibers.end(), [](const auto& f) { return f.empty(); }),
                 fibers.end());
    std::sort(fibers.begin(), fibers.end());
    return fibers;
  };
  auto want = normalize(std::move(observed));
  std::vector<CaseLabel> out;
  for (const auto& e : enumerate_profiles(n).profiles)
    if (normalize(e.profile.fibers) == want) out.push_back(e.label);
  return out;
}

}  // namespace g2
