#pragma once

#include <string>
#include <vector>

#include "g2/errors.hpp"
#include "g2/ramification/profile.hpp"
#include "g2/ramification/templates.hpp"

namespace g2 {

struct EnumeratedProfile {
  CaseLabel label;
  RamificationProfile profile;
  bool rh_ok;      // total defect is 2n - 2
  bool parity_ok;  // Weierstrass parity over the 2-torsion fibers
  bool fits;       // no fiber needs more than n points
  std::vector<std::string> notes;

  bool rh_inconsistent() const { return !rh_ok; }
};

struct DroppedTemplate {
  CaseLabel label;
  std::string reason;
};

struct Enumeration {
  int degree;
  std::vector<EnumeratedProfile> profiles;
  std::vector<DroppedTemplate> dropped;

  const EnumeratedProfile* find(const std::string& name) const {
    for (const auto& p : profiles)
      if (p.label.name == name) return &p;
    return nullptr;
  }
};

/// Instantiates a template at n; the reason is set when some exponent is negative.
inline std::optional<RamificationProfile> instantiate(const ProfileTemplate& t, int n,
                                                      std::string* reason = nullptr) {
  RamificationProfile p{n, {}};
  for (const auto& fiber : t.fibers) {
    std::vector<int> f;
    for (const auto& part : fiber) {
      int c = part.count(n);
      if (c < 0) {
        if (reason)
          *reason = "exponent (n-" + std::to_string(part.offset) + ")/2 = " + std::to_string(c) +
                    " at n=" + std::to_string(n);
        return std::nullopt;
      }
      f.insert(f.end(), static_cast<std::size_t>(c), part.index);
    }
    std::sort(f.begin(), f.end(), std::greater<>());
    p.fibers.push_back(std::move(f));
  }
  return p;
}

/// Every case for degree n in classification order, annotated.
inline Enumeration enumerate_profiles(int n) {
  if (n < 3) throw InvalidArgument("enumerate_profiles needs n >= 3");
  Enumeration out{n, {}, {}};
  for (const auto& t : templates_for(n)) {
    std::string reason;
    auto p = instantiate(t, n, &reason);
    if (!p) {
      out.dropped.push_back({t.label, reason});
      continue;
    }
    EnumeratedProfile e{t.label, *p, p->rh_defect() == 2 * n - 2, weierstrass_parity_ok(*p),
                        p->fits(), {}};
    if (!e.rh_ok)
      e.notes.push_back("defect " + std::to_string(p->rh_defect()) + " != 2n-2 = " +
                        std::to_string(2 * n - 2) + "; kept as classified, not corrected");
    if (!e.fits) e.notes.push_back("a fiber needs more than n points");
    if (e.rh_ok && !e.parity_ok)
      e.notes.push_back("defect is 2n-2 but the Weierstrass parity condition fails");
    out.profiles.push_back(std::move(e));
  }
  return out;
}

}  // namespace g2
