#pragma once

#include <string>
#include <vector>

#include "g2/errors.hpp"
#include "g2/ramification/profile.hpp"

namespace g2 {

/// One block of a fiber template: `index` repeated either once (fixed) or
/// (n - offset)/2 times.
struct TemplatePart {
  int index;
  int offset;
  bool fixed = false;

  int count(int n) const { return fixed ? 1 : (n - offset) / 2; }
  std::string text() const {
    std::string base = "(" + std::to_string(index) + ")";
    if (fixed) return base;
    return base + "^((n-" + std::to_string(offset) + ")/2)";
  }
};

using FiberTemplate = std::vector<TemplatePart>;

struct CaseLabel {
  bool odd;
  std::string name;  // "I", "II.iii", "I.2", ...
  std::string text() const { return (odd ? "odd " : "even ") + name; }
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

struct ProfileTemplate {
  CaseLabel label;
  std::vector<FiberTemplate> fibers;

  std::string text() const {
    std::string out = "(";
    for (std::size_t k = 0; k < fibers.size(); ++k) {
      if (k) out += ", ";
      std::string f;
      for (const auto& part : fibers[k]) f += (f.empty() ? "" : " ") + part.text();
      out += f;
    }
    return out + ")";
  }
};

namespace detail {
inline TemplatePart two(int offset) { return {2, offset, false}; }
inline TemplatePart once(int index) { return {index, 0, true}; }
}  // namespace detail

/// Branching of the induced map of the line for odd n.
inline const std::vector<ProfileTemplate>& odd_templates() {
  using detail::once;
  using detail::two;
  static const std::vector<ProfileTemplate> t = {
      {{true, "I"}, {{two(1)}, {two(1)}, {two(1)}, {two(3)}, {once(2)}}},
      {{true, "II.i"}, {{two(1)}, {two(1)}, {two(1)}, {once(4), two(7)}}},
      {{true, "II.ii"}, {{two(1)}, {two(1)}, {two(1)}, {two(1)}}},
      {{true, "II.iii"}, {{two(1)}, {two(1)}, {once(4), two(5)}, {two(3)}}},
      {{true, "III.i"}, {{two(1)}, {two(1)}, {two(1)}, {once(3), two(5)}}},
      {{true, "III.ii"}, {{two(1)}, {two(1)}, {once(3), two(3)}, {two(3)}}},
  };
  return t;
}

/// Branching of the induced map of the line for even n: the three generic
/// cases followed by their degenerations. II.5, II.6 and III.1 are kept as
/// classified even though their defect is not 2n-2.
inline const std::vector<ProfileTemplate>& even_templates() {
  using detail::once;
  using detail::two;
  static const std::vector<ProfileTemplate> t = {
      {{false, "I"}, {{two(2)}, {two(2)}, {two(2)}, {two(0)}, {once(2)}}},
      {{false, "II"}, {{two(4)}, {two(2)}, {two(0)}, {two(0)}, {once(2)}}},
      {{false, "III"}, {{two(6)}, {two(0)}, {two(0)}, {two(0)}, {once(2)}}},
      {{false, "I.1"}, {{two(0)}, {two(2)}, {two(2)}, {two(0)}}},
      {{false, "I.2"}, {{two(2)}, {two(2)}, {once(4), two(6)}, {two(0)}}},
      {{false, "I.3"}, {{two(2)}, {two(2)}, {two(2)}, {once(4), two(4)}}},
      {{false, "I.4"}, {{once(3), two(4)}, {two(2)}, {two(2)}, {two(0)}}},
      {{false, "II.1"}, {{two(2)}, {two(2)}, {two(0)}, {two(0)}}},
      {{false, "II.2"}, {{two(4)}, {two(0)}, {two(0)}, {two(0)}}},
      {{false, "II.3"}, {{once(4), two(8)}, {two(2)}, {two(0)}, {two(0)}}},
      {{false, "II.4"}, {{two(4)}, {once(4), two(6)}, {two(0)}, {two(0)}}},
      {{false, "II.5"}, {{two(4)}, {two(2)}, {two(4)}, {two(0)}}},
      {{false, "II.6"}, {{once(3), two(6)}, {two(2)}, {once(4), two(0)}, {two(0)}}},
      {{false, "II.7"}, {{two(4)}, {once(3), two(4)}, {two(0)}, {two(0)}}},
      {{false, "III.1"}, {{two(4)}, {two(0)}, {two(0)}, {once(4), two(0)}}},
      {{false, "III.2"}, {{two(6)}, {once(4), two(4)}, {two(0)}, {two(0)}}},
      {{false, "III.3"}, {{two(0)}, {two(0)}, {two(0)}, {once(4), two(10)}}},
      {{false, "III.4"}, {{once(3), two(8)}, {two(0)}, {two(0)}, {two(0)}}},
  };
  return t;
}

inline const std::vector<ProfileTemplate>& templates_for(int n) {
  return n % 2 ? odd_templates() : even_templates();
}

}  // namespace g2
