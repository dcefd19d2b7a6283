#pragma once

#include "brauer/group.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace brauer {

enum class GroupFamily { Cyclic, Dihedral, GL2, BorelQuotient };

/// Parsed form of "cyclic:n", "dihedral:2n", "gl2:p", "borel:p".
struct GroupSpec {
  GroupFamily family;
  unsigned parameter;

  static GroupSpec parse(std::string_view text);  // throws ConfigError
  std::string str() const;
  bool operator==(const GroupSpec&) const = default;
};

/// 2x2 matrix over F_p, entries in [0, p).
struct Mat2 {
  unsigned a, b, c, d;
};

/// A named group with its distinguished subgroups, in a fixed order.
///
///  cyclic:n      1, G
///  dihedral:2n   1, C2 (one reflection), Cn (rotations), G
///  borel:p       1, Cpm1 (the point stabiliser, order p-1), Cp (translations),
///                K2 (index 2), G.  Realised as x -> ax + b on F_p.
///  gl2:p         1, I = (1 *; 0 1), D = (* *; 0 1), U1 = (sq *; 0 *),
///                U2 = (* *; 0 sq), B = (* *; 0 *), G.  Acts on the p^2-1
///                nonzero column vectors of F_p^2; "sq" is a nonzero square.
struct NamedGroup {
  GroupSpec spec;
  Group group;
  std::vector<Subgroup> subgroups;

  /// Throws ConfigError for unknown names.
  const Subgroup& subgroup(std::string_view name) const;
  bool has_subgroup(std::string_view name) const;

  /// For gl2 only: the matrix of an element.
  std::optional<Mat2> matrix(Elem e) const;
};

NamedGroup named_group(const GroupSpec& spec);

/// Index of the nonzero vector (x, y) of F_p^2 in the gl2 action: x + p*y - 1.
Point gl2_point(unsigned p, unsigned x, unsigned y);
Perm gl2_perm(unsigned p, const Mat2& m);

}  // namespace brauer
