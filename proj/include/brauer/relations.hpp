#pragma once

#include "brauer/group.hpp"

#include <optional>
#include <vector>

namespace brauer {

struct RelationTerm {
  Subgroup subgroup;
  long coefficient;  // nonzero
};

/// Integer combination sum n_i H_i of subgroups whose permutation characters
/// cancel. Positive coefficients form one side of the isomorphism
/// (+)_i Ind 1 = (+)_j Ind 1, negative coefficients the other.
class BrauerRelation {
 public:
  /// Drops zero coefficients; does not check that the characters cancel.
  BrauerRelation(Group g, std::vector<RelationTerm> terms);

  const Group& group() const { return group_; }
  const std::vector<RelationTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  BrauerRelation scaled(long factor) const;
  /// e.g. "1 - 2*C2 - Cn + 2*G"
  std::string str() const;

 private:
  Group group_;
  std::vector<RelationTerm> terms_;
};

/// Basis of the integer kernel of the (classes x subgroups) matrix of
/// permutation characters, in canonical normalisation. When `subgroups` is
/// empty, one representative of each conjugacy class of subgroups is used.
std::vector<BrauerRelation> find_relations(const Group& g,
                                           std::vector<Subgroup> subgroups = {});

struct RelationVerdict {
  bool holds = true;
  std::optional<std::size_t> witness_class;  // first class with nonzero sum
  long value = 0;                            // the sum at that class
};

RelationVerdict verify_relation(const BrauerRelation& theta);

}  // namespace brauer
