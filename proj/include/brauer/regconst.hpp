#pragma once

#include "brauer/exact_linalg.hpp"
#include "brauer/relations.hpp"
#include "brauer/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brauer {

struct TermDeterminant {
  std::string subgroup;
  long coefficient;
  std::size_t fixed_dim;
  Rational det;  // det((1/|H|) <,> on V^H)
};

/// C(theta, V) in Q*/Q*^2 together with the per-term determinants that
/// produced it.
struct RegulatorConstant {
  Rational ratio;  // prod det^n_i, before reduction mod squares
  SquareClass value;
  std::vector<TermDeterminant> terms;

  long ord(const Integer& p) const { return ord_p(ratio, p); }
};

/// det of [(1/|H|) b_i^T Q b_j] over the canonical basis b of V^H; 1 when
/// V^H = 0. Throws MathError if the form is degenerate there.
Rational gram_det_fixed(const Representation& v, const Pairing& pairing,
                        const Subgroup& h);

/// Gram determinants of every term, multiplied with the relation's exponents.
/// The pairing defaults to the averaged identity form.
RegulatorConstant regulator_constant(const BrauerRelation& theta, const Representation& v,
                                     const std::optional<Pairing>& pairing = std::nullopt);
RegulatorConstant regulator_constant(const BrauerRelation& theta,
                                     const PairedRepresentation& v);

/// C(theta, Q[G/H]) with the standard pairing, from double-coset sizes alone:
/// each term N contributes prod over x in N\G/H of |NxH| / (|N||H|).
RegulatorConstant regulator_constant_perm(const BrauerRelation& theta, const Subgroup& h);
Rational double_coset_gram_det(const Subgroup& n, const Subgroup& h);

struct LabeledRepresentation {
  std::string label;
  Representation rep;
  std::optional<Pairing> pairing;
};

struct SThetaEntry {
  std::string label;
  RegulatorConstant c;
  long ord;
  bool member;
};

struct SThetaReport {
  Integer p;
  std::vector<SThetaEntry> entries;  // in input order
  /// True when every permutation character of a term of theta is a
  /// nonnegative integer combination of the supplied characters, so that any
  /// other irreducible has zero fixed space under every term.
  bool exhaustive = false;

  std::vector<std::string> members() const;
};

/// Throws MathError naming the witnessing class if a representation is not
/// self-dual.
SThetaReport s_theta(const BrauerRelation& theta,
                     const std::vector<LabeledRepresentation>& reps, const Integer& p);

}  // namespace brauer
