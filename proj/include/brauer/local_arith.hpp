#pragma once

#include "brauer/regconst.hpp"
#include "brauer/relations.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace brauer {

/// Local reduction behaviour at one prime of the base field. Tamagawa
/// numbers are inputs here; nothing is computed from curve equations.
struct GoodReduction {
  bool operator==(const GoodReduction&) const = default;
};

/// Split multiplicative reduction with base Tamagawa number c (= ord_l j).
/// A prime with ramification index e gets Tamagawa number e * c. The factors
/// |omega / omega_v^0|_v are taken to be trivial.
struct SplitMultiplicative {
  Integer c;
  bool operator==(const SplitMultiplicative&) const = default;
};

/// Explicit Tamagawa number for each (e, f) that occurs.
struct CustomTable {
  std::map<std::pair<long, long>, Integer> table;
  bool operator==(const CustomTable&) const = default;
};

using ReductionModel = std::variant<GoodReduction, SplitMultiplicative, CustomTable>;

std::string describe(const ReductionModel& model);

struct LocalPrimeData {
  std::string label;
  Subgroup decomposition;
  Subgroup inertia;
  ReductionModel model;

  /// Checks I normal in D <= G and D/I cyclic.
  static LocalPrimeData make(std::string label, Subgroup decomposition, Subgroup inertia,
                             ReductionModel model);
};

struct LocalFactor {
  long e;  // ramification index
  long f;  // residue degree
  auto operator<=>(const LocalFactor&) const = default;
};

/// One (e, f) per prime of F^H, sorted lexicographically.
using SplittingType = std::vector<LocalFactor>;

std::string to_string(const SplittingType& s);

/// For each double coset DxH: e = [I : I ∩ xHx^-1], f = [D : D ∩ xHx^-1] / e.
SplittingType splitting(const Group& g, const Subgroup& h, const Subgroup& d,
                        const Subgroup& i);

/// Sum over the primes of ord_p of their Tamagawa numbers. Throws
/// ModelTableGap when a custom table lacks an (e, f).
long tamagawa_ord(const ReductionModel& model, const SplittingType& s, const Integer& p);

struct TermSplitting {
  std::string subgroup;
  long coefficient;
  SplittingType splitting;
  long tamagawa_ord;
};

struct PrimeContribution {
  std::string label;
  std::vector<TermSplitting> terms;
  long total;  // sum of coefficient * tamagawa_ord
};

std::vector<PrimeContribution> c_ratio_breakdown(const BrauerRelation& theta,
                                                 const std::vector<LocalPrimeData>& primes,
                                                 const Integer& p);

/// ord_p of prod_i C(A/F^{H_i}) / prod_j C(A/F^{H'_j}), restricted to the
/// Tamagawa factors of the given primes.
long c_ratio_ord(const BrauerRelation& theta, const std::vector<LocalPrimeData>& primes,
                 const Integer& p);

extern const char* const kPolarisationCaveat;

struct ParityReport {
  SThetaReport s_theta;
  std::vector<PrimeContribution> primes;
  long c_ratio_ord = 0;
  int parity = 0;  // c_ratio_ord mod 2
  std::string conclusion;
  std::vector<std::string> warnings;
};

ParityReport predict_parity(const BrauerRelation& theta,
                            const std::vector<LabeledRepresentation>& reps,
                            const std::vector<LocalPrimeData>& primes, const Integer& p);

}  // namespace brauer
