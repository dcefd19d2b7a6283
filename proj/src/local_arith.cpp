#include "brauer/local_arith.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

const char* const kPolarisationCaveat =
    "Conditional on A/K being principally polarised; when p = 2 the polarisation "
    "must also be induced by a K-rational divisor.";

std::string describe(const ReductionModel& model) {
  if (std::holds_alternative<GoodReduction>(model)) return "good";
  if (auto* m = std::get_if<SplitMultiplicative>(&model))
    return "split_multiplicative " + m->c.get_str();
  std::ostringstream os;
  os << "custom";
  for (const auto& [ef, c] : std::get<CustomTable>(model).table)
    os << " (" << ef.first << "," << ef.second << ")=" << c;
  return os.str();
}

LocalPrimeData LocalPrimeData::make(std::string label, Subgroup decomposition,
                                    Subgroup inertia, ReductionModel model) {
  if (!inertia.is_normal_in(decomposition))
    throw MathError("prime '" + label + "': inertia group is not normal in the decomposition group");
  const Group& g = decomposition.parent();
  bool cyclic = false;
  std::vector<Elem> gens(inertia.members().begin(), inertia.members().end());
  gens.push_back(0);
  for (Elem d : decomposition.members()) {
    gens.back() = d;
    if (Subgroup::generated_by(g, gens).order() == decomposition.order()) {
      cyclic = true;
      break;
    }
  }
  if (!cyclic) throw MathError("prime '" + label + "': D/I is not cyclic");
  if (auto* m = std::get_if<SplitMultiplicative>(&model); m && m->c <= 0)
    throw MathError("prime '" + label + "': Tamagawa number must be positive");
  return {std::move(label), std::move(decomposition), std::move(inertia), std::move(model)};
}

std::string to_string(const SplittingType& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < s.size(); ++k)
    os << (k ? "," : "") << '(' << s[k].e << ',' << s[k].f << ')';
  os << '}';
  return os.str();
}

SplittingType splitting(const Group& g, const Subgroup& h, const Subgroup& d,
                        const Subgroup& i) {
  if (!(h.parent() == g) || !(d.parent() == g) || !(i.parent() == g))
    throw MathError("splitting: subgroup belongs to another group");
  if (!i.is_normal_in(d)) throw MathError("splitting: I is not normal in D");
  SplittingType out;
  for (const auto& dc : double_cosets(g, d, h).cosets) {
    const Subgroup conj = h.conjugate(dc.representative);
    long d_meet = 0, i_meet = 0;
    for (Elem x : d.members()) d_meet += conj.contains(x);
    for (Elem x : i.members()) i_meet += conj.contains(x);
    const long e = static_cast<long>(i.order()) / i_meet;
    const long local_degree = static_cast<long>(d.order()) / d_meet;
    out.push_back({e, local_degree / e});
  }
  std::sort(out.begin(), out.end());
  return out;
}

long tamagawa_ord(const ReductionModel& model, const SplittingType& s, const Integer& p) {
  if (std::holds_alternative<GoodReduction>(model)) return 0;
  long total = 0;
  if (auto* m = std::get_if<SplitMultiplicative>(&model)) {
    for (const auto& lf : s) total += ord_p(Integer(Integer(lf.e) * m->c), p);
    return total;
  }
  const auto& table = std::get<CustomTable>(model).table;
  for (const auto& lf : s) {
    auto it = table.find({lf.e, lf.f});
    if (it == table.end())
      throw ModelTableGap("custom Tamagawa table has no entry for (e,f) = (" +
                          std::to_string(lf.e) + "," + std::to_string(lf.f) + ")");
    total += ord_p(it->second, p);
  }
  return total;
}

std::vector<PrimeContribution> c_ratio_breakdown(const BrauerRelation& theta,
                                                 const std::vector<LocalPrimeData>& primes,
                                                 const Integer& p) {
  std::vector<PrimeContribution> out;
  for (const auto& prime : primes) {
    if (!(prime.decomposition.parent() == theta.group()))
      throw MathError("prime '" + prime.label + "' lives on another group");
    PrimeContribution pc{prime.label, {}, 0};
    for (const auto& t : theta.terms()) {
      SplittingType s = splitting(theta.group(), t.subgroup, prime.decomposition, prime.inertia);
      const long ord = tamagawa_ord(prime.model, s, p);
      pc.total += t.coefficient * ord;
      pc.terms.push_back({t.subgroup.name(), t.coefficient, std::move(s), ord});
    }
    out.push_back(std::move(pc));
  }
  return out;
}

long c_ratio_ord(const BrauerRelation& theta, const std::vector<LocalPrimeData>& primes,
                 const Integer& p) {
  long total = 0;
  for (const auto& pc : c_ratio_breakdown(theta, primes, p)) total += pc.total;
  return total;
}

ParityReport predict_parity(const BrauerRelation& theta,
                            const std::vector<LabeledRepresentation>& reps,
                            const std::vector<LocalPrimeData>& primes, const Integer& p) {
  ParityReport r;
  r.s_theta = s_theta(theta, reps, p);
  r.primes = c_ratio_breakdown(theta, primes, p);
  for (const auto& pc : r.primes) r.c_ratio_ord += pc.total;
  r.parity = static_cast<int>(((r.c_ratio_ord % 2) + 2) % 2);
  const char* word = r.parity ? "odd" : "even";

  const auto members = r.s_theta.members();
  if (members.empty()) {
    r.conclusion = std::string("S_Theta is empty; the local data has ") + word + " valuation";
    if (r.parity) r.warnings.push_back("odd valuation with empty S_Theta: the inputs are inconsistent");
  } else {
    std::string sum;
    for (std::size_t k = 0; k < members.size(); ++k) sum += (k ? " + m_" : "m_") + members[k];
    r.conclusion = sum + " is " + word;
  }
  if (!r.s_theta.exhaustive)
    r.warnings.push_back(
        "the supplied representations do not account for every permutation character in "
        "the relation; S_Theta may miss constituents");
  return r;
}

}  // namespace brauer
