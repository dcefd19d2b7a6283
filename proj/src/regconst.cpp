#include "brauer/regconst.hpp"

#include "brauer/error.hpp"
#include "brauer/qmatrix.hpp"

namespace brauer {

namespace {

Rational power(const Rational& q, long n) {
  Rational base = n < 0 ? Rational(1 / q) : q;
  unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

RegulatorConstant assemble(std::vector<TermDeterminant> terms) {
  RegulatorConstant rc;
  rc.ratio = 1;
  for (const auto& t : terms) rc.ratio *= power(t.det, t.coefficient);
  rc.value = square_class(rc.ratio);
  rc.terms = std::move(terms);
  return rc;
}

std::pair<std::size_t, Rational> fixed_gram(const Representation& v, const Pairing& pairing,
                                            const Subgroup& h) {
  const QMatrix basis = fixed_subspace(v, h);
  if (basis.cols() == 0) return {0, Rational(1)};
  QMatrix gram = basis.transpose() * pairing.gram() * basis;
  gram *= Rational(1, static_cast<long>(h.order()));
  Rational det = determinant(gram);
  if (det == 0)
    throw MathError("pairing degenerate on fixed space of '" + h.name() + "'");
  return {basis.cols(), det};
}

}  // namespace

Rational gram_det_fixed(const Representation& v, const Pairing& pairing, const Subgroup& h) {
  return fixed_gram(v, pairing, h).second;
}

RegulatorConstant regulator_constant(const BrauerRelation& theta, const Representation& v,
                                     const std::optional<Pairing>& pairing) {
  if (!(theta.group() == v.group()))
    throw MathError("relation and representation live on different groups");
  const Pairing form = pairing ? *pairing : invariant_pairing(v);
  std::vector<TermDeterminant> terms;
  for (const auto& t : theta.terms()) {
    auto [dim, det] = fixed_gram(v, form, t.subgroup);
    terms.push_back({t.subgroup.name(), t.coefficient, dim, std::move(det)});
  }
  return assemble(std::move(terms));
}

RegulatorConstant regulator_constant(const BrauerRelation& theta,
                                     const PairedRepresentation& v) {
  return regulator_constant(theta, v.rep, v.pairing);
}

Rational double_coset_gram_det(const Subgroup& n, const Subgroup& h) {
  const auto dc = double_cosets(n.parent(), n, h);
  Rational det = 1;
  const Rational denom(static_cast<long>(n.order() * h.order()));
  for (const auto& c : dc.cosets) det *= Rational(static_cast<long>(c.size)) / denom;
  return det;
}

RegulatorConstant regulator_constant_perm(const BrauerRelation& theta, const Subgroup& h) {
  if (!(h.parent() == theta.group())) throw MathError("subgroup belongs to another group");
  std::vector<TermDeterminant> terms;
  for (const auto& t : theta.terms()) {
    const auto dc = double_cosets(theta.group(), t.subgroup, h);
    terms.push_back({t.subgroup.name(), t.coefficient, dc.size(),
                     double_coset_gram_det(t.subgroup, h)});
  }
  return assemble(std::move(terms));
}

std::vector<std::string> SThetaReport::members() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.member) out.push_back(e.label);
  return out;
}

namespace {

// Is `target` a nonnegative integer combination of `columns`? Uses the
// particular solution of the reduced echelon form with free variables zero.
bool nonnegative_integer_combination(const std::vector<ClassFunction>& columns,
                                     const ClassFunction& target) {
  const std::size_t rows = target.size();
  QMatrix aug(rows, columns.size() + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) aug(r, c) = columns[c][r];
    aug(r, columns.size()) = target[r];
  }
  const Echelon e = reduced_row_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == columns.size()) return false;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    const Rational& m = e.reduced(k, columns.size());
    if (m < 0 || m.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

SThetaReport s_theta(const BrauerRelation& theta,
                     const std::vector<LabeledRepresentation>& reps, const Integer& p) {
  if (!is_prime(p)) throw MathError("s_theta: p = " + p.get_str() + " is not prime");
  const Group& g = theta.group();
  SThetaReport report;
  report.p = p;
  std::vector<ClassFunction> chars;
  for (const auto& r : reps) {
    if (!(r.rep.group() == g))
      throw MathError("representation '" + r.label + "' lives on another group");
    ClassFunction chi = character(r.rep);
    if (auto w = self_duality_witness(g, chi))
      throw MathError("representation '" + r.label + "' is not self-dual (class " +
                      std::to_string(*w) + ")");
    chars.push_back(std::move(chi));
  }
  for (const auto& r : reps) {
    RegulatorConstant c = regulator_constant(theta, r.rep, r.pairing);
    const long ord = c.ord(p);
    report.entries.push_back({r.label, std::move(c), ord, ord % 2 != 0});
  }
  report.exhaustive = true;
  for (const auto& t : theta.terms()) {
    const auto perm_chi = to_class_function(fixed_points_character(g, t.subgroup));
    if (!nonnegative_integer_combination(chars, perm_chi)) {
      report.exhaustive = false;
      break;
    }
  }
  return report;
}

}  // namespace brauer
