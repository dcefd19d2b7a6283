#include "brauer/relations.hpp"

#include "brauer/error.hpp"
#include "brauer/qmatrix.hpp"

#include <sstream>

namespace brauer {

BrauerRelation::BrauerRelation(Group g, std::vector<RelationTerm> terms)
    : group_(std::move(g)) {
  for (auto& t : terms) {
    if (!(t.subgroup.parent() == group_))
      throw MathError("relation term '" + t.subgroup.name() + "' belongs to another group");
    if (t.coefficient != 0) terms_.push_back(std::move(t));
  }
}

BrauerRelation BrauerRelation::scaled(long factor) const {
  std::vector<RelationTerm> t = terms_;
  for (auto& x : t) x.coefficient *= factor;
  return BrauerRelation(group_, std::move(t));
}

std::string BrauerRelation::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    long c = t.coefficient;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    if (c != 1) os << c << "*";
    os << (t.subgroup.name().empty() ? "H" + std::to_string(t.subgroup.order())
                                     : t.subgroup.name());
    first = false;
  }
  return os.str();
}

std::vector<BrauerRelation> find_relations(const Group& g, std::vector<Subgroup> subgroups) {
  if (subgroups.empty()) {
    subgroups = subgroups_up_to_conjugacy(g);
    for (auto& s : subgroups) {
      if (s.order() == 1) s = s.renamed("1");
      else if (s.order() == g.order()) s = s.renamed("G");
      else s = s.renamed("H" + std::to_string(s.order()));
    }
    // Disambiguate equal-order classes: H2a, H2b, ...
    for (std::size_t i = 0; i < subgroups.size();) {
      std::size_t j = i;
      while (j < subgroups.size() && subgroups[j].order() == subgroups[i].order()) ++j;
      if (j - i > 1)
        for (std::size_t k = i; k < j; ++k)
          subgroups[k] = subgroups[k].renamed("H" + std::to_string(subgroups[k].order()) +
                                              static_cast<char>('a' + (k - i) % 26));
      i = j;
    }
  }
  QMatrix chars(g.class_count(), subgroups.size());
  for (std::size_t j = 0; j < subgroups.size(); ++j) {
    const auto chi = fixed_points_character(g, subgroups[j]);
    for (std::size_t c = 0; c < chi.size(); ++c) chars(c, j) = chi[c];
  }
  std::vector<BrauerRelation> out;
  for (const auto& v : kernel_basis(chars)) {
    std::vector<RelationTerm> terms;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      if (!v[j].fits_slong_p()) throw MathError("relation coefficient overflows a long");
      terms.push_back({subgroups[j], v[j].get_si()});
    }
    out.emplace_back(g, std::move(terms));
  }
  return out;
}

RelationVerdict verify_relation(const BrauerRelation& theta) {
  const Group& g = theta.group();
  std::vector<long> sum(g.class_count(), 0);
  for (const auto& t : theta.terms()) {
    const auto chi = fixed_points_character(g, t.subgroup);
    for (std::size_t c = 0; c < chi.size(); ++c) sum[c] += t.coefficient * chi[c];
  }
  for (std::size_t c = 0; c < sum.size(); ++c)
    if (sum[c] != 0) return {false, c, sum[c]};
  return {};
}

}  // namespace brauer
