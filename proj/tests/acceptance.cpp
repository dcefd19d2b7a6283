// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All comparisons are exact.

#include "brauer/local_arith.hpp"
#include "brauer/named_groups.hpp"
#include "brauer/regconst.hpp"
#include "brauer/relations.hpp"
#include "brauer/report.hpp"
#include "brauer/representation.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace brauer;

namespace {

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s = std::to_string(failed_) + " of " + std::to_string(checks_) + " failed";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

SquareClass sq(long n) { return square_class(Rational(n)); }

std::string str(const SquareClass& c) { return c.str(); }

struct DihedralCase {
  NamedGroup ng;
  BrauerRelation theta;
  PairedRepresentation one, eps, rho;
};

DihedralCase dihedral_case(unsigned p) {
  auto ng = named_group(GroupSpec::parse("dihedral:" + std::to_string(2 * p)));
  BrauerRelation theta(ng.group, {{ng.subgroup("1"), 1},
                                  {ng.subgroup("C2"), -2},
                                  {ng.subgroup("Cn"), -1},
                                  {ng.subgroup("G"), 2}});
  auto one = perm_rep(Subgroup::whole(ng.group));
  auto eps = split_off(perm_rep(ng.subgroup("Cn")), one.rep);
  auto rho = split_off(perm_rep(ng.subgroup("C2")), one.rep);
  return {std::move(ng), std::move(theta), one, eps, rho};
}

struct Gl2Case {
  NamedGroup ng;
  BrauerRelation theta;
  PairedRepresentation one, sigma, rho;
};

Gl2Case gl2_case(unsigned p) {
  auto ng = named_group(GroupSpec::parse("gl2:" + std::to_string(p)));
  BrauerRelation theta(ng.group, {{ng.subgroup("U1"), 1}, {ng.subgroup("U2"), -1}});
  auto one = perm_rep(Subgroup::whole(ng.group));
  auto sigma = split_off(perm_rep(ng.subgroup("B")), one.rep);
  auto rho = split_off(split_off(perm_rep(ng.subgroup("U1")), one.rep), sigma.rep);
  return {std::move(ng), std::move(theta), one, sigma, rho};
}

QMatrix random_positive_definite(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4), den(1, 3);
  QMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      l(i, j) = Rational(d(rng), den(rng));
      l(i, j).canonicalize();
    }
  for (std::size_t i = 0; i < n; ++i)
    if (l(i, i) == 0) l(i, i) = 1;
  return l * l.transpose();
}

long fixed_dim_sum(const BrauerRelation& r, const Representation& v) {
  long sum = 0;
  for (const auto& t : r.terms())
    sum += t.coefficient * static_cast<long>(fixed_subspace(v, t.subgroup).cols());
  return sum;
}

// --- criteria ---------------------------------------------------------------

void criterion1(Checker& c) {
  for (unsigned p : {3u, 5u, 7u}) {
    const std::string tag = "p=" + std::to_string(p) + ": ";
    const auto ex = dihedral_case(p);
    const auto rels = find_relations(ex.ng.group);
    c.expect(rels.size() == 1, tag + "expected one relation, got " + std::to_string(rels.size()));
    if (rels.size() == 1) {
      const auto& terms = rels[0].terms();
      const std::vector<long> want{1, -2, -1, 2};
      const std::vector<std::string> names{"1", "C2", "Cn", "G"};
      c.expect(terms.size() == 4, tag + "relation has " + std::to_string(terms.size()) + " terms");
      for (std::size_t k = 0; k < std::min<std::size_t>(terms.size(), 4); ++k) {
        c.expect(terms[k].coefficient == want[k], tag + "coefficient " + std::to_string(k));
        c.expect(smallest_conjugate(terms[k].subgroup) ==
                     smallest_conjugate(ex.ng.subgroup(names[k])),
                 tag + "term " + std::to_string(k) + " is not conjugate to " + names[k]);
      }
      for (const auto* v : {&ex.one, &ex.eps, &ex.rho}) {
        const auto got = regulator_constant(rels[0], *v).value;
        c.expect(got == sq(p), tag + "C = " + str(got));
      }
    }
    c.expect(ex.eps.rep.dim() == 1 && ex.rho.rep.dim() == p - 1, tag + "constituent dimensions");
  }
}

void criterion2(Checker& c) {
  for (unsigned p : {3u, 5u}) {
    const std::string tag = "p=" + std::to_string(p) + ": ";
    const auto ng = named_group(GroupSpec::parse("borel:" + std::to_string(p)));
    const long q = p - 1;
    const auto rels = find_relations(
        ng.group, {ng.subgroup("1"), ng.subgroup("Cpm1"), ng.subgroup("Cp"), ng.subgroup("G")});
    c.expect(rels.size() == 1, tag + "expected one relation");
    if (rels.size() != 1) continue;
    std::vector<long> coeffs;
    for (const auto& t : rels[0].terms()) coeffs.push_back(t.coefficient);
    c.expect(coeffs == std::vector<long>{1, -q, -1, q}, tag + "coefficients " + rels[0].str());

    // The Q-irreducibles: 1, the quadratic character eps, the remaining
    // characters of the cyclic quotient (one Q-irreducible of dim p-3, absent
    // for p = 3), and rho of dimension p-1.
    const auto one = perm_rep(Subgroup::whole(ng.group));
    const auto eps = split_off(perm_rep(ng.subgroup("K2")), one.rep);
    const auto rho = split_off(perm_rep(ng.subgroup("Cpm1")), one.rep);
    std::vector<LabeledRepresentation> reps{{"one", one.rep, one.pairing},
                                            {"eps", eps.rep, eps.pairing},
                                            {"rho", rho.rep, rho.pairing}};
    if (p > 3) {
      const auto rest = split_off(split_off(perm_rep(ng.subgroup("Cp")), one.rep), eps.rep);
      reps.push_back({"rest", rest.rep, rest.pairing});
    }
    const auto report = s_theta(rels[0], reps, p);
    c.expect(report.exhaustive, tag + "decomposition not exhaustive");
    const auto members = report.members();
    std::string got;
    for (const auto& m : members) got += m + " ";
    c.expect(members == std::vector<std::string>{"one", "eps", "rho"}, tag + "S_Theta = " + got);
  }
}

void criterion3(Checker& c) {
  for (unsigned p : {3u, 5u}) {
    const std::string tag = "p=" + std::to_string(p) + ": ";
    const auto ex = gl2_case(p);
    const auto& g = ex.ng.group;
    const auto& b = ex.ng.subgroup("B");
    const auto& u1 = ex.ng.subgroup("U1");
    const auto& u2 = ex.ng.subgroup("U2");
    c.expect(double_cosets(g, b, b).size() == 2, tag + "|B\\G/B|");
    c.expect(double_cosets(g, u1, u1).size() == 3, tag + "|U1\\G/U1|");
    c.expect(double_cosets(g, u2, u2).size() == 3, tag + "|U2\\G/U2|");
    c.expect(double_cosets(g, u1, u2).size() == 3, tag + "|U1\\G/U2|");
    c.expect(ex.sigma.rep.dim() == p, tag + "dim sigma = " + std::to_string(ex.sigma.rep.dim()));
    c.expect(ex.rho.rep.dim() == p + 1, tag + "dim rho = " + std::to_string(ex.rho.rep.dim()));
    c.expect(regulator_constant_perm(ex.theta, b).value.is_trivial(), tag + "C(Ind_B 1)");
    c.expect(regulator_constant_perm(ex.theta, u1).value == sq(p), tag + "C(Ind_U1 1)");
    c.expect(regulator_constant(ex.theta, ex.one).value.is_trivial(), tag + "C(1)");
    c.expect(regulator_constant(ex.theta, ex.sigma).value.is_trivial(), tag + "C(sigma)");
    c.expect(regulator_constant(ex.theta, ex.rho).value == sq(p), tag + "C(rho)");
  }
}

void criterion4(Checker& c) {
  // Directly from the group data.
  const auto ng = named_group(GroupSpec::parse("gl2:3"));
  const auto& g = ng.group;
  const BrauerRelation theta(g, {{ng.subgroup("U1"), 1}, {ng.subgroup("U2"), -1}});
  const auto l11 =
      LocalPrimeData::make("l=11", ng.subgroup("D"), ng.subgroup("I"), SplitMultiplicative{1});
  c.expect(to_string(splitting(g, ng.subgroup("U1"), l11.decomposition, l11.inertia)) ==
               "{(1,2),(3,1),(3,1)}",
           "splitting in F^U1");
  c.expect(to_string(splitting(g, ng.subgroup("U2"), l11.decomposition, l11.inertia)) ==
               "{(1,1),(1,1),(3,2)}",
           "splitting in F^U2");
  c.expect(c_ratio_ord(theta, {l11}, 3) == 1, "c_ratio_ord");

  // Through the config and the report.
  const Job job(JobConfig::load(std::string(BRAUER_CONFIG_DIR) + "/x1_11.cfg"));
  const auto r = report_parity(job);
  c.expect(r.value("splitting.l=11.U1") == "{(1,2),(3,1),(3,1)}", "report splitting U1");
  c.expect(r.value("splitting.l=11.U2") == "{(1,1),(1,1),(3,2)}", "report splitting U2");
  c.expect(r.value("c_ratio_ord") == "1", "report c_ratio_ord");
  c.expect(r.value("s_theta") == "rho", "report s_theta = " + r.value("s_theta"));
  c.expect(r.value("conclusion") == "m_rho is odd", "conclusion: " + r.value("conclusion"));
}

void criterion5(Checker& c) {
  std::mt19937 rng(0xc5);
  const auto dih = dihedral_case(3);
  const auto gl2 = gl2_case(3);
  const std::vector<std::pair<const BrauerRelation*, const PairedRepresentation*>> cases{
      {&dih.theta, &dih.one}, {&dih.theta, &dih.eps},   {&dih.theta, &dih.rho},
      {&gl2.theta, &gl2.one}, {&gl2.theta, &gl2.sigma}, {&gl2.theta, &gl2.rho}};
  for (const auto& [theta, v] : cases) {
    const auto base = regulator_constant(*theta, *v).value;
    for (int trial = 0; trial < 50; ++trial) {
      const auto q = invariant_pairing(v->rep, random_positive_definite(rng, v->rep.dim()));
      const auto got = regulator_constant(*theta, v->rep, q).value;
      c.expect(got == base, "seed " + std::to_string(trial) + ": " + str(got) + " vs " + str(base));
    }
  }
}

void criterion6(Checker& c) {
  for (const char* spec : {"dihedral:6", "dihedral:10", "dihedral:14", "gl2:3"}) {
    const auto ng = named_group(GroupSpec::parse(spec));
    for (const auto& n : ng.subgroups)
      for (const auto& h : ng.subgroups) {
        const auto v = perm_rep(h);
        const auto det = gram_det_fixed(v.rep, v.pairing, n);
        const auto formula = oracle::double_coset_formula(n, h);
        c.expect(det == formula, std::string(spec) + " N=" + n.name() + " H=" + h.name() + ": " +
                                     to_string(det) + " vs " + to_string(formula));
      }
  }
}

void criterion7(Checker& c) {
  // Relations and representations of every suite group.
  struct Suite {
    NamedGroup ng;
    std::vector<BrauerRelation> relations;
    std::vector<Representation> reps;
  };
  std::vector<Suite> suites;
  for (unsigned p : {3u, 5u, 7u}) {
    auto ex = dihedral_case(p);
    auto rels = find_relations(ex.ng.group);
    suites.push_back({ex.ng, rels, {ex.one.rep, ex.eps.rep, ex.rho.rep}});
  }
  for (unsigned p : {3u, 5u}) {
    auto ng = named_group(GroupSpec::parse("borel:" + std::to_string(p)));
    auto rels = find_relations(ng.group);
    const auto one = perm_rep(Subgroup::whole(ng.group));
    suites.push_back({ng, rels,
                      {one.rep, split_off(perm_rep(ng.subgroup("K2")), one.rep).rep,
                       split_off(perm_rep(ng.subgroup("Cpm1")), one.rep).rep}});
  }
  {
    auto ex = gl2_case(3);
    auto rels = find_relations(ex.ng.group);
    suites.push_back({ex.ng, rels, {ex.one.rep, ex.sigma.rep, ex.rho.rep}});
  }
  for (auto& s : suites) {
    for (const auto& h : s.ng.subgroups) s.reps.push_back(perm_rep(h).rep);
    c.expect(!s.relations.empty(), s.ng.spec.str() + ": no relations");
    for (const auto& r : s.relations)
      for (const auto& v : s.reps)
        c.expect(fixed_dim_sum(r, v) == 0,
                 s.ng.spec.str() + ": " + r.str() + " on a rep of dim " + std::to_string(v.dim()));
  }

  // Sum of e*f over every splitting of every distinguished subgroup, for each
  // admissible (D, I) among the subgroup class representatives.
  for (const char* spec : {"gl2:3", "dihedral:10", "borel:5"}) {
    const auto ng = named_group(GroupSpec::parse(spec));
    const auto subs = subgroups_up_to_conjugacy(ng.group);
    for (const auto& d : subs)
      for (const auto& i : subs) {
        if (!i.is_subgroup_of(d) || !i.is_normal_in(d)) continue;
        for (const auto& h : ng.subgroups) {
          long total = 0;
          for (const auto& lf : splitting(ng.group, h, d, i)) total += lf.e * lf.f;
          c.expect(total == static_cast<long>(h.index()),
                   std::string(spec) + " H=" + h.name() + ": sum e*f = " + std::to_string(total));
        }
      }
  }

  const auto ex = gl2_case(3);
  const std::vector<std::pair<std::string, const PairedRepresentation*>> reps{
      {"one", &ex.one}, {"sigma", &ex.sigma}, {"rho", &ex.rho}};
  for (const auto& [na, a] : reps)
    for (const auto& [nb, b] : reps) {
      const auto ca = regulator_constant(ex.theta, *a);
      const auto cb = regulator_constant(ex.theta, *b);
      const auto cs = regulator_constant(ex.theta, direct_sum(*a, *b));
      c.expect(cs.value == ca.value * cb.value, "C(" + na + " + " + nb + ")");
      c.expect(cs.ratio == ca.ratio * cb.ratio, "ratio of " + na + " + " + nb);
    }
}

void criterion8(Checker& c) {
  const auto ex = gl2_case(3);
  const auto& q = ex.sigma.pairing.gram();
  for (const char* name : {"B", "U1"}) {
    const auto& h = ex.ng.subgroup(name);
    const auto maps = oracle::equivariant_map_gram(ex.sigma.rep, q, h);
    const auto& at_one = maps.values_at_identity;
    const auto canonical = fixed_subspace(ex.sigma.rep, h);
    c.expect(at_one.cols() == canonical.cols(), std::string(name) + ": dimension");
    if (at_one.cols() != canonical.cols()) continue;

    // Same basis: (1/|H|)<,> on the vectors f(1).
    const Rational inv_h(1, static_cast<long>(h.order()));
    const auto direct = determinant(at_one.transpose() * q * at_one * inv_h);
    c.expect(maps.gram_det == direct, std::string(name) + ": " + to_string(maps.gram_det) +
                                          " vs " + to_string(direct));

    // Canonical basis: differs by the square of the change of basis.
    const auto t = inverse(canonical.transpose() * canonical) * canonical.transpose() * at_one;
    c.expect(canonical * t == at_one, std::string(name) + ": f(1) not in V^H");
    const auto fixed = gram_det_fixed(ex.sigma.rep, ex.sigma.pairing, h);
    const auto dt = determinant(t);
    c.expect(maps.gram_det == fixed * dt * dt, std::string(name) + ": canonical basis");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<void(Checker&)> fn;
  };
  const Criterion criteria[] = {
      {"1 dihedral relation and regulator constants", 5, criterion1},
      {"2 Borel relation and S_Theta", 10, criterion2},
      {"3 GL2 double cosets, Steinberg split, regulator constants", 60, criterion3},
      {"4 X1(11) splitting and parity", 10, criterion4},
      {"5 pairing independence", 120, criterion5},
      {"6 Gram path equals double-coset formula", 600, criterion6},
      {"7 structural properties", 600, criterion7},
      {"8 equivariant-map inner product", 600, criterion8},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Checker checker;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.fn(checker);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < cr.limit_seconds;
    const bool pass = error.empty() && checker.ok() && in_time;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  criterion " << cr.name << "  (" << checker.checks()
         << " checks, " << seconds << " s";
    if (!in_time) line << ", limit " << cr.limit_seconds << " s";
    line << ")";
    if (!error.empty()) line << "  exception: " << error;
    if (!checker.ok()) line << "  " << checker.summary();
    std::cout << line.str() << std::endl;
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
