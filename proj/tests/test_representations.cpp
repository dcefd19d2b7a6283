#include "brauer/error.hpp"
#include "brauer/named_groups.hpp"
#include "brauer/representation.hpp"
#include "doctest.h"

using namespace brauer;

namespace {

struct Gl2Case {
  NamedGroup ng;
  PairedRepresentation one, sigma, rho, ind_b, ind_u1;
};

Gl2Case gl2_case(unsigned p) {
  auto ng = named_group(GroupSpec::parse("gl2:" + std::to_string(p)));
  auto ind_b = perm_rep(ng.subgroup("B"));
  auto ind_u1 = perm_rep(ng.subgroup("U1"));
  auto one = perm_rep(Subgroup::whole(ng.group));
  auto sigma = split_off(ind_b, one.rep);
  auto rho = split_off(split_off(ind_u1, one.rep), sigma.rep);
  return {std::move(ng), one, sigma, rho, ind_b, ind_u1};
}

Rational average_character(const Representation& v, const Subgroup& h) {
  Rational sum = 0;
  for (Elem e : h.members()) sum += v.image(e).trace();
  return sum / Rational(static_cast<long>(h.order()));
}

}  // namespace

TEST_CASE("permutation modules") {
  const auto ng = named_group(GroupSpec::parse("gl2:3"));
  CHECK(perm_rep(Subgroup::whole(ng.group)).rep.dim() == 1);
  CHECK(perm_rep(Subgroup::trivial(ng.group)).rep.dim() == 48);
  const auto b = perm_rep(ng.subgroup("B"));
  CHECK(b.rep.dim() == 4);
  CHECK(b.pairing.gram().is_identity());
  // The character counts fixed cosets.
  const auto chi = character(b.rep);
  const auto fp = fixed_points_character(ng.group, ng.subgroup("B"));
  CHECK(chi == to_class_function(fp));
}

TEST_CASE("representations reject non-homomorphisms") {
  const auto ng = named_group(GroupSpec::parse("dihedral:6"));
  std::vector<QMatrix> images(ng.group.order(), QMatrix{{-1}});
  images[0] = QMatrix{{1}};
  CHECK_THROWS_AS(Representation::from_images(ng.group, 1, images), MathError);
  // Generator images that do not satisfy the relations.
  std::vector<QMatrix> gens{QMatrix{{2}}, QMatrix{{1}}};
  CHECK_THROWS_AS(Representation::from_generator_images(ng.group, 1, gens), MathError);
  std::vector<QMatrix> sign{QMatrix{{1}}, QMatrix{{-1}}};
  const auto eps = Representation::from_generator_images(ng.group, 1, sign);
  CHECK(eps.dim() == 1);
}

TEST_CASE("invariant pairings") {
  const auto ng = named_group(GroupSpec::parse("gl2:3"));
  const auto triv = named_group(GroupSpec::parse("cyclic:1"));
  const QMatrix seed{{2, 1}, {1, 3}};
  const auto v1 = direct_sum(Representation::trivial(triv.group), Representation::trivial(triv.group));
  CHECK(invariant_pairing(v1, seed).gram() == seed);

  const auto u1 = perm_rep(ng.subgroup("U1")).rep;
  CHECK(invariant_pairing(u1).gram() == QMatrix::identity(u1.dim()) * Rational(48));

  const auto ex = gl2_case(3);
  const QMatrix q = invariant_pairing(ex.sigma.rep).gram();
  CHECK(q.is_symmetric());
  for (Elem e = 0; e < ng.group.order(); ++e) {
    const auto& m = ex.sigma.rep.image(e);
    CHECK(m.transpose() * q * m == q);
  }
  CHECK_THROWS_AS(invariant_pairing(v1, QMatrix{{1, 2}, {0, 1}}), MathError);
  CHECK_THROWS_AS(invariant_pairing(v1, QMatrix{{1, 0}, {0, -1}}), MathError);
  CHECK_THROWS_AS(Pairing::make(u1, QMatrix::diagonal(std::vector<Rational>(u1.dim(), 0))),
                  MathError);
}

TEST_CASE("fixed subspaces") {
  const auto s3 = named_group(GroupSpec::parse("dihedral:6"));
  const auto& c2 = s3.subgroup("C2");
  const auto v = perm_rep(c2).rep;
  const auto basis = fixed_subspace(v, c2);
  REQUIRE(basis.cols() == 2);
  // Coset 0 is fixed; the other two are swapped.
  CHECK(basis == QMatrix{{1, 0}, {0, 1}, {0, 1}});
  CHECK(fixed_subspace(v, Subgroup::trivial(s3.group)) == QMatrix::identity(3));
  CHECK(fixed_subspace(Representation::trivial(s3.group), Subgroup::whole(s3.group)) ==
        QMatrix{{1}});

  // dim V^H equals the average of the character over H.
  const auto ex = gl2_case(3);
  for (const auto* rep : {&ex.one, &ex.sigma, &ex.rho, &ex.ind_b, &ex.ind_u1})
    for (const auto& h : ex.ng.subgroups) {
      const auto b = fixed_subspace(rep->rep, h);
      CHECK(Rational(static_cast<long>(b.cols())) == average_character(rep->rep, h));
      for (Elem e : h.members()) CHECK(rep->rep.image(e) * b == b);
    }
}

TEST_CASE("intertwiners") {
  const auto ex = gl2_case(3);
  const auto hom_one_b = hom_basis(ex.one.rep, ex.ind_b.rep);
  REQUIRE(hom_one_b.size() == 1);
  CHECK(hom_one_b[0] == QMatrix{{1}, {1}, {1}, {1}});
  CHECK(hom_basis(ex.ind_b.rep, ex.ind_b.rep).size() == 2);
  CHECK(hom_basis(ex.one.rep, ex.sigma.rep).empty());
  CHECK(hom_basis(ex.sigma.rep, ex.rho.rep).empty());
  CHECK(hom_basis(ex.rho.rep, ex.rho.rep).size() == 1);

  // dim Hom equals the character inner product when the irreducibles are
  // absolutely irreducible, as here.
  const auto& g = ex.ng.group;
  const std::vector<const PairedRepresentation*> reps{&ex.one, &ex.sigma, &ex.rho, &ex.ind_b,
                                                      &ex.ind_u1};
  for (const auto* a : reps)
    for (const auto* b : reps) {
      const auto basis = hom_basis(a->rep, b->rep);
      CHECK(Rational(static_cast<long>(basis.size())) ==
            class_inner_product(g, character(a->rep), character(b->rep)));
      for (const auto& x : basis)
        for (Elem e = 0; e < g.order(); ++e) CHECK(b->rep.image(e) * x == x * a->rep.image(e));
    }
}

TEST_CASE("split_off dimensions") {
  for (unsigned p : {3u, 5u}) {
    const auto ex = gl2_case(p);
    CHECK(ex.sigma.rep.dim() == p);
    CHECK(ex.rho.rep.dim() == p + 1);
    CHECK(split_off(ex.ind_b, ex.ind_b.rep).rep.dim() == 0);
    CHECK(split_off(ex.one, ex.sigma.rep).rep.dim() == 1);
  }
  const auto d = named_group(GroupSpec::parse("dihedral:10"));
  const auto one = perm_rep(Subgroup::whole(d.group));
  const auto eps = split_off(perm_rep(d.subgroup("Cn")), one.rep);
  const auto rho = split_off(perm_rep(d.subgroup("C2")), one.rep);
  CHECK(eps.rep.dim() == 1);
  CHECK(rho.rep.dim() == 4);
  CHECK(class_inner_product(d.group, character(eps.rep), character(eps.rep)) == 1);
  CHECK(class_inner_product(d.group, character(rho.rep), character(rho.rep)) == 2);
}

TEST_CASE("characters and self-duality") {
  const auto ex = gl2_case(3);
  const auto& g = ex.ng.group;
  for (const auto& v : character(ex.one.rep)) CHECK(v == 1);
  CHECK(character(ex.sigma.rep)[0] == 3);
  CHECK(class_inner_product(g, character(ex.sigma.rep), character(ex.sigma.rep)) == 1);
  CHECK(class_inner_product(g, character(ex.rho.rep), character(ex.rho.rep)) == 1);
  for (const auto* v : {&ex.one, &ex.sigma, &ex.rho})
    CHECK_FALSE(self_duality_witness(g, character(v->rep)).has_value());

  // A class function that is not real-valued on inverse pairs.
  const auto c3 = named_group(GroupSpec::parse("cyclic:3")).group;
  ClassFunction chi(3, Rational(1));
  const Elem x = c3.generators()[0];
  chi[c3.class_of(x)] = 2;
  CHECK(self_duality_witness(c3, chi).has_value());
}

TEST_CASE("direct sums and restriction") {
  const auto ex = gl2_case(3);
  const auto sum = direct_sum(ex.one, ex.sigma);
  CHECK(sum.rep.dim() == 4);
  CHECK(sum.pairing.gram() == block_diagonal(ex.one.pairing.gram(), ex.sigma.pairing.gram()));
  // Ind_B 1 restricted to its fixed line is the trivial representation.
  const auto line = restrict_to_subspace(ex.ind_b, QMatrix{{1}, {1}, {1}, {1}});
  CHECK(line.rep.dim() == 1);
  for (Elem e = 0; e < ex.ng.group.order(); ++e) CHECK(line.rep.image(e) == QMatrix{{1}});
  CHECK(line.pairing.gram() == QMatrix{{4}});
}
