#include "brauer/representation.hpp"

#include "brauer/error.hpp"
#include "brauer/kernels.hpp"

#include <numeric>
#include <random>

namespace brauer {

namespace {

constexpr std::size_t kExhaustiveCheckMaxOrder = 48;
constexpr std::size_t kRandomProductChecks = 100;

void check_homomorphism(const Group& g, std::span<const QMatrix> images) {
  if (!images[g.identity()].is_identity())
    throw MathError("representation does not send the identity to the identity matrix");
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  bool ok = true;
  if (g.order() <= kExhaustiveCheckMaxOrder) {
    ok = kernels::parallel::homomorphism_holds(g, images, all, all);
  } else {
    // Generators against every element already forces the homomorphism
    // property; the random products are an independent spot check.
    ok = kernels::parallel::homomorphism_holds(g, images, g.generators(), all);
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(g.order() - 1));
    for (std::size_t i = 0; ok && i < kRandomProductChecks; ++i) {
      const Elem a[] = {pick(rng)};
      const Elem b[] = {pick(rng)};
      ok = kernels::serial::homomorphism_holds(g, images, a, b);
    }
  }
  if (!ok) throw MathError("matrices do not define a group homomorphism");
}

}  // namespace

Representation::Representation(Group g, std::size_t dim, std::vector<QMatrix> images)
    : group_(std::move(g)),
      dim_(dim),
      images_(std::make_shared<const std::vector<QMatrix>>(std::move(images))) {}

Representation Representation::from_images(const Group& g, std::size_t dim,
                                           std::vector<QMatrix> images) {
  if (images.size() != g.order())
    throw MathError("representation needs one image per group element");
  for (const auto& m : images)
    if (m.rows() != dim || m.cols() != dim)
      throw MathError("representation image has the wrong size");
  check_homomorphism(g, images);
  return Representation(g, dim, std::move(images));
}

Representation Representation::from_generator_images(const Group& g, std::size_t dim,
                                                     std::span<const QMatrix> gen_images) {
  if (gen_images.size() != g.generators().size())
    throw MathError("representation needs one image per generator");
  std::vector<QMatrix> images(g.order());
  images[g.identity()] = QMatrix::identity(dim);
  for (Elem e = 1; e < g.order(); ++e) {
    const auto [parent, k] = g.bfs_step(e);
    images[e] = gen_images[k] * images[parent];
  }
  return from_images(g, dim, std::move(images));
}

Representation Representation::trivial(const Group& g) {
  return Representation(g, 1, std::vector<QMatrix>(g.order(), QMatrix::identity(1)));
}

Pairing Pairing::make(const Representation& v, QMatrix gram) {
  if (gram.rows() != v.dim() || gram.cols() != v.dim())
    throw MathError("pairing size does not match the representation");
  if (!gram.is_symmetric()) throw MathError("pairing is not symmetric");
  if (determinant(gram) == 0) throw MathError("pairing is degenerate");
  // Invariance under generators implies invariance under the whole group.
  for (Elem s : v.group().generators()) {
    const QMatrix& m = v.image(s);
    if (!(m.transpose() * gram * m == gram)) throw MathError("pairing is not G-invariant");
  }
  return Pairing(std::move(gram));
}

PairedRepresentation perm_rep(const Subgroup& h) {
  const Group& g = h.parent();
  const CosetSpace cs = left_cosets(h);
  const std::size_t n = cs.size();
  std::vector<QMatrix> images(g.order(), QMatrix(n, n));
  for (Elem e = 0; e < g.order(); ++e)
    for (std::uint32_t c = 0; c < n; ++c) images[e](act_on_coset(g, cs, e, c), c) = 1;
  Representation rep = Representation::from_images(g, n, std::move(images));
  Pairing pairing = Pairing::make(rep, QMatrix::identity(n));
  return {std::move(rep), std::move(pairing)};
}

Pairing invariant_pairing(const Representation& v, const QMatrix& seed) {
  if (seed.rows() != v.dim() || seed.cols() != v.dim())
    throw MathError("pairing seed has the wrong size");
  if (!seed.is_symmetric()) throw MathError("pairing seed is not symmetric");
  for (std::size_t k = 1; k <= seed.rows(); ++k)
    if (determinant(seed.block(0, 0, k, k)) <= 0)
      throw MathError("pairing seed is not positive definite (leading minor " +
                      std::to_string(k) + ")");
  std::vector<Elem> all(v.group().order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Pairing::make(v, kernels::parallel::congruence_sum(v.images(), all, seed));
}

Pairing invariant_pairing(const Representation& v) {
  return invariant_pairing(v, QMatrix::identity(v.dim()));
}

QMatrix fixed_subspace(const Representation& v, const Subgroup& h) {
  if (!(h.parent() == v.group())) throw MathError("fixed_subspace: foreign subgroup");
  if (v.dim() == 0) return {};
  QMatrix projector = kernels::parallel::image_sum(v.images(), h.members());
  projector *= Rational(1, h.order());
  return column_space_basis(projector);
}

std::vector<QMatrix> hom_basis(const Representation& v, const Representation& w) {
  if (!(v.group() == w.group())) throw MathError("hom_basis: representations of different groups");
  const std::size_t dv = v.dim(), dw = w.dim();
  const std::size_t unknowns = dv * dw;
  if (unknowns == 0) return {};
  const auto gens = v.group().generators();
  // Unknown X(a, b) sits at column a * dv + b. One equation per entry of
  // W(g) X - X V(g) for each generator g.
  QMatrix system(gens.size() * unknowns, unknowns);
  std::size_t row = 0;
  for (Elem s : gens) {
    const QMatrix& vs = v.image(s);
    const QMatrix& ws = w.image(s);
    for (std::size_t a = 0; a < dw; ++a)
      for (std::size_t b = 0; b < dv; ++b, ++row) {
        for (std::size_t k = 0; k < dw; ++k) system(row, k * dv + b) += ws(a, k);
        for (std::size_t k = 0; k < dv; ++k) system(row, a * dv + k) -= vs(k, b);
      }
  }
  std::vector<QMatrix> basis;
  for (const auto& x : kernel_basis(system)) {
    QMatrix m(dw, dv);
    for (std::size_t a = 0; a < dw; ++a)
      for (std::size_t b = 0; b < dv; ++b) m(a, b) = x[a * dv + b];
    for (Elem e = 0; e < v.group().order(); ++e)
      if (!(w.image(e) * m == m * v.image(e)))
        throw MathError("hom_basis: intertwiner check failed");
    basis.push_back(std::move(m));
  }
  return basis;
}

PairedRepresentation restrict_to_subspace(const PairedRepresentation& v,
                                          const QMatrix& basis) {
  const Group& g = v.rep.group();
  const std::size_t k = basis.cols();
  if (k == 0) {
    std::vector<QMatrix> gens(g.generators().size(), QMatrix(0, 0));
    auto rep = Representation::from_generator_images(g, 0, gens);
    return {rep, Pairing::make(rep, QMatrix(0, 0))};
  }
  const QMatrix& q = v.pairing.gram();
  const QMatrix ctq = basis.transpose() * q;
  const QMatrix restricted = ctq * basis;
  if (determinant(restricted) == 0)
    throw MathError("pairing is degenerate on the complement");
  // Left inverse of `basis`: orthogonal projection coordinates.
  const QMatrix left = inverse(restricted) * ctq;
  std::vector<QMatrix> gens;
  for (Elem s : g.generators()) {
    const QMatrix moved = v.rep.image(s) * basis;
    QMatrix coords = left * moved;
    if (!(basis * coords == moved)) throw MathError("subspace is not G-invariant");
    gens.push_back(std::move(coords));
  }
  auto rep = Representation::from_generator_images(g, k, gens);
  auto pairing = Pairing::make(rep, restricted);
  return {std::move(rep), std::move(pairing)};
}

PairedRepresentation split_off(const PairedRepresentation& v, const Representation& w) {
  const std::vector<QMatrix> maps = hom_basis(w, v.rep);
  QMatrix spanned(v.rep.dim(), 0);
  for (const auto& x : maps) spanned = hstack(spanned, x);
  QMatrix complement;
  if (spanned.cols() == 0) {
    complement = QMatrix::identity(v.rep.dim());
  } else {
    const QMatrix image = column_space_basis(spanned);
    const auto kernel = kernel_basis(image.transpose() * v.pairing.gram());
    complement = QMatrix::from_columns(v.rep.dim(), kernel);
  }
  return restrict_to_subspace(v, complement);
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.group() == b.group())) throw MathError("direct_sum: different groups");
  std::vector<QMatrix> images;
  images.reserve(a.group().order());
  for (Elem e = 0; e < a.group().order(); ++e)
    images.push_back(block_diagonal(a.image(e), b.image(e)));
  return Representation::from_images(a.group(), a.dim() + b.dim(), std::move(images));
}

PairedRepresentation direct_sum(const PairedRepresentation& a,
                                const PairedRepresentation& b) {
  Representation rep = direct_sum(a.rep, b.rep);
  Pairing pairing = Pairing::make(rep, block_diagonal(a.pairing.gram(), b.pairing.gram()));
  return {std::move(rep), std::move(pairing)};
}

ClassFunction character(const Representation& v) {
  ClassFunction chi;
  for (const auto& cls : v.group().conjugacy_classes())
    chi.push_back(v.dim() == 0 ? Rational(0) : v.image(cls.front()).trace());
  return chi;
}

ClassFunction to_class_function(std::span<const long> values) {
  ClassFunction f;
  for (long x : values) f.emplace_back(x);
  return f;
}

Rational class_inner_product(const Group& g, const ClassFunction& a,
                             const ClassFunction& b) {
  const auto& classes = g.conjugacy_classes();
  if (a.size() != classes.size() || b.size() != classes.size())
    throw MathError("class function length does not match the class count");
  Rational sum = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const std::size_t inv_class = g.class_of(g.inv(classes[c].front()));
    sum += Rational(static_cast<long>(classes[c].size())) * a[c] * b[inv_class];
  }
  return sum / Rational(static_cast<long>(g.order()));
}

std::optional<std::size_t> self_duality_witness(const Group& g, const ClassFunction& chi) {
  const auto& classes = g.conjugacy_classes();
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (chi[c] != chi[g.class_of(g.inv(classes[c].front()))]) return c;
  return std::nullopt;
}

}  // namespace brauer
