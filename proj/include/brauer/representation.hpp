#pragma once

#include "brauer/group.hpp"
#include "brauer/qmatrix.hpp"

#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace brauer {

/// One value per conjugacy class, in the group's class order.
using ClassFunction = std::vector<Rational>;

/// Exact matrix representation over Q, with an image stored for every group
/// element. Copies share the image table.
class Representation {
 public:
  /// Validates the homomorphism property: exhaustively when |G| <= 48,
  /// otherwise on generators times all elements plus 100 random products.
  static Representation from_images(const Group& g, std::size_t dim,
                                    std::vector<QMatrix> images);
  /// Extends generator images along the group's breadth-first element order,
  /// then validates as above.
  static Representation from_generator_images(const Group& g, std::size_t dim,
                                              std::span<const QMatrix> gen_images);
  static Representation trivial(const Group& g);

  const Group& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const QMatrix& image(Elem e) const { return (*images_)[e]; }
  std::span<const QMatrix> images() const { return *images_; }

 private:
  Representation(Group g, std::size_t dim, std::vector<QMatrix> images);
  Group group_;
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<QMatrix>> images_;
};

/// Symmetric, nondegenerate, G-invariant bilinear form on a representation.
class Pairing {
 public:
  /// Checks symmetry, nondegeneracy and invariance under every element.
  static Pairing make(const Representation& v, QMatrix gram);
  const QMatrix& gram() const { return gram_; }

 private:
  explicit Pairing(QMatrix gram) : gram_(std::move(gram)) {}
  QMatrix gram_;
};

struct PairedRepresentation {
  Representation rep;
  Pairing pairing;
};

/// Permutation module Q[G/H] on the left cosets of H (coset 0 = H), with the
/// identity matrix as its standard pairing.
PairedRepresentation perm_rep(const Subgroup& h);

/// Sum over g of images(g)^T * seed * images(g). The seed must be symmetric
/// and positive definite (checked by leading principal minors).
Pairing invariant_pairing(const Representation& v, const QMatrix& seed);
Pairing invariant_pairing(const Representation& v);  // identity seed

/// Basis (as columns) of the H-fixed vectors: the canonical column-space basis
/// of the projector (1/|H|) sum_{h in H} images(h). Zero columns if trivial.
QMatrix fixed_subspace(const Representation& v, const Subgroup& h);

/// Basis of Hom_G(V, W): matrices X (dim W x dim V) with W(g) X = X V(g).
std::vector<QMatrix> hom_basis(const Representation& v, const Representation& w);

/// Orthogonal complement, with respect to V's pairing, of the sum of images of
/// all intertwiners W -> V, as a representation with the restricted pairing.
PairedRepresentation split_off(const PairedRepresentation& v, const Representation& w);

/// Representation on the span of `basis` (columns, assumed invariant), with
/// the pairing restricted to it.
PairedRepresentation restrict_to_subspace(const PairedRepresentation& v,
                                          const QMatrix& basis);

PairedRepresentation direct_sum(const PairedRepresentation& a,
                                const PairedRepresentation& b);
Representation direct_sum(const Representation& a, const Representation& b);

ClassFunction character(const Representation& v);
ClassFunction to_class_function(std::span<const long> values);

/// (1/|G|) sum over classes c of |c| a(c) b(c^-1).
Rational class_inner_product(const Group& g, const ClassFunction& a,
                             const ClassFunction& b);

/// A class c with chi(c) != chi(c^-1), if any.
std::optional<std::size_t> self_duality_witness(const Group& g, const ClassFunction& chi);

}  // namespace brauer
