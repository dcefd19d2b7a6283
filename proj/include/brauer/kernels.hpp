#pragma once

// Group-sum kernels. Each exists twice: `serial` is the reference
// implementation kept for testing, `parallel` splits the sum over group
// elements across OpenMP threads. Partial sums are combined in thread order
// and the arithmetic is exact, so both return identical matrices.

#include "brauer/group.hpp"
#include "brauer/qmatrix.hpp"

#include <span>
#include <vector>

namespace brauer::kernels {

namespace serial {

/// sum over i in `which` of images[i]^T * seed * images[i].
QMatrix congruence_sum(std::span<const QMatrix> images, std::span<const Elem> which,
                       const QMatrix& seed);

/// sum over i in `which` of images[i].
QMatrix image_sum(std::span<const QMatrix> images, std::span<const Elem> which);

/// images[a] * images[b] == images[a*b] for every pair drawn from `lhs` x `rhs`.
bool homomorphism_holds(const Group& g, std::span<const QMatrix> images,
                        std::span<const Elem> lhs, std::span<const Elem> rhs);

}  // namespace serial

namespace parallel {

QMatrix congruence_sum(std::span<const QMatrix> images, std::span<const Elem> which,
                       const QMatrix& seed);
QMatrix image_sum(std::span<const QMatrix> images, std::span<const Elem> which);
bool homomorphism_holds(const Group& g, std::span<const QMatrix> images,
                        std::span<const Elem> lhs, std::span<const Elem> rhs);

}  // namespace parallel

int max_threads();

}  // namespace brauer::kernels
