#include "brauer/kernels.hpp"

#include "brauer/error.hpp"

#ifdef BRAUER_HAVE_OPENMP
#include <omp.h>
#endif

namespace brauer::kernels {

namespace {

QMatrix zero_like(std::span<const QMatrix> images, const QMatrix* seed) {
  if (seed) return QMatrix(seed->cols(), seed->cols());
  if (images.empty()) return {};
  return QMatrix(images.front().rows(), images.front().cols());
}

void add_congruence(QMatrix& acc, const QMatrix& m, const QMatrix& seed) {
  acc += m.transpose() * (seed * m);
}

}  // namespace

namespace serial {

QMatrix congruence_sum(std::span<const QMatrix> images, std::span<const Elem> which,
                       const QMatrix& seed) {
  QMatrix acc = zero_like(images, &seed);
  for (Elem e : which) add_congruence(acc, images[e], seed);
  return acc;
}

QMatrix image_sum(std::span<const QMatrix> images, std::span<const Elem> which) {
  QMatrix acc = zero_like(images, nullptr);
  for (Elem e : which) acc += images[e];
  return acc;
}

bool homomorphism_holds(const Group& g, std::span<const QMatrix> images,
                        std::span<const Elem> lhs, std::span<const Elem> rhs) {
  for (Elem a : lhs)
    for (Elem b : rhs)
      if (!(images[a] * images[b] == images[g.mul(a, b)])) return false;
  return true;
}

}  // namespace serial

namespace parallel {

#ifdef BRAUER_HAVE_OPENMP

QMatrix congruence_sum(std::span<const QMatrix> images, std::span<const Elem> which,
                       const QMatrix& seed) {
  const int nthreads = omp_get_max_threads();
  std::vector<QMatrix> partial(nthreads, zero_like(images, &seed));
  const auto n = static_cast<long>(which.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i)
    add_congruence(partial[omp_get_thread_num()], images[which[i]], seed);
  QMatrix acc = zero_like(images, &seed);
  for (const auto& p : partial) acc += p;
  return acc;
}

QMatrix image_sum(std::span<const QMatrix> images, std::span<const Elem> which) {
  const int nthreads = omp_get_max_threads();
  std::vector<QMatrix> partial(nthreads, zero_like(images, nullptr));
  const auto n = static_cast<long>(which.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) partial[omp_get_thread_num()] += images[which[i]];
  QMatrix acc = zero_like(images, nullptr);
  for (const auto& p : partial) acc += p;
  return acc;
}

bool homomorphism_holds(const Group& g, std::span<const QMatrix> images,
                        std::span<const Elem> lhs, std::span<const Elem> rhs) {
  const auto n = static_cast<long>(lhs.size());
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (long i = 0; i < n; ++i) {
    const Elem a = lhs[i];
    for (Elem b : rhs)
      if (!(images[a] * images[b] == images[g.mul(a, b)])) {
        ok = false;
        break;
      }
  }
  return ok;
}

#else

QMatrix congruence_sum(std::span<const QMatrix> images, std::span<const Elem> which,
                       const QMatrix& seed) {
  return serial::congruence_sum(images, which, seed);
}
QMatrix image_sum(std::span<const QMatrix> images, std::span<const Elem> which) {
  return serial::image_sum(images, which);
}
bool homomorphism_holds(const Group& g, std::span<const QMatrix> images,
                        std::span<const Elem> lhs, std::span<const Elem> rhs) {
  return serial::homomorphism_holds(g, images, lhs, rhs);
}

#endif

}  // namespace parallel

int max_threads() {
#ifdef BRAUER_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace brauer::kernels
