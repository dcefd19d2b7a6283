#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace brauer {

using Integer = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

/// Element of Q*/Q*^2: a sign and a squarefree positive radical.
class SquareClass {
 public:
  SquareClass() = default;  // the trivial class (+1, 1)

  /// Builds a class from a sign and an arbitrary positive integer, reducing the
  /// integer to its squarefree part.
  static SquareClass from_parts(int sign, const Integer& positive,
                                std::uint64_t bound = kDefaultFactorBound);

  int sign() const { return sign_; }
  const Integer& radical() const { return radical_; }
  bool is_trivial() const { return sign_ == 1 && radical_ == 1; }

  SquareClass operator*(const SquareClass& other) const;
  bool operator==(const SquareClass& other) const {
    return sign_ == other.sign_ && radical_ == other.radical_;
  }

  /// "3", "-2", "1".
  std::string str() const;

 private:
  int sign_ = 1;
  Integer radical_ = 1;
};

std::ostream& operator<<(std::ostream& os, const SquareClass& c);

/// Squarefree part of n > 0 by trial division up to `bound`.
/// Throws FactorBoundExceeded when the leftover cofactor cannot be certified.
Integer squarefree_part(const Integer& n, std::uint64_t bound = kDefaultFactorBound);

SquareClass square_class(const Rational& q, std::uint64_t bound = kDefaultFactorBound);

/// p-adic valuation of a nonzero rational.
long ord_p(const Rational& q, const Integer& p);
long ord_p(const Integer& n, const Integer& p);

bool is_prime(const Integer& n);

std::string to_string(const Rational& q);

}  // namespace brauer
