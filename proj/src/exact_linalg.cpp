#include "brauer/exact_linalg.hpp"

#include "brauer/error.hpp"

#include <ostream>

namespace brauer {

Integer squarefree_part(const Integer& n, std::uint64_t bound) {
  if (n <= 0) throw MathError("squarefree_part: argument must be positive");
  Integer m = n;
  Integer radical = 1;
  std::uint64_t d = 2;
  for (; d <= bound; d = (d == 2 ? 3 : d + 2)) {
    if (Integer(d) * d > m) break;
    int exponent = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++exponent;
    }
    if (exponent % 2 == 1) radical *= d;
  }
  if (m == 1) return radical;
  if (Integer(d) * d > m) return radical * m;  // leftover is prime
  if (mpz_perfect_square_p(m.get_mpz_t())) return radical;
  if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 2) return radical * m;
  throw FactorBoundExceeded("squarefree part of " + n.get_str() +
                            " needs trial division beyond bound " +
                            std::to_string(bound));
}

SquareClass SquareClass::from_parts(int sign, const Integer& positive,
                                    std::uint64_t bound) {
  SquareClass c;
  c.sign_ = sign < 0 ? -1 : 1;
  c.radical_ = squarefree_part(positive, bound);
  return c;
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  SquareClass c;
  c.sign_ = sign_ * other.sign_;
  Integer g;
  mpz_gcd(g.get_mpz_t(), radical_.get_mpz_t(), other.radical_.get_mpz_t());
  // Both radicals are squarefree, so dividing out the common part twice
  // leaves a squarefree product.
  c.radical_ = (radical_ / g) * (other.radical_ / g);
  return c;
}

std::string SquareClass::str() const {
  return (sign_ < 0 ? "-" : "") + radical_.get_str();
}

std::ostream& operator<<(std::ostream& os, const SquareClass& c) {
  return os << c.str();
}

SquareClass square_class(const Rational& q, std::uint64_t bound) {
  if (q == 0) throw MathError("square_class: zero has no square class");
  Integer product = abs(q.get_num()) * q.get_den();
  return SquareClass::from_parts(sgn(q), product, bound);
}

long ord_p(const Integer& n, const Integer& p) {
  if (n == 0) throw MathError("ord_p: valuation of zero is undefined");
  if (p < 2) throw MathError("ord_p: p must be prime");
  Integer rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long ord_p(const Rational& q, const Integer& p) {
  if (q == 0) throw MathError("ord_p: valuation of zero is undefined");
  return ord_p(q.get_num(), p) - ord_p(q.get_den(), p);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace brauer
