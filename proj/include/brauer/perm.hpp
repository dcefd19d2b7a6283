#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace brauer {

using Point = std::uint32_t;

/// Bijection of {0, ..., degree-1}. Composition applies the right factor
/// first: (a * b)(x) = a(b(x)), matching products of matrices acting on
/// column vectors.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);  // validates bijectivity

  static Perm identity(std::size_t degree);
  /// Parses cycle notation such as "(0 1 2)(3 4)" or "()" for the identity.
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }
  bool is_identity() const;

  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);
  auto operator<=>(const Perm&) const = default;

  std::string cycles() const;

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace brauer
