#include "brauer/perm.hpp"

#include "brauer/error.hpp"

#include <charconv>
#include <sstream>

namespace brauer {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw MathError("permutation images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ConfigError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      Point x = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), x);
      if (ec != std::errc()) fail("expected a point index");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (x >= degree) fail("point " + std::to_string(x) + " outside degree " + std::to_string(degree));
      if (used[x]) fail("point " + std::to_string(x) + " repeated");
      used[x] = true;
      cycle.push_back(x);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Point>(i);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw MathError("composing permutations of different degree");
  Perm p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    os << '(';
    Point x = static_cast<Point>(start);
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      os << (first ? "" : " ") << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace brauer
