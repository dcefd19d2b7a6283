#include "brauer/named_groups.hpp"

#include "brauer/error.hpp"
#include "brauer/exact_linalg.hpp"

#include <charconv>

namespace brauer {

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError("bad group parameter in '" + std::string(whole) + "'");
  return v;
}

void require_prime(unsigned p, std::string_view what) {
  if (!is_prime(Integer(p)))
    throw ConfigError(std::string(what) + " needs a prime, got " + std::to_string(p));
}

unsigned primitive_root(unsigned p) {
  for (unsigned g = 1; g < p; ++g) {
    unsigned x = 1, k = 0;
    do {
      x = x * g % p;
      ++k;
    } while (x != 1);
    if (k == p - 1) return g;
  }
  return 1;  // p == 2
}

bool is_nonzero_square(unsigned p, unsigned x) {
  for (unsigned y = 1; y < p; ++y)
    if (y * y % p == x) return true;
  return false;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ConfigError("group spec '" + std::string(text) + "' should look like family:n");
  const std::string_view family = text.substr(0, colon);
  const unsigned n = parse_unsigned(text.substr(colon + 1), text);
  GroupSpec spec{};
  spec.parameter = n;
  if (family == "cyclic") {
    if (n < 1) throw ConfigError("cyclic:n needs n >= 1");
    spec.family = GroupFamily::Cyclic;
  } else if (family == "dihedral") {
    if (n < 6 || n % 2 != 0)
      throw ConfigError("dihedral:2n needs an even order >= 6, got " + std::to_string(n));
    spec.family = GroupFamily::Dihedral;
  } else if (family == "gl2") {
    require_prime(n, "gl2:p");
    if (n > 7) throw ConfigError("gl2:p is supported for p <= 7");
    spec.family = GroupFamily::GL2;
  } else if (family == "borel") {
    require_prime(n, "borel:p");
    if (n < 3) throw ConfigError("borel:p needs an odd prime");
    spec.family = GroupFamily::BorelQuotient;
  } else {
    throw ConfigError("unsupported group family '" + std::string(family) + "'");
  }
  return spec;
}

std::string GroupSpec::str() const {
  switch (family) {
    case GroupFamily::Cyclic: return "cyclic:" + std::to_string(parameter);
    case GroupFamily::Dihedral: return "dihedral:" + std::to_string(parameter);
    case GroupFamily::GL2: return "gl2:" + std::to_string(parameter);
    case GroupFamily::BorelQuotient: return "borel:" + std::to_string(parameter);
  }
  return {};
}

Point gl2_point(unsigned p, unsigned x, unsigned y) { return x + p * y - 1; }

Perm gl2_perm(unsigned p, const Mat2& m) {
  std::vector<Point> images(p * p - 1);
  for (unsigned y = 0; y < p; ++y)
    for (unsigned x = 0; x < p; ++x) {
      if (x == 0 && y == 0) continue;
      const unsigned nx = (m.a * x + m.b * y) % p;
      const unsigned ny = (m.c * x + m.d * y) % p;
      images[gl2_point(p, x, y)] = gl2_point(p, nx, ny);
    }
  return Perm(std::move(images));
}

const Subgroup& NamedGroup::subgroup(std::string_view name) const {
  for (const auto& s : subgroups)
    if (s.name() == name) return s;
  throw ConfigError("group " + spec.str() + " has no distinguished subgroup '" +
                    std::string(name) + "'");
}

bool NamedGroup::has_subgroup(std::string_view name) const {
  for (const auto& s : subgroups)
    if (s.name() == name) return true;
  return false;
}

std::optional<Mat2> NamedGroup::matrix(Elem e) const {
  if (spec.family != GroupFamily::GL2) return std::nullopt;
  const unsigned p = spec.parameter;
  const Perm& g = group.element(e);
  // Columns of the matrix are the images of (1,0) and (0,1).
  const Point c1 = g(gl2_point(p, 1, 0));
  const Point c2 = g(gl2_point(p, 0, 1));
  return Mat2{(c1 + 1) % p, (c2 + 1) % p, (c1 + 1) / p, (c2 + 1) / p};
}

NamedGroup named_group(const GroupSpec& spec) {
  const unsigned n = spec.parameter;
  std::vector<Perm> gens;
  switch (spec.family) {
    case GroupFamily::Cyclic: {
      std::vector<Point> r(n);
      for (unsigned i = 0; i < n; ++i) r[i] = (i + 1) % n;
      gens.emplace_back(std::move(r));
      Group g = Group::generate(n, gens);
      return {spec, g, {Subgroup::trivial(g), Subgroup::whole(g)}};
    }
    case GroupFamily::Dihedral: {
      const unsigned m = n / 2;
      std::vector<Point> r(m), s(m);
      for (unsigned i = 0; i < m; ++i) {
        r[i] = (i + 1) % m;
        s[i] = (m - i) % m;
      }
      gens.emplace_back(std::move(r));
      gens.emplace_back(std::move(s));
      Group g = Group::generate(m, gens);
      const Elem rot[] = {g.generators()[0]};
      const Elem refl[] = {g.generators()[1]};
      return {spec, g,
              {Subgroup::trivial(g), Subgroup::generated_by(g, refl, "C2"),
               Subgroup::generated_by(g, rot, "Cn"), Subgroup::whole(g)}};
    }
    case GroupFamily::BorelQuotient: {
      const unsigned p = n;
      const unsigned gen = primitive_root(p);
      std::vector<Point> t(p), mlt(p);
      for (unsigned x = 0; x < p; ++x) {
        t[x] = (x + 1) % p;
        mlt[x] = x * gen % p;
      }
      gens.emplace_back(std::move(t));
      gens.emplace_back(std::move(mlt));
      Group g = Group::generate(p, gens);
      // x -> ax + b is recovered from the images of 0 and 1.
      auto coeffs = [&g, p](Elem e) {
        const Perm& f = g.element(e);
        const unsigned b = f(0);
        const unsigned a = (f(1) + p - b) % p;
        return std::pair{a, b};
      };
      return {spec, g,
              {Subgroup::trivial(g),
               Subgroup::where(g, [&](Elem e) { return coeffs(e).second == 0; }, "Cpm1"),
               Subgroup::where(g, [&](Elem e) { return coeffs(e).first == 1; }, "Cp"),
               Subgroup::where(g, [&](Elem e) { return is_nonzero_square(p, coeffs(e).first); },
                               "K2"),
               Subgroup::whole(g)}};
    }
    case GroupFamily::GL2: {
      const unsigned p = n;
      const unsigned gen = primitive_root(p);
      gens.push_back(gl2_perm(p, {gen, 0, 0, 1}));
      gens.push_back(gl2_perm(p, {1, 0, 0, gen}));
      gens.push_back(gl2_perm(p, {1, 1, 0, 1}));
      gens.push_back(gl2_perm(p, {0, 1, 1, 0}));
      NamedGroup ng{spec, Group::generate(p * p - 1, gens), {}};
      const Group& g = ng.group;
      auto by_matrix = [&](auto pred, const char* name) {
        return Subgroup::where(g, [&](Elem e) { return pred(*ng.matrix(e)); }, name);
      };
      ng.subgroups = {
          Subgroup::trivial(g),
          by_matrix([](Mat2 m) { return m.c == 0 && m.a == 1 && m.d == 1; }, "I"),
          by_matrix([](Mat2 m) { return m.c == 0 && m.d == 1; }, "D"),
          by_matrix([p](Mat2 m) { return m.c == 0 && is_nonzero_square(p, m.a); }, "U1"),
          by_matrix([p](Mat2 m) { return m.c == 0 && is_nonzero_square(p, m.d); }, "U2"),
          by_matrix([](Mat2 m) { return m.c == 0; }, "B"),
          Subgroup::whole(g),
      };
      return ng;
    }
  }
  throw ConfigError("unsupported group spec");
}

}  // namespace brauer
