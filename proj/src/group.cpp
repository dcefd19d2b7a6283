#include "brauer/group.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace brauer {

namespace {
// Above this order products are computed by composing permutations instead of
// reading a Cayley table.
constexpr std::size_t kCayleyTableMaxOrder = 2048;
}  // namespace

struct GroupData {
  std::size_t degree = 0;
  std::vector<Perm> elements;
  std::unordered_map<Perm, Elem, PermHash> index;
  std::vector<Elem> generators;
  std::vector<Elem> inverse;
  std::vector<Elem> table;  // empty above kCayleyTableMaxOrder
  std::vector<Elem> bfs_parent;
  std::vector<std::size_t> bfs_generator;
  std::vector<std::vector<Elem>> classes;
  std::vector<std::size_t> class_of;
};

Group Group::generate(std::size_t degree, std::span<const Perm> gens,
                      std::size_t order_cap) {
  auto d = std::make_shared<GroupData>();
  d->degree = degree;
  for (const auto& s : gens)
    if (s.degree() != degree)
      throw MathError("generator " + s.cycles() + " has degree " +
                      std::to_string(s.degree()) + ", expected " + std::to_string(degree));

  d->elements.push_back(Perm::identity(degree));
  d->index.emplace(d->elements[0], 0);
  d->bfs_parent.push_back(0);
  d->bfs_generator.push_back(0);
  for (std::size_t head = 0; head < d->elements.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm y = gens[k] * d->elements[head];
      if (d->index.contains(y)) continue;
      if (d->elements.size() >= order_cap)
        throw CapExceeded("group order exceeds the configured cap of " +
                          std::to_string(order_cap));
      d->index.emplace(y, static_cast<Elem>(d->elements.size()));
      d->elements.push_back(std::move(y));
      d->bfs_parent.push_back(static_cast<Elem>(head));
      d->bfs_generator.push_back(k);
    }
  }
  const std::size_t n = d->elements.size();
  for (const auto& s : gens) d->generators.push_back(d->index.at(s));

  d->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) d->inverse[i] = d->index.at(d->elements[i].inverse());

  if (n <= kCayleyTableMaxOrder) {
    d->table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d->table[i * n + j] = d->index.at(d->elements[i] * d->elements[j]);
  }

  Group g;
  g.data_ = d;

  // Conjugacy classes: orbits under conjugation by the generators.
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  d->class_of.assign(n, kUnassigned);
  for (Elem e = 0; e < n; ++e) {
    if (d->class_of[e] != kUnassigned) continue;
    const std::size_t cls = d->classes.size();
    std::vector<Elem> orbit{e};
    d->class_of[e] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (Elem s : d->generators) {
        Elem y = g.conj(s, orbit[head]);
        if (d->class_of[y] == kUnassigned) {
          d->class_of[y] = cls;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    d->classes.push_back(std::move(orbit));
  }
  return g;
}

std::size_t Group::order() const { return data_->elements.size(); }
std::size_t Group::degree() const { return data_->degree; }
const Perm& Group::element(Elem e) const { return data_->elements.at(e); }

Elem Group::index_of(const Perm& p) const {
  auto it = data_->index.find(p);
  if (it == data_->index.end()) throw MathError("permutation " + p.cycles() + " is not in the group");
  return it->second;
}

bool Group::contains(const Perm& p) const { return data_->index.contains(p); }

Elem Group::mul(Elem a, Elem b) const {
  const auto& d = *data_;
  if (!d.table.empty()) return d.table[a * d.elements.size() + b];
  return d.index.at(d.elements[a] * d.elements[b]);
}

Elem Group::inv(Elem a) const { return data_->inverse[a]; }

std::span<const Elem> Group::generators() const { return data_->generators; }

std::pair<Elem, std::size_t> Group::bfs_step(Elem e) const {
  return {data_->bfs_parent[e], data_->bfs_generator[e]};
}

const std::vector<std::vector<Elem>>& Group::conjugacy_classes() const {
  return data_->classes;
}

std::size_t Group::class_of(Elem e) const { return data_->class_of[e]; }

// ---------------------------------------------------------------- Subgroup

Subgroup::Subgroup(Group parent, std::vector<Elem> sorted_members, std::string name)
    : parent_(std::move(parent)),
      members_(std::move(sorted_members)),
      mask_(parent_.order(), false),
      name_(std::move(name)) {
  for (Elem e : members_) mask_[e] = true;
}

Subgroup Subgroup::from_members(const Group& parent, std::vector<Elem> members,
                                std::string name) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Elem e : members)
    if (e >= parent.order())
      throw MathError("element index " + std::to_string(e) + " outside group of order " +
                      std::to_string(parent.order()));
  Subgroup s(parent, std::move(members), std::move(name));
  if (s.members_.empty() || !s.contains(parent.identity()))
    throw MathError("subgroup '" + s.name_ + "' does not contain the identity");
  for (Elem a : s.members_) {
    if (!s.contains(parent.inv(a)))
      throw MathError("subgroup '" + s.name_ + "' is not closed under inverses");
    for (Elem b : s.members_)
      if (!s.contains(parent.mul(a, b)))
        throw MathError("subgroup '" + s.name_ + "' is not closed under composition");
  }
  return s;
}

Subgroup Subgroup::generated_by(const Group& parent, std::span<const Elem> gens,
                                std::string name) {
  std::vector<bool> seen(parent.order(), false);
  std::vector<Elem> members{parent.identity()};
  seen[parent.identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (Elem s : gens) {
      Elem y = parent.mul(s, members[head]);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return Subgroup(parent, std::move(members), std::move(name));
}

Subgroup Subgroup::where(const Group& parent, const std::function<bool(Elem)>& pred,
                         std::string name) {
  std::vector<Elem> members;
  for (Elem e = 0; e < parent.order(); ++e)
    if (pred(e)) members.push_back(e);
  return from_members(parent, std::move(members), std::move(name));
}

Subgroup Subgroup::whole(const Group& parent, std::string name) {
  std::vector<Elem> all(parent.order());
  for (Elem e = 0; e < all.size(); ++e) all[e] = e;
  return Subgroup(parent, std::move(all), std::move(name));
}

Subgroup Subgroup::trivial(const Group& parent, std::string name) {
  return Subgroup(parent, {parent.identity()}, std::move(name));
}

Subgroup Subgroup::renamed(std::string name) const {
  Subgroup s = *this;
  s.name_ = std::move(name);
  return s;
}

Subgroup Subgroup::conjugate(Elem x) const {
  std::vector<Elem> m;
  m.reserve(members_.size());
  for (Elem h : members_) m.push_back(parent_.conj(x, h));
  std::sort(m.begin(), m.end());
  return Subgroup(parent_, std::move(m), name_);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (!(parent_ == other.parent_)) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Elem e) { return other.contains(e); });
}

bool Subgroup::is_normal_in(const Subgroup& other) const {
  if (!is_subgroup_of(other)) return false;
  for (Elem x : other.members_)
    for (Elem h : members_)
      if (!contains(parent_.conj(x, h))) return false;
  return true;
}

// ------------------------------------------------------------------ cosets

CosetSpace left_cosets(const Subgroup& h) {
  const Group& g = h.parent();
  constexpr std::uint32_t kUnassigned = static_cast<std::uint32_t>(-1);
  CosetSpace cs;
  cs.coset_of.assign(g.order(), kUnassigned);
  for (Elem e = 0; e < g.order(); ++e) {
    if (cs.coset_of[e] != kUnassigned) continue;
    const auto c = static_cast<std::uint32_t>(cs.representatives.size());
    cs.representatives.push_back(e);
    for (Elem m : h.members()) cs.coset_of[g.mul(e, m)] = c;
  }
  return cs;
}

DoubleCosetDecomposition double_cosets(const Group& g, const Subgroup& n,
                                       const Subgroup& h) {
  if (!(n.parent() == g) || !(h.parent() == g))
    throw MathError("double_cosets: subgroup belongs to a different group");
  DoubleCosetDecomposition out;
  std::vector<bool> seen(g.order(), false);
  for (Elem e = 0; e < g.order(); ++e) {
    if (seen[e]) continue;
    std::size_t size = 0;
    for (Elem a : n.members()) {
      const Elem ae = g.mul(a, e);
      for (Elem b : h.members()) {
        const Elem x = g.mul(ae, b);
        if (!seen[x]) {
          seen[x] = true;
          ++size;
        }
      }
    }
    out.cosets.push_back({e, size});
  }
  return out;
}

std::vector<long> fixed_points_character(const Group& g, const Subgroup& h) {
  if (!(h.parent() == g)) throw MathError("fixed_points_character: foreign subgroup");
  const CosetSpace cs = left_cosets(h);
  std::vector<long> chi;
  chi.reserve(g.class_count());
  for (const auto& cls : g.conjugacy_classes()) {
    long fixed = 0;
    for (std::uint32_t c = 0; c < cs.size(); ++c)
      if (act_on_coset(g, cs, cls.front(), c) == c) ++fixed;
    chi.push_back(fixed);
  }
  return chi;
}

std::vector<Elem> smallest_conjugate(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<Elem> best(h.members().begin(), h.members().end());
  std::vector<Elem> c(h.order());
  for (Elem x = 0; x < g.order(); ++x) {
    for (std::size_t k = 0; k < h.order(); ++k) c[k] = g.conj(x, h.members()[k]);
    std::sort(c.begin(), c.end());
    if (c < best) best = c;
  }
  return best;
}

// -------------------------------------------------- subgroup enumeration

namespace {

struct MembersHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<Elem> closure(const Group& g, std::span<const Elem> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> members{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head)
    for (Elem s : gens) {
      const Elem y = g.mul(s, members[head]);
      if (!seen[y]) {
        seen[y] = true;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<Subgroup> subgroups_up_to_conjugacy(const Group& g, std::size_t cap) {
  if (g.order() > cap)
    throw CapExceeded("subgroup enumeration is limited to groups of order <= " +
                      std::to_string(cap) + " (group has order " +
                      std::to_string(g.order()) + "); list subgroups explicitly");

  struct ClassRep {
    std::vector<Elem> members;    // the subgroup as first found
    std::vector<Elem> gens;       // generates `members`
    std::vector<Elem> canonical;  // smallest conjugate member list
  };
  // Every conjugate of every class found so far.
  std::unordered_set<std::vector<Elem>, MembersHash> known;
  std::vector<ClassRep> reps;

  auto offer = [&](std::vector<Elem> gens) {
    std::vector<Elem> members = closure(g, gens);
    if (known.contains(members)) return;
    std::vector<Elem> best = members;
    for (Elem x = 0; x < g.order(); ++x) {
      std::vector<Elem> c;
      c.reserve(members.size());
      for (Elem h : members) c.push_back(g.conj(x, h));
      std::sort(c.begin(), c.end());
      if (c < best) best = c;
      known.insert(std::move(c));
    }
    reps.push_back({std::move(members), std::move(gens), std::move(best)});
  };

  // Cyclic subgroups first, then adjoin one element at a time to each class
  // representative. Any subgroup K contains a conjugate of a smaller class
  // representative, so extending representatives alone reaches every class.
  for (Elem e = 0; e < g.order(); ++e) offer({e});
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::vector<Elem> members = reps[i].members;
    const std::vector<Elem> gens = reps[i].gens;
    std::vector<bool> in(g.order(), false);
    for (Elem m : members) in[m] = true;
    for (Elem x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<Elem> ext = gens;
      ext.push_back(x);
      offer(std::move(ext));
    }
  }

  std::sort(reps.begin(), reps.end(), [](const ClassRep& a, const ClassRep& b) {
    if (a.canonical.size() != b.canonical.size())
      return a.canonical.size() < b.canonical.size();
    return a.canonical < b.canonical;
  });
  std::vector<Subgroup> out;
  out.reserve(reps.size());
  for (auto& r : reps) out.push_back(Subgroup::from_members(g, std::move(r.canonical)));
  return out;
}

}  // namespace brauer
