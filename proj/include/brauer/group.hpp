#pragma once

#include "brauer/perm.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace brauer {

/// Index of an element in its group's deterministic element order.
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 10'000;
inline constexpr std::size_t kDefaultSubgroupEnumerationCap = 200;

struct GroupData;

/// Finite permutation group stored by explicit element enumeration.
///
/// Elements are numbered breadth-first from the identity (index 0), applying
/// generators in the order given: each new element is s * x for a generator s
/// and an already-listed x. Copies share the same immutable data; two Group
/// values are the same group iff they share it.
class Group {
 public:
  /// Closes `gens` under composition. Throws CapExceeded past `order_cap`.
  static Group generate(std::size_t degree, std::span<const Perm> gens,
                        std::size_t order_cap = kDefaultOrderCap);

  std::size_t order() const;
  std::size_t degree() const;
  const Perm& element(Elem e) const;
  /// Throws MathError if `p` is not in the group.
  Elem index_of(const Perm& p) const;
  bool contains(const Perm& p) const;

  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem conj(Elem x, Elem g) const { return mul(mul(x, g), inv(x)); }  // x g x^-1

  /// Generator indices, in the order given to generate().
  std::span<const Elem> generators() const;
  /// For e != identity: e = generator(bfs_step(e).second) * bfs_step(e).first.
  std::pair<Elem, std::size_t> bfs_step(Elem e) const;

  /// Conjugacy classes; class 0 holds the identity. Each class lists its
  /// members ascending, so the first member is the canonical representative.
  const std::vector<std::vector<Elem>>& conjugacy_classes() const;
  std::size_t class_of(Elem e) const;
  std::size_t class_count() const { return conjugacy_classes().size(); }

  bool operator==(const Group& o) const { return data_ == o.data_; }

 private:
  std::shared_ptr<const GroupData> data_;
};

/// Subgroup of a parent group, stored as a sorted list of member indices.
class Subgroup {
 public:
  /// Validates closure; members need not be sorted.
  static Subgroup from_members(const Group& parent, std::vector<Elem> members,
                               std::string name = {});
  static Subgroup generated_by(const Group& parent, std::span<const Elem> gens,
                               std::string name = {});
  static Subgroup where(const Group& parent, const std::function<bool(Elem)>& pred,
                        std::string name = {});
  static Subgroup whole(const Group& parent, std::string name = "G");
  static Subgroup trivial(const Group& parent, std::string name = "1");

  const Group& parent() const { return parent_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_.order() / members_.size(); }
  std::span<const Elem> members() const { return members_; }
  bool contains(Elem e) const { return mask_[e]; }
  const std::string& name() const { return name_; }
  Subgroup renamed(std::string name) const;

  /// x H x^-1.
  Subgroup conjugate(Elem x) const;
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_normal_in(const Subgroup& other) const;

  /// Same parent and same members; names are ignored.
  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }

 private:
  Subgroup(Group parent, std::vector<Elem> sorted_members, std::string name);

  Group parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
  std::string name_;
};

/// Left cosets gH, numbered by first appearance in element order (coset 0 = H).
struct CosetSpace {
  std::vector<Elem> representatives;
  std::vector<std::uint32_t> coset_of;  // per element of the parent
  std::size_t size() const { return representatives.size(); }
};

CosetSpace left_cosets(const Subgroup& h);

/// Index of the coset g * (coset c).
inline std::uint32_t act_on_coset(const Group& g, const CosetSpace& cs, Elem x,
                                  std::uint32_t c) {
  return cs.coset_of[g.mul(x, cs.representatives[c])];
}

struct DoubleCoset {
  Elem representative;  // smallest element index in the double coset
  std::size_t size;
};

/// N\G/H in canonical order (by smallest element index occupied).
struct DoubleCosetDecomposition {
  std::vector<DoubleCoset> cosets;
  std::size_t size() const { return cosets.size(); }
};

/// Throws MathError if N or H belongs to a different group than G.
DoubleCosetDecomposition double_cosets(const Group& g, const Subgroup& n,
                                       const Subgroup& h);

/// Number of cosets xH fixed by each class representative: the character of
/// the permutation module on G/H.
std::vector<long> fixed_points_character(const Group& g, const Subgroup& h);

/// Lexicographically smallest member list among the conjugates of H; equal
/// for two subgroups iff they are conjugate.
std::vector<Elem> smallest_conjugate(const Subgroup& h);

/// One representative per conjugacy class of subgroups, by the cyclic
/// extension method. Sorted by order, then by member list.
std::vector<Subgroup> subgroups_up_to_conjugacy(
    const Group& g, std::size_t cap = kDefaultSubgroupEnumerationCap);

}  // namespace brauer
