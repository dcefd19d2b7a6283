#pragma once

#include "brauer/local_arith.hpp"
#include "brauer/named_groups.hpp"
#include "brauer/regconst.hpp"
#include "brauer/relations.hpp"
#include "brauer/representation.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace brauer {

// Config file grammar (line oriented; '#' starts a comment):
//
//   [group]
//   spec = gl2:3                     named family, or instead:
//   degree = 4
//   generators = (0 1 2 3); (0 2)    cycle notation, ';' separated
//
//   [subgroup "H"]                   extra subgroups, one of:
//   generators = (0 2)(1 3)
//   members = 0 3 5                  element indices
//
//   [relation]                       explicit relation, one term per line
//   U1 = 1
//   U2 = -1
//
//   [search]                         subgroups used when finding relations
//   subgroups = 1, Cpm1, Cp, G
//
//   [rep "sigma"]                    representation recipes, in order:
//   recipe = split_off perm:B one    trivial | perm H | sum A B ... |
//                                    split_off V W1 [W2 ...]
//                                    (operands: a rep name, trivial, perm:H)
//
//   [prime "l=11"]
//   decomposition = D
//   inertia = I
//   model = split_multiplicative 1   good | split_multiplicative c |
//                                    custom (e,f)=c (e,f)=c ...
//
//   [job]
//   p = 3

struct SubgroupSpec {
  std::string name;
  std::vector<std::string> generators;  // cycle notation
  std::vector<Elem> members;            // used when generators is empty
  bool operator==(const SubgroupSpec&) const = default;
};

struct RepSpec {
  std::string name;
  std::vector<std::string> recipe;  // tokens
  bool operator==(const RepSpec&) const = default;
};

struct PrimeSpec {
  std::string label;
  std::string decomposition;
  std::string inertia;
  ReductionModel model;
  bool operator==(const PrimeSpec&) const = default;
};

struct JobConfig {
  std::optional<GroupSpec> named;
  std::size_t degree = 0;               // custom groups only
  std::vector<std::string> generators;  // custom groups only
  std::vector<SubgroupSpec> subgroups;
  std::vector<std::pair<std::string, long>> relation;
  std::vector<std::string> search;
  std::vector<RepSpec> reps;
  std::vector<PrimeSpec> primes;
  std::optional<long> p;

  /// Parses and validates. Throws ConfigError with "source:line:" context.
  static JobConfig parse(std::string_view text, const std::string& source = "config");
  static JobConfig load(const std::string& path);
  /// The built-in job for a named group.
  static JobConfig defaults_for(const GroupSpec& spec);

  /// Checks that every referenced subgroup and representation name resolves.
  void validate() const;
  std::string serialize() const;
  bool operator==(const JobConfig&) const = default;
};

ReductionModel parse_model(std::string_view text);

/// A config with its group built and names resolved.
class Job {
 public:
  explicit Job(JobConfig config);

  const JobConfig& config() const { return config_; }
  const Group& group() const { return group_; }
  std::string group_label() const;
  const Subgroup& subgroup(const std::string& name) const;

  /// Explicit [search] list, else one subgroup per conjugacy class (named
  /// after a distinguished subgroup when conjugate to one).
  std::vector<Subgroup> search_subgroups() const;
  std::optional<BrauerRelation> explicit_relation() const;
  /// The explicit relation if given, else every relation found.
  std::vector<BrauerRelation> relations() const;
  std::vector<LabeledRepresentation> representations() const;
  std::vector<LocalPrimeData> primes() const;
  /// Throws ConfigError when no prime was configured.
  Integer p() const;

 private:
  PairedRepresentation operand(const std::string& token,
                               const std::map<std::string, PairedRepresentation>& built) const;

  JobConfig config_;
  Group group_;
  std::optional<NamedGroup> named_;
  std::vector<Subgroup> subgroups_;
};

}  // namespace brauer
