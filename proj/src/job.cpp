#include "brauer/job.hpp"

#include "brauer/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace brauer {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto next = s.find_first_of(seps, pos);
    const auto piece = trim(s.substr(pos, next == std::string_view::npos ? s.npos : next - pos));
    if (!piece.empty()) out.emplace_back(piece);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

long parse_long(std::string_view s, const std::string& what) {
  long v = 0;
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ConfigError("expected an integer for " + what + ", got '" + std::string(s) + "'");
  return v;
}

std::vector<std::string> distinguished_names(const std::optional<GroupSpec>& spec) {
  if (!spec) return {"1", "G"};
  switch (spec->family) {
    case GroupFamily::Cyclic: return {"1", "G"};
    case GroupFamily::Dihedral: return {"1", "C2", "Cn", "G"};
    case GroupFamily::BorelQuotient: return {"1", "Cpm1", "Cp", "K2", "G"};
    case GroupFamily::GL2: return {"1", "I", "D", "U1", "U2", "B", "G"};
  }
  return {};
}

enum class Section { None, Group, Subgroup, Relation, Search, Rep, Prime, Job };

}  // namespace

ReductionModel parse_model(std::string_view text) {
  const auto words = split(text, " \t");
  if (words.empty()) throw ConfigError("empty reduction model");
  if (words[0] == "good") {
    if (words.size() != 1) throw ConfigError("'good' takes no arguments");
    return GoodReduction{};
  }
  if (words[0] == "split_multiplicative") {
    if (words.size() != 2) throw ConfigError("split_multiplicative takes one Tamagawa number");
    const long c = parse_long(words[1], "split_multiplicative");
    if (c <= 0) throw ConfigError("Tamagawa number must be positive");
    return SplitMultiplicative{Integer(c)};
  }
  if (words[0] == "custom") {
    CustomTable t;
    for (std::size_t k = 1; k < words.size(); ++k) {
      // (e,f)=c
      const std::string& w = words[k];
      const auto close = w.find(")=");
      if (w.empty() || w.front() != '(' || close == std::string::npos)
        throw ConfigError("custom entry '" + w + "' should look like (e,f)=c");
      const auto ef = split(std::string_view(w).substr(1, close - 1), ",");
      if (ef.size() != 2) throw ConfigError("custom entry '" + w + "' should look like (e,f)=c");
      const long e = parse_long(ef[0], "e"), f = parse_long(ef[1], "f");
      const long c = parse_long(std::string_view(w).substr(close + 2), "Tamagawa number");
      if (e <= 0 || f <= 0 || c <= 0) throw ConfigError("custom entry '" + w + "' must be positive");
      if (!t.table.emplace(std::pair{e, f}, Integer(c)).second)
        throw ConfigError("custom entry for (" + ef[0] + "," + ef[1] + ") repeated");
    }
    return t;
  }
  throw ConfigError("unknown reduction model '" + words[0] + "'");
}

JobConfig JobConfig::parse(std::string_view text, const std::string& source) {
  JobConfig cfg;
  Section section = Section::None;
  std::set<std::string> seen_sections;
  bool have_spec = false, have_degree = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto where = [&] { return source + ":" + std::to_string(lineno) + ": "; };
  try {
    while (std::getline(in, raw)) {
      ++lineno;
      std::string_view line = raw;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;

      if (line.front() == '[') {
        if (line.back() != ']') throw ConfigError("section header must end with ']'");
        std::string_view inner = trim(line.substr(1, line.size() - 2));
        std::string label;
        const auto quote = inner.find('"');
        if (quote != std::string_view::npos) {
          if (inner.back() != '"' || inner.size() < quote + 2)
            throw ConfigError("section label must be quoted");
          label = std::string(inner.substr(quote + 1, inner.size() - quote - 2));
          inner = trim(inner.substr(0, quote));
          if (label.empty()) throw ConfigError("empty section label");
        }
        const std::string name(inner);
        const bool labelled = name == "subgroup" || name == "rep" || name == "prime";
        if (labelled && label.empty()) throw ConfigError("[" + name + "] needs a quoted label");
        if (!labelled && !label.empty()) throw ConfigError("[" + name + "] takes no label");
        if (!labelled && !seen_sections.insert(name).second)
          throw ConfigError("section [" + name + "] appears twice");
        if (name == "group") {
          section = Section::Group;
        } else if (name == "subgroup") {
          section = Section::Subgroup;
          cfg.subgroups.push_back({label, {}, {}});
        } else if (name == "relation") {
          section = Section::Relation;
        } else if (name == "search") {
          section = Section::Search;
        } else if (name == "rep") {
          section = Section::Rep;
          cfg.reps.push_back({label, {}});
        } else if (name == "prime") {
          section = Section::Prime;
          cfg.primes.push_back({label, {}, {}, GoodReduction{}});
        } else if (name == "job") {
          section = Section::Job;
        } else {
          throw ConfigError("unknown section [" + name + "]");
        }
        continue;
      }

      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ConfigError("expected key = value");
      const std::string key(trim(line.substr(0, eq)));
      const std::string_view value = trim(line.substr(eq + 1));
      if (key.empty()) throw ConfigError("empty key");
      auto unknown = [&](const char* sec) {
        throw ConfigError("unknown key '" + key + "' in [" + sec + "]");
      };

      switch (section) {
        case Section::None:
          throw ConfigError("key '" + key + "' outside of any section");
        case Section::Group:
          if (key == "spec") {
            cfg.named = GroupSpec::parse(value);
            have_spec = true;
          } else if (key == "degree") {
            const long d = parse_long(value, "degree");
            if (d < 1) throw ConfigError("degree must be positive");
            cfg.degree = static_cast<std::size_t>(d);
            have_degree = true;
          } else if (key == "generators") {
            cfg.generators = split(value, ";");
          } else {
            unknown("group");
          }
          break;
        case Section::Subgroup: {
          auto& s = cfg.subgroups.back();
          if (key == "generators") {
            s.generators = split(value, ";");
          } else if (key == "members") {
            for (const auto& w : split(value, " ,\t")) {
              const long m = parse_long(w, "member index");
              if (m < 0) throw ConfigError("member index must be nonnegative");
              s.members.push_back(static_cast<Elem>(m));
            }
          } else {
            unknown("subgroup");
          }
          break;
        }
        case Section::Relation: {
          const long c = parse_long(value, "coefficient of " + key);
          if (c == 0) throw ConfigError("relation coefficient of " + key + " is zero");
          cfg.relation.emplace_back(key, c);
          break;
        }
        case Section::Search:
          if (key != "subgroups") unknown("search");
          cfg.search = split(value, " ,\t");
          break;
        case Section::Rep:
          if (key != "recipe") unknown("rep");
          cfg.reps.back().recipe = split(value, " \t");
          if (const auto& t = cfg.reps.back().recipe;
              t.empty() || (t[0] != "trivial" && t[0] != "perm" && t[0] != "sum" &&
                            t[0] != "split_off"))
            throw ConfigError("unknown recipe '" + std::string(value) + "'");
          break;
        case Section::Prime: {
          auto& pr = cfg.primes.back();
          if (key == "decomposition") pr.decomposition = std::string(value);
          else if (key == "inertia") pr.inertia = std::string(value);
          else if (key == "model") pr.model = parse_model(value);
          else unknown("prime");
          break;
        }
        case Section::Job:
          if (key != "p") unknown("job");
          cfg.p = parse_long(value, "p");
          break;
      }
    }
  } catch (const ConfigError& e) {
    throw ConfigError(where() + e.what());
  }
  if (have_spec && (have_degree || !cfg.generators.empty()))
    throw ConfigError(source + ": [group] takes either spec or degree/generators, not both");
  if (!have_spec && !have_degree)
    throw ConfigError(source + ": [group] needs spec or degree");
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return cfg;
}

JobConfig JobConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

JobConfig JobConfig::defaults_for(const GroupSpec& spec) {
  JobConfig cfg;
  cfg.named = spec;
  const long n = spec.parameter;
  cfg.reps.push_back({"one", {"trivial"}});
  switch (spec.family) {
    case GroupFamily::Cyclic:
      break;
    case GroupFamily::Dihedral:
      cfg.reps.push_back({"eps", {"split_off", "perm:Cn", "one"}});
      cfg.reps.push_back({"rho", {"split_off", "perm:C2", "one"}});
      if (is_prime(Integer(n / 2))) cfg.p = n / 2;
      break;
    case GroupFamily::BorelQuotient:
      cfg.search = {"1", "Cpm1", "Cp", "G"};
      cfg.reps.push_back({"eps", {"split_off", "perm:K2", "one"}});
      cfg.reps.push_back({"rho", {"split_off", "perm:Cpm1", "one"}});
      if (n > 3) cfg.reps.push_back({"rest", {"split_off", "perm:Cp", "one", "eps"}});
      cfg.p = n;
      break;
    case GroupFamily::GL2:
      cfg.relation = {{"U1", 1}, {"U2", -1}};
      cfg.reps.push_back({"sigma", {"split_off", "perm:B", "one"}});
      cfg.reps.push_back({"rho", {"split_off", "perm:U1", "one", "sigma"}});
      cfg.p = n;
      break;
  }
  cfg.validate();
  return cfg;
}

void JobConfig::validate() const {
  std::vector<std::string> names = distinguished_names(named);
  auto known = [&](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  if (!named) {
    for (const auto& g : generators) Perm::from_cycles(degree, g);
  }
  for (const auto& s : subgroups) {
    if (known(s.name)) throw ConfigError("subgroup '" + s.name + "' is already defined");
    if (s.generators.empty() && s.members.empty())
      throw ConfigError("subgroup '" + s.name + "' needs generators or members");
    names.push_back(s.name);
  }
  auto require = [&](const std::string& n, const std::string& ctx) {
    if (!known(n)) throw ConfigError(ctx + " refers to unknown subgroup '" + n + "'");
  };
  for (const auto& [n, c] : relation) require(n, "[relation]");
  for (const auto& n : search) require(n, "[search]");

  std::set<std::string> reps_so_far;
  for (const auto& r : reps) {
    const std::string ctx = "[rep \"" + r.name + "\"]";
    if (r.name == "trivial" || r.name.find(':') != std::string::npos)
      throw ConfigError(ctx + ": reserved representation name");
    if (reps_so_far.contains(r.name)) throw ConfigError(ctx + " defined twice");
    if (r.recipe.empty()) throw ConfigError(ctx + " has no recipe");
    auto operand = [&](const std::string& tok) {
      if (tok == "trivial") return;
      if (tok.rfind("perm:", 0) == 0) return require(tok.substr(5), ctx);
      if (!reps_so_far.contains(tok))
        throw ConfigError(ctx + " uses '" + tok + "' before it is defined");
    };
    const std::string& kind = r.recipe[0];
    const std::size_t args = r.recipe.size() - 1;
    if (kind == "trivial") {
      if (args != 0) throw ConfigError(ctx + ": trivial takes no operands");
    } else if (kind == "perm") {
      if (args != 1) throw ConfigError(ctx + ": perm takes one subgroup");
      require(r.recipe[1], ctx);
    } else if (kind == "sum" || kind == "split_off") {
      if (args < 2) throw ConfigError(ctx + ": " + kind + " needs at least two operands");
      for (std::size_t k = 1; k < r.recipe.size(); ++k) operand(r.recipe[k]);
    } else {
      throw ConfigError(ctx + ": unknown recipe '" + kind + "'");
    }
    reps_so_far.insert(r.name);
  }

  std::set<std::string> labels;
  for (const auto& pr : primes) {
    const std::string ctx = "[prime \"" + pr.label + "\"]";
    if (!labels.insert(pr.label).second) throw ConfigError(ctx + " defined twice");
    if (pr.decomposition.empty() || pr.inertia.empty())
      throw ConfigError(ctx + " needs decomposition and inertia");
    require(pr.decomposition, ctx);
    require(pr.inertia, ctx);
  }
  if (p && !is_prime(Integer(*p))) throw ConfigError("p = " + std::to_string(*p) + " is not prime");
}

std::string JobConfig::serialize() const {
  std::ostringstream os;
  os << "[group]\n";
  if (named) {
    os << "spec = " << named->str() << "\n";
  } else {
    os << "degree = " << degree << "\n";
    if (!generators.empty()) {
      os << "generators = ";
      for (std::size_t k = 0; k < generators.size(); ++k) os << (k ? "; " : "") << generators[k];
      os << "\n";
    }
  }
  for (const auto& s : subgroups) {
    os << "\n[subgroup \"" << s.name << "\"]\n";
    if (!s.generators.empty()) {
      os << "generators = ";
      for (std::size_t k = 0; k < s.generators.size(); ++k) os << (k ? "; " : "") << s.generators[k];
    } else {
      os << "members =";
      for (Elem m : s.members) os << ' ' << m;
    }
    os << "\n";
  }
  if (!relation.empty()) {
    os << "\n[relation]\n";
    for (const auto& [n, c] : relation) os << n << " = " << c << "\n";
  }
  if (!search.empty()) {
    os << "\n[search]\nsubgroups =";
    for (std::size_t k = 0; k < search.size(); ++k) os << (k ? ", " : " ") << search[k];
    os << "\n";
  }
  for (const auto& r : reps) {
    os << "\n[rep \"" << r.name << "\"]\nrecipe =";
    for (const auto& t : r.recipe) os << ' ' << t;
    os << "\n";
  }
  for (const auto& pr : primes) {
    os << "\n[prime \"" << pr.label << "\"]\n"
       << "decomposition = " << pr.decomposition << "\n"
       << "inertia = " << pr.inertia << "\n"
       << "model = " << describe(pr.model) << "\n";
  }
  if (p) os << "\n[job]\np = " << *p << "\n";
  return os.str();
}

// --------------------------------------------------------------------- Job

Job::Job(JobConfig config) : config_(std::move(config)) {
  config_.validate();
  if (config_.named) {
    named_ = named_group(*config_.named);
    group_ = named_->group;
    subgroups_ = named_->subgroups;
  } else {
    std::vector<Perm> gens;
    for (const auto& g : config_.generators) gens.push_back(Perm::from_cycles(config_.degree, g));
    group_ = Group::generate(config_.degree, gens);
    subgroups_ = {Subgroup::trivial(group_), Subgroup::whole(group_)};
  }
  for (const auto& s : config_.subgroups) {
    if (!s.generators.empty()) {
      std::vector<Elem> gens;
      for (const auto& text : s.generators) {
        const Perm perm = Perm::from_cycles(group_.degree(), text);
        if (!group_.contains(perm))
          throw ConfigError("subgroup '" + s.name + "': " + perm.cycles() + " is not in the group");
        gens.push_back(group_.index_of(perm));
      }
      subgroups_.push_back(Subgroup::generated_by(group_, gens, s.name));
    } else {
      try {
        subgroups_.push_back(Subgroup::from_members(group_, s.members, s.name));
      } catch (const MathError& e) {
        throw ConfigError("subgroup '" + s.name + "': " + e.what());
      }
    }
  }
}

std::string Job::group_label() const {
  std::string base = config_.named ? config_.named->str()
                                   : "custom degree " + std::to_string(group_.degree());
  return base + " (order " + std::to_string(group_.order()) + ")";
}

const Subgroup& Job::subgroup(const std::string& name) const {
  for (const auto& s : subgroups_)
    if (s.name() == name) return s;
  throw ConfigError("unknown subgroup '" + name + "'");
}

std::vector<Subgroup> Job::search_subgroups() const {
  std::vector<Subgroup> out;
  if (!config_.search.empty()) {
    for (const auto& n : config_.search) out.push_back(subgroup(n));
    return out;
  }
  std::vector<std::pair<std::vector<Elem>, const Subgroup*>> known;
  for (const auto& s : subgroups_) known.emplace_back(smallest_conjugate(s), &s);
  std::vector<bool> unnamed;
  std::map<std::size_t, int> unnamed_per_order;
  for (const auto& rep : subgroups_up_to_conjugacy(group_)) {
    const std::vector<Elem> key(rep.members().begin(), rep.members().end());
    auto it = std::find_if(known.begin(), known.end(),
                           [&](const auto& k) { return k.first == key; });
    unnamed.push_back(it == known.end());
    if (unnamed.back()) {
      ++unnamed_per_order[rep.order()];
      out.push_back(rep);
    } else {
      out.push_back(*it->second);
    }
  }
  // Classes with no distinguished name become H<order>, with a letter suffix
  // when several share an order.
  std::map<std::size_t, int> next_letter;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!unnamed[k]) continue;
    const std::size_t order = out[k].order();
    std::string name = "H" + std::to_string(order);
    if (unnamed_per_order[order] > 1) name += static_cast<char>('a' + next_letter[order]++ % 26);
    out[k] = out[k].renamed(name);
  }
  return out;
}

std::optional<BrauerRelation> Job::explicit_relation() const {
  if (config_.relation.empty()) return std::nullopt;
  std::vector<RelationTerm> terms;
  for (const auto& [n, c] : config_.relation) terms.push_back({subgroup(n), c});
  return BrauerRelation(group_, std::move(terms));
}

std::vector<BrauerRelation> Job::relations() const {
  if (auto r = explicit_relation()) return {*r};
  return find_relations(group_, search_subgroups());
}

PairedRepresentation Job::operand(
    const std::string& token, const std::map<std::string, PairedRepresentation>& built) const {
  if (token == "trivial") {
    auto rep = Representation::trivial(group_);
    return {rep, Pairing::make(rep, QMatrix::identity(1))};
  }
  if (token.rfind("perm:", 0) == 0) return perm_rep(subgroup(token.substr(5)));
  return built.at(token);
}

std::vector<LabeledRepresentation> Job::representations() const {
  std::map<std::string, PairedRepresentation> built;
  std::vector<LabeledRepresentation> out;
  for (const auto& r : config_.reps) {
    const auto& t = r.recipe;
    std::optional<PairedRepresentation> v;
    if (t[0] == "trivial") {
      v = operand("trivial", built);
    } else if (t[0] == "perm") {
      v = perm_rep(subgroup(t[1]));
    } else if (t[0] == "sum") {
      v = operand(t[1], built);
      for (std::size_t k = 2; k < t.size(); ++k) v = direct_sum(*v, operand(t[k], built));
    } else {  // split_off
      Representation w = operand(t[2], built).rep;
      for (std::size_t k = 3; k < t.size(); ++k) w = direct_sum(w, operand(t[k], built).rep);
      v = split_off(operand(t[1], built), w);
    }
    built.emplace(r.name, *v);
    out.push_back({r.name, v->rep, std::nullopt});
  }
  return out;
}

std::vector<LocalPrimeData> Job::primes() const {
  std::vector<LocalPrimeData> out;
  for (const auto& pr : config_.primes)
    out.push_back(LocalPrimeData::make(pr.label, subgroup(pr.decomposition),
                                       subgroup(pr.inertia), pr.model));
  return out;
}

Integer Job::p() const {
  if (!config_.p) throw ConfigError("no prime p given; use --p or [job] p = ...");
  return Integer(*config_.p);
}

}  // namespace brauer
