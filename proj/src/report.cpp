#include "brauer/report.hpp"

#include "brauer/error.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

namespace brauer {

std::string Report::value(const std::string& k) const {
  for (const auto& [key, v] : machine)
    if (key == k) return v;
  return {};
}

std::string Report::render() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << "\n";
  os << "\n[machine]\n";
  for (const auto& [k, v] : machine) os << k << "=" << v << "\n";
  return os.str();
}

namespace {

constexpr const char* kGranularityNote =
    "note: representations are handled at Q-rational granularity; constituents "
    "not realisable over Q enter only through their Q-rational sums.";

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + v[k];
  return out;
}

void header(Report& r, const Job& job, const std::string& title) {
  r.line("== " + title + " ==");
  r.line("group: " + job.group_label());
  r.key("group", job.config().named ? job.config().named->str() : "custom");
  r.key("order", std::to_string(job.group().order()));
}

BrauerRelation single_relation(const Job& job) {
  auto rels = job.relations();
  if (rels.empty()) throw MathError("no relation between permutation representations");
  if (rels.size() > 1)
    throw MathError(std::to_string(rels.size()) +
                    " independent relations found; choose one with a [relation] section");
  return rels.front();
}

void describe_constant(Report& r, const std::string& label, std::size_t dim,
                       const RegulatorConstant& c, const Integer& p, const std::string& prefix) {
  r.line("C(Theta, " + label + ") = " + c.value.str() + "   [dim " + std::to_string(dim) +
         ", ratio " + c.ratio.get_str() + ", ord_" + p.get_str() + " = " +
         std::to_string(c.ord(p)) + "]");
  for (const auto& t : c.terms)
    r.line("    " + std::to_string(t.coefficient) + " x " + t.subgroup + ": dim " +
           std::to_string(t.fixed_dim) + ", det " + t.det.get_str());
  r.key(prefix + "C." + label, c.value.str());
  r.key(prefix + "ord_p." + label, std::to_string(c.ord(p)));
}

void describe_s_theta(Report& r, const SThetaReport& s) {
  const auto members = s.members();
  r.line("S_Theta = {" + join(members, ", ") + "}" +
         (s.exhaustive ? "  (exhaustive)" : "  (not exhaustive)"));
  r.line(kGranularityNote);
  r.key("s_theta", join(members, ","));
  r.key("s_theta_exhaustive", s.exhaustive ? "true" : "false");
}

}  // namespace

Report report_relations(const Job& job) {
  Report r;
  header(r, job, "relations");
  if (auto explicit_rel = job.explicit_relation()) {
    const auto verdict = verify_relation(*explicit_rel);
    r.line("given relation: " + explicit_rel->str() + " -> " +
           (verdict.holds ? "holds"
                          : "fails at class " + std::to_string(*verdict.witness_class) +
                                " (value " + std::to_string(verdict.value) + ")"));
    r.key("given_relation_holds", verdict.holds ? "true" : "false");
  }
  const auto subgroups = job.search_subgroups();
  std::vector<std::string> names;
  for (const auto& s : subgroups) names.push_back(s.name() + "(" + std::to_string(s.order()) + ")");
  r.line("subgroups searched: " + join(names, ", "));
  const auto rels = find_relations(job.group(), subgroups);
  if (rels.empty()) r.line("no relations found");
  for (std::size_t k = 0; k < rels.size(); ++k) {
    r.line("relation " + std::to_string(k + 1) + ": " + rels[k].str());
    r.key("relation." + std::to_string(k + 1), rels[k].str());
  }
  r.key("relation_count", std::to_string(rels.size()));
  return r;
}

Report report_regconst(const Job& job) {
  Report r;
  header(r, job, "regulator constants");
  const Integer p = job.p();
  r.key("p", p.get_str());
  const auto rels = job.relations();
  const auto reps = job.representations();
  if (rels.empty()) r.line("no relations found");
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const std::string prefix = rels.size() > 1 ? "theta" + std::to_string(k + 1) + "." : "";
    r.line("");
    r.line("Theta = " + rels[k].str());
    r.key(prefix + "relation", rels[k].str());
    for (const auto& rep : reps)
      describe_constant(r, rep.label, rep.rep.dim(), regulator_constant(rels[k], rep.rep),
                        p, prefix);
  }
  return r;
}

Report report_stheta(const Job& job) {
  Report r;
  header(r, job, "S_Theta");
  const Integer p = job.p();
  const auto theta = single_relation(job);
  r.line("Theta = " + theta.str());
  r.key("relation", theta.str());
  r.key("p", p.get_str());
  const auto reps = job.representations();
  const auto s = s_theta(theta, reps, p);
  for (std::size_t k = 0; k < s.entries.size(); ++k)
    describe_constant(r, s.entries[k].label, reps[k].rep.dim(), s.entries[k].c, p, "");
  describe_s_theta(r, s);
  return r;
}

Report report_splitting(const Job& job) {
  Report r;
  header(r, job, "prime splitting");
  std::vector<Subgroup> targets;
  if (auto rel = job.explicit_relation()) {
    for (const auto& t : rel->terms()) targets.push_back(t.subgroup);
  } else {
    for (const auto& n : job.config().search) targets.push_back(job.subgroup(n));
    if (targets.empty())
      for (const auto& rel : job.relations())
        for (const auto& t : rel.terms()) targets.push_back(t.subgroup);
  }
  const auto primes = job.primes();
  if (primes.empty()) r.line("no primes configured");
  for (const auto& pr : primes) {
    r.line("prime " + pr.label + ": |D| = " + std::to_string(pr.decomposition.order()) +
           ", |I| = " + std::to_string(pr.inertia.order()) + ", model " + describe(pr.model));
    for (const auto& h : targets) {
      const auto s = splitting(job.group(), h, pr.decomposition, pr.inertia);
      r.line("    F^" + h.name() + ": " + to_string(s));
      r.key("splitting." + pr.label + "." + h.name(), to_string(s));
    }
  }
  return r;
}

Report report_parity(const Job& job) {
  Report r;
  header(r, job, "Selmer parity");
  const Integer p = job.p();
  const auto theta = single_relation(job);
  r.line("Theta = " + theta.str());
  r.key("relation", theta.str());
  r.key("p", p.get_str());
  const auto reps = job.representations();
  const auto report = predict_parity(theta, reps, job.primes(), p);
  for (std::size_t k = 0; k < report.s_theta.entries.size(); ++k)
    describe_constant(r, report.s_theta.entries[k].label, reps[k].rep.dim(),
                      report.s_theta.entries[k].c, p, "");
  describe_s_theta(r, report.s_theta);
  for (const auto& pc : report.primes) {
    r.line("prime " + pc.label + ": contribution " + std::to_string(pc.total));
    for (const auto& t : pc.terms) {
      r.line("    " + std::to_string(t.coefficient) + " x F^" + t.subgroup + ": " +
             to_string(t.splitting) + ", ord_" + p.get_str() + " C = " +
             std::to_string(t.tamagawa_ord));
      r.key("splitting." + pc.label + "." + t.subgroup, to_string(t.splitting));
    }
  }
  r.line("ord_" + p.get_str() + " of the Tamagawa ratio: " + std::to_string(report.c_ratio_ord));
  r.line("conclusion: " + report.conclusion);
  for (const auto& w : report.warnings) r.line("warning: " + w);
  r.line(kPolarisationCaveat);
  r.key("c_ratio_ord", std::to_string(report.c_ratio_ord));
  r.key("c_ratio_ord_mod2", std::to_string(report.parity));
  r.key("parity", report.parity ? "odd" : "even");
  r.key("conclusion", report.conclusion);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brauer relations, regulator constants and Selmer parity"};
  app.require_subcommand(1);
  std::string config_path, group_text;
  long p_flag = 0;
  struct Command {
    const char* name;
    const char* help;
    Report (*fn)(const Job&);
  };
  const Command commands[] = {
      {"relations", "find and verify relations between permutation representations",
       report_relations},
      {"regconst", "regulator constants of each representation", report_regconst},
      {"stheta", "the set S_Theta at a prime p", report_stheta},
      {"splitting", "(e,f) of configured primes in the fixed fields", report_splitting},
      {"parity", "parity of the S_Theta multiplicity sum from local data", report_parity},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", config_path, "job config file");
    sub->add_option("--group", group_text, "named group, e.g. dihedral:6, gl2:3");
    sub->add_option("--p", p_flag, "prime p (overrides the config)");
    subs.push_back(sub);
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::Config);
  }

  try {
    if (config_path.empty() && group_text.empty())
      throw ConfigError("give --config <path> or --group <spec>");
    JobConfig cfg = config_path.empty() ? JobConfig::defaults_for(GroupSpec::parse(group_text))
                                        : JobConfig::load(config_path);
    if (!config_path.empty() && !group_text.empty())
      throw ConfigError("--group and --config are mutually exclusive");
    if (p_flag != 0) {
      cfg.p = p_flag;
      cfg.validate();
    }
    const Job job(std::move(cfg));
    for (std::size_t k = 0; k < subs.size(); ++k)
      if (subs[k]->parsed()) {
        out << commands[k].fn(job).render();
        return 0;
      }
    return static_cast<int>(ErrorKind::Config);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace brauer
