#pragma once

#include "brauer/job.hpp"

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// Human-readable lines followed by a key=value block under "[machine]".
struct Report {
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, std::string>> machine;

  void line(std::string s) { lines.push_back(std::move(s)); }
  void key(std::string k, std::string v) { machine.emplace_back(std::move(k), std::move(v)); }
  /// Value of a machine key, or empty.
  std::string value(const std::string& k) const;
  std::string render() const;
};

Report report_relations(const Job& job);
Report report_regconst(const Job& job);
Report report_stheta(const Job& job);
Report report_splitting(const Job& job);
Report report_parity(const Job& job);

/// Entry point shared by the executable and the tests. args[0] is the
/// program name. Returns the process exit status: 0 ok, 2 config error,
/// 3 cap exceeded, 4 math precondition violated, 5 model table gap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace brauer
