// The calculus rule table and the three-valued verdicts that cite it.
// Rules are data: every holds/fails verdict lists the rule ids it used, and
// the audit mode re-checks each trace line against this table.
#pragma once

#include <string>
#include <vector>

#include "gbh/error.hpp"

namespace gbh::cal {

struct Rule {
  std::string id;
  std::string statement;
};

// The single source of rule ids and statements; docs and audit both read it.
const std::vector<Rule>& rule_table();
const Rule* find_rule(const std::string& id);

enum class Answer { holds, fails, unknown };

std::string to_string(Answer a);

struct TraceStep {
  std::string rule_id;
  std::string statement;
};

// holds/fails verdicts always carry at least one trace step; unknown may
// carry a note naming the blocking missing assumption.
struct Verdict {
  Answer answer = Answer::unknown;
  std::vector<TraceStep> trace;
  std::string note;
};

Verdict holds(const std::vector<std::string>& rule_ids);
Verdict fails(const std::vector<std::string>& rule_ids);
Verdict unknown(const std::string& note = "");

// True when every trace step's statement matches the rule table verbatim
// and holds/fails verdicts are non-vacuously cited.
bool audit(const Verdict& v);

}  // namespace gbh::cal
