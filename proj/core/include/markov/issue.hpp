#pragma once

#include <string>
#include <vector>

namespace markov {

/// One validation finding. `code` is a stable machine-readable tag
/// (e.g. "SelfLoop", "MissingGluing"), `subject` names the offending
/// cell/production/gluing, `detail` is free-form context.
struct Issue {
  std::string code;
  std::string subject;
  std::string detail;

  bool operator==(const Issue&) const = default;
};

std::string format_issue(const Issue& issue);

inline bool has_issue(const std::vector<Issue>& issues, const std::string& code) {
  for (const auto& i : issues) {
    if (i.code == code) return true;
  }
  return false;
}

inline bool has_issue(const std::vector<Issue>& issues, const std::string& code,
                      const std::string& subject) {
  for (const auto& i : issues) {
    if (i.code == code && i.subject == subject) return true;
  }
  return false;
}

}  // namespace markov
