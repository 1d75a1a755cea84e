#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace dac::core {

using TemplateVars = std::map<std::string, std::string, std::less<>>;

/// Names of every `{name}` placeholder in `tpl`. A placeholder is a brace
/// pair enclosing [A-Za-z0-9_]+; other braces are literal text.
std::set<std::string> placeholders(std::string_view tpl);

/// Substitutes every placeholder from `vars`; throws PreconditionViolation
/// when a placeholder has no value.
std::string render(std::string_view tpl, const TemplateVars& vars);

/// Decompose (d), tackle (t) and merge (m) templates of one task.
struct PromptTriple {
  std::string decompose;
  std::string tackle;
  std::string merge;

  /// Checks non-emptiness and that each template only uses placeholders
  /// from its declared set. Throws PreconditionViolation.
  void validate(const std::set<std::string>& decompose_vars,
                const std::set<std::string>& tackle_vars,
                const std::set<std::string>& merge_vars) const;
};

}  // namespace dac::core
