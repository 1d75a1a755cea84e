#include "dac/core/prompt.hpp"

#include <cctype>

#include "dac/error.hpp"

namespace dac::core {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Length of the placeholder name starting after '{' at `open`, or 0.
std::size_t name_length(std::string_view tpl, std::size_t open) {
  std::size_t i = open + 1;
  while (i < tpl.size() && is_name_char(tpl[i])) ++i;
  if (i == open + 1 || i >= tpl.size() || tpl[i] != '}') return 0;
  return i - open - 1;
}

void check_subset(std::string_view which, std::string_view tpl,
                  const std::set<std::string>& allowed) {
  if (tpl.empty()) {
    throw PreconditionViolation(std::string(which) + " template is empty");
  }
  for (const auto& name : placeholders(tpl)) {
    if (!allowed.contains(name)) {
      throw PreconditionViolation(std::string(which) + " template uses undeclared placeholder {" +
                                  name + "}");
    }
  }
}

}  // namespace

std::set<std::string> placeholders(std::string_view tpl) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < tpl.size(); ++i) {
    if (tpl[i] != '{') continue;
    if (auto len = name_length(tpl, i); len > 0) {
      names.emplace(tpl.substr(i + 1, len));
      i += len + 1;
    }
  }
  return names;
}

std::string render(std::string_view tpl, const TemplateVars& vars) {
  std::string out;
  out.reserve(tpl.size());
  for (std::size_t i = 0; i < tpl.size(); ++i) {
    if (tpl[i] == '{') {
      if (auto len = name_length(tpl, i); len > 0) {
        auto name = tpl.substr(i + 1, len);
        auto it = vars.find(name);
        if (it == vars.end()) {
          throw PreconditionViolation("no value for placeholder {" + std::string(name) + "}");
        }
        out += it->second;
        i += len + 1;
        continue;
      }
    }
    out.push_back(tpl[i]);
  }
  return out;
}

void PromptTriple::validate(const std::set<std::string>& decompose_vars,
                            const std::set<std::string>& tackle_vars,
                            const std::set<std::string>& merge_vars) const {
  check_subset("decompose", decompose, decompose_vars);
  check_subset("tackle", tackle, tackle_vars);
  check_subset("merge", merge, merge_vars);
}

}  // namespace dac::core
