// Named substitution-rule sets. File format:
//
//   # comment
//   [-A1]
//   m1 = m1
//   m2 = m2 l2^-1
//
// Section headers name a rule set; each line rewrites one selected role as
// a word in selected-role symbols (optional integer exponent after '^').

#ifndef KNOTREP_RULES_HPP_
#define KNOTREP_RULES_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "presentation.hpp"

namespace knotrep {

using RuleSet = std::vector<SubstitutionRule>;

inline std::map<std::string, RuleSet> parse_rules_file(std::string_view text) {
  std::map<std::string, RuleSet> sets;
  std::string current;
  for (std::string_view raw : detail::split(text, '\n')) {
    std::string_view line = detail::trim(raw);
    if (line.empty() || line[0] == '#')
      continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        fail("bad rule section header: " + std::string(line));
      current = std::string(detail::trim(line.substr(1, line.size() - 2)));
      if (current.empty())
        fail("empty rule set name");
      sets[current];
      continue;
    }
    if (current.empty())
      fail("rule line before any [section]: " + std::string(line));
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail("rule line needs '=': " + std::string(line));
    SubstitutionRule rule;
    rule.target = SelectedRole::parse(detail::trim(line.substr(0, eq)));
    std::string_view rhs = detail::trim(line.substr(eq + 1));
    std::string tok;
    auto flush = [&] {
      if (tok.empty())
        return;
      std::size_t caret = tok.find('^');
      std::string sym = tok.substr(0, caret);
      long exp = 1;
      if (caret != std::string::npos) {
        exp = std::stol(tok.substr(caret + 1));
        if (exp == 0)
          fail("zero exponent in rule token: " + tok);
      }
      SelectedRole role = SelectedRole::parse(sym);
      for (long k = 0; k < (exp > 0 ? exp : -exp); ++k)
        rule.expansion.push_back({role, exp > 0 ? 1 : -1});
      tok.clear();
    };
    for (char c : rhs) {
      if (std::isspace(static_cast<unsigned char>(c)))
        flush();
      else
        tok += c;
    }
    flush();
    if (rule.expansion.empty())
      fail("empty rule expansion: " + std::string(line));
    sets[current].push_back(std::move(rule));
  }
  return sets;
}

}  // namespace knotrep

#endif  // KNOTREP_RULES_HPP_
