// Finitely presented groups with selected peripheral elements, in the
// fpgroup text format:
//
//   fpgroup {<a,b,c; baCA,acEC; b,FADadaf>}
//
// Lowercase letters are generators, capitals their inverses; relators and
// selected elements are comma-separated. A bare <...> body is accepted. An
// optional comment line tags selected elements with peripheral roles:
//
//   # roles: m1,m2,l1,l2
//
// (meridians m<i>, longitudes l<i> paired by index, plus aux for extra
// surface words). Generators beyond 26 use the numbered form g1,g2,...

#ifndef KNOTREP_PRESENTATION_HPP_
#define KNOTREP_PRESENTATION_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "word.hpp"

namespace knotrep {

struct SelectedRole {
  char kind = 'a';     // 'm' meridian, 'l' longitude, 'a' aux
  unsigned index = 0;  // 1-based pairing index; 0 for aux

  friend bool operator==(const SelectedRole&, const SelectedRole&) = default;

  std::string str() const {
    if (kind == 'a')
      return "aux";
    return std::string(1, kind) + std::to_string(index);
  }

  static SelectedRole parse(std::string_view s) {
    if (s == "aux")
      return {'a', 0};
    if (s.size() >= 2 && (s[0] == 'm' || s[0] == 'l')) {
      unsigned idx = 0;
      for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
          fail("bad role tag: " + std::string(s));
        idx = idx * 10 + unsigned(s[i] - '0');
      }
      if (idx >= 1)
        return {s[0], idx};
    }
    fail("bad role tag: " + std::string(s) + " (expected m<i>, l<i> or aux)");
  }
};

class Presentation {
public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> relators, std::vector<Word> selected = {},
               std::vector<SelectedRole> roles = {})
      : names_(std::move(generator_names)),
        relators_(std::move(relators)),
        selected_(std::move(selected)),
        roles_(std::move(roles)) {
    validate();
  }

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<Word>& selected() const { return selected_; }

  // Role tags; when none were given, two selected elements default to m1,l1
  // and four to m1,m2,l1,l2 (the conventional ordering, meridians first).
  std::vector<SelectedRole> roles() const {
    if (!roles_.empty())
      return roles_;
    if (selected_.size() == 2)
      return {{'m', 1}, {'l', 1}};
    if (selected_.size() == 4)
      return {{'m', 1}, {'m', 2}, {'l', 1}, {'l', 2}};
    return std::vector<SelectedRole>(selected_.size(), SelectedRole{'a', 0});
  }

  bool has_explicit_roles() const { return !roles_.empty(); }

  std::optional<std::size_t> find_selected(SelectedRole role) const {
    auto rs = roles();
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs[i] == role)
        return i;
    return std::nullopt;
  }

  std::vector<std::size_t> meridian_selectors() const {
    std::vector<std::size_t> out;
    auto rs = roles();
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (rs[i].kind == 'm')
        out.push_back(i);
    return out;
  }

  std::vector<std::size_t> all_selectors() const {
    std::vector<std::size_t> out(selected_.size());
    std::iota(out.begin(), out.end(), std::size_t(0));
    return out;
  }

  void append_selected(Word w, SelectedRole role) {
    std::vector<SelectedRole> rs = roles();
    selected_.push_back(std::move(w));
    rs.push_back(role);
    roles_ = std::move(rs);
    validate();
  }

  // Signed exponent sum of each generator in each relator.
  std::vector<std::vector<long>> abelianized_exponent_matrix() const {
    std::vector<std::vector<long>> m(relators_.size(),
                                     std::vector<long>(names_.size(), 0));
    for (std::size_t r = 0; r < relators_.size(); ++r)
      for (std::int16_t x : relators_[r].letters)
        m[r][std::size_t(x > 0 ? x : -x) - 1] += x > 0 ? 1 : -1;
    return m;
  }

private:
  void validate() const {
    if (names_.empty())
      fail("presentation has no generators");
    auto check_word = [&](const Word& w) {
      for (std::int16_t x : w.letters) {
        std::size_t i = std::size_t(x > 0 ? x : -x);
        if (i < 1 || i > names_.size())
          fail("word letter out of generator range");
      }
    };
    for (const Word& w : relators_)
      check_word(w);
    for (const Word& w : selected_)
      check_word(w);
    if (!roles_.empty() && roles_.size() != selected_.size())
      fail("role count does not match selected element count");
  }

  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<Word> selected_;
  std::vector<SelectedRole> roles_;
};

namespace detail {

inline std::vector<std::string> parse_generator_names(std::string_view text) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (cur.empty())
        fail("empty generator name");
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty())
    names.push_back(cur);
  for (const std::string& n : names) {
    bool single = n.size() == 1 && n[0] >= 'a' && n[0] <= 'z';
    bool numbered = n.size() >= 2 && n[0] == 'g' &&
                    std::all_of(n.begin() + 1, n.end(), [](char c) {
                      return std::isdigit(static_cast<unsigned char>(c));
                    });
    if (!single && !numbered)
      fail("bad generator name: " + n);
  }
  return names;
}

inline Word parse_word(std::string_view text,
                       const std::vector<std::string>& names) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::string name;
    bool inverse = false;
    if (c >= 'a' && c <= 'z' && c != 'g') {
      name = std::string(1, c);
      ++i;
    } else if (c >= 'A' && c <= 'Z' && c != 'G') {
      name = std::string(1, char(c - 'A' + 'a'));
      inverse = true;
      ++i;
    } else if (c == 'g' || c == 'G') {
      inverse = c == 'G';
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i + 1) {
        // plain letter g
        name = "g";
        ++i;
      } else {
        name = "g" + std::string(text.substr(i + 1, j - i - 1));
        i = j;
      }
    } else {
      fail(std::string("unknown letter '") + c + "' in word");
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      fail("word uses undeclared generator: " + name);
    auto idx = std::int16_t(it - names.begin() + 1);
    w.letters.push_back(inverse ? std::int16_t(-idx) : idx);
  }
  return w;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Parses fpgroup text. Lines starting with '#' are comments; a
// "# roles: ..." comment tags the selected elements. The body may be
// wrapped as "fpgroup {<...>}" or be a bare "<...>".
inline Presentation parse_presentation(std::string_view text) {
  std::vector<SelectedRole> roles;
  std::string body;
  for (std::string_view line : detail::split(text, '\n')) {
    std::string_view t = detail::trim(line);
    if (t.empty())
      continue;
    if (t[0] == '#') {
      std::string_view c = detail::trim(t.substr(1));
      if (c.substr(0, 6) == "roles:") {
        for (std::string_view tag : detail::split(c.substr(6), ','))
          roles.push_back(SelectedRole::parse(detail::trim(tag)));
      }
      continue;
    }
    body += std::string(t);
    body += ' ';
  }
  std::string_view s = detail::trim(body);
  if (s.substr(0, 7) == "fpgroup") {
    s = detail::trim(s.substr(7));
    if (s.empty() || s.front() != '{' || s.back() != '}')
      fail("expected fpgroup { ... }");
    s = detail::trim(s.substr(1, s.size() - 2));
  }
  if (s.empty() || s.front() != '<' || s.back() != '>')
    fail("expected presentation body <...>");
  s = s.substr(1, s.size() - 2);

  std::vector<std::string_view> sections = detail::split(s, ';');
  if (sections.empty() || sections.size() > 3)
    fail("presentation body must have 1..3 ';'-separated sections");
  std::vector<std::string> names =
      detail::parse_generator_names(detail::trim(sections[0]));
  auto parse_words = [&](std::string_view sec) {
    std::vector<Word> words;
    for (std::string_view part : detail::split(sec, ',')) {
      std::string_view w = detail::trim(part);
      if (!w.empty())
        words.push_back(detail::parse_word(w, names));
    }
    return words;
  };
  std::vector<Word> relators =
      sections.size() >= 2 ? parse_words(sections[1]) : std::vector<Word>{};
  std::vector<Word> selected =
      sections.size() >= 3 ? parse_words(sections[2]) : std::vector<Word>{};
  if (!roles.empty() && roles.size() != selected.size())
    fail("roles comment does not match number of selected elements");
  return Presentation(std::move(names), std::move(relators),
                      std::move(selected), std::move(roles));
}

inline std::string format_word(const Word& w,
                               const std::vector<std::string>& names) {
  std::string out;
  for (std::int16_t x : w.letters) {
    const std::string& n = names[std::size_t(x > 0 ? x : -x) - 1];
    if (n.size() == 1)
      out += x > 0 ? n[0] : char(std::toupper(n[0]));
    else
      out += x > 0 ? n : "G" + n.substr(1);
  }
  return out;
}

// Single-line fpgroup form; round-trips parse_presentation output exactly.
inline std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "fpgroup {<";
  const auto& names = p.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    out << (i ? "," : "") << names[i];
  out << "; ";
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    out << (i ? "," : "") << format_word(p.relators()[i], names);
  if (!p.selected().empty()) {
    out << "; ";
    for (std::size_t i = 0; i < p.selected().size(); ++i)
      out << (i ? "," : "") << format_word(p.selected()[i], names);
  }
  out << ">}";
  return out.str();
}

// File form: roles comment (when explicit) followed by the fpgroup line.
inline std::string format_presentation_file(const Presentation& p) {
  std::string out;
  if (p.has_explicit_roles()) {
    out += "# roles: ";
    auto rs = p.roles();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (i)
        out += ',';
      out += rs[i].str();
    }
    out += '\n';
  }
  out += format_presentation(p);
  out += '\n';
  return out;
}

// A substitution rule rewrites the word of one selected role as a word in
// the selected symbols themselves (e.g. m2 -> m2 l2).
struct SubstitutionRule {
  SelectedRole target;
  std::vector<std::pair<SelectedRole, int>> expansion;  // (symbol, +1/-1)
};

// Applies rules to the selected words: each rewritten word is the
// concatenation of the current words of the rule's symbols, freely reduced.
// Generators, relators, and untouched selected words are unchanged. With
// keep_originals, the prior word of every rewritten meridian is appended as
// an aux selected element so the surface subgroup they generate is kept.
inline Presentation substitute(const Presentation& p,
                               const std::vector<SubstitutionRule>& rules,
                               bool keep_originals = false) {
  auto roles = p.roles();
  std::vector<Word> selected = p.selected();
  std::vector<Word> rewritten = selected;
  std::vector<bool> touched(selected.size(), false);
  for (const SubstitutionRule& rule : rules) {
    std::optional<std::size_t> target = p.find_selected(rule.target);
    if (!target)
      fail("substitution targets untagged selected element " +
           rule.target.str());
    Word w;
    for (const auto& [sym, sign] : rule.expansion) {
      std::optional<std::size_t> src = p.find_selected(sym);
      if (!src)
        fail("substitution rule references untagged selected element " +
             sym.str());
      w = concat(w, sign > 0 ? selected[*src] : invert(selected[*src]));
    }
    rewritten[*target] = free_reduce(w);
    touched[*target] = true;
  }
  std::vector<SelectedRole> new_roles = roles;
  if (keep_originals) {
    for (std::size_t i = 0; i < selected.size(); ++i)
      if (touched[i]) {
        rewritten.push_back(selected[i]);
        new_roles.push_back({'a', 0});
      }
  }
  return Presentation(p.generator_names(), p.relators(), std::move(rewritten),
                      std::move(new_roles));
}

}  // namespace knotrep

#endif  // KNOTREP_PRESENTATION_HPP_
