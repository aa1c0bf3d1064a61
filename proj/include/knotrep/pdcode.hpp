// Planar-diagram codes for knots and the Wirtinger presentation with
// peripheral system.
//
// A crossing is a 4-tuple (a,b,c,d) of edge labels read counterclockwise
// starting from the incoming under-strand. Edges are labeled 1..2n in order
// along the knot, so the under-strand continues as c = a+1 and the over
// pair satisfies d = b+1 (positive crossing) or b = d+1 (negative), both
// mod 2n.

#ifndef KNOTREP_PDCODE_HPP_
#define KNOTREP_PDCODE_HPP_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "presentation.hpp"

namespace knotrep {

struct CrossingTuple {
  std::array<unsigned, 4> e;  // a,b,c,d

  friend bool operator==(const CrossingTuple&, const CrossingTuple&) = default;
};

class PDCode {
public:
  PDCode() = default;
  explicit PDCode(std::vector<CrossingTuple> crossings)
      : crossings_(std::move(crossings)) {
    validate();
  }

  std::size_t crossing_count() const { return crossings_.size(); }
  unsigned edge_count() const { return unsigned(2 * crossings_.size()); }
  const std::vector<CrossingTuple>& crossings() const { return crossings_; }

  // One crossing per line: "X a b c d"; '#' starts a comment.
  static PDCode parse(std::string_view text) {
    std::vector<CrossingTuple> crossings;
    std::size_t i = 0;
    auto next_line = [&]() -> std::string_view {
      std::size_t start = i;
      while (i < text.size() && text[i] != '\n')
        ++i;
      std::string_view line = text.substr(start, i - start);
      if (i < text.size())
        ++i;
      return line;
    };
    while (i < text.size()) {
      std::string_view line = next_line();
      std::size_t hash = line.find('#');
      if (hash != std::string_view::npos)
        line = line.substr(0, hash);
      std::vector<std::string> tokens;
      std::string cur;
      for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          if (!cur.empty())
            tokens.push_back(cur), cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty())
        tokens.push_back(cur);
      if (tokens.empty())
        continue;
      if (tokens[0] != "X" || tokens.size() != 5)
        fail("bad PD line (expected 'X a b c d'): " + std::string(line));
      CrossingTuple t{};
      for (int k = 0; k < 4; ++k) {
        const std::string& tok = tokens[k + 1];
        unsigned v = 0;
        for (char c : tok) {
          if (!std::isdigit(static_cast<unsigned char>(c)))
            fail("bad edge label in PD line: " + tok);
          v = v * 10 + unsigned(c - '0');
        }
        t.e[k] = v;
      }
      crossings.push_back(t);
    }
    return PDCode(std::move(crossings));
  }

  std::string format() const {
    std::string out;
    for (const CrossingTuple& t : crossings_) {
      out += "X";
      for (unsigned v : t.e)
        out += ' ' + std::to_string(v);
      out += '\n';
    }
    return out;
  }

  // +1 when the over strand runs b -> d, -1 when d -> b.
  int sign(const CrossingTuple& t) const {
    unsigned n2 = edge_count();
    if (t.e[3] == t.e[1] % n2 + 1)
      return +1;
    if (t.e[1] == t.e[3] % n2 + 1)
      return -1;
    fail("crossing has no over-strand orientation");
  }

  int writhe() const {
    int w = 0;
    for (const CrossingTuple& t : crossings_)
      w += sign(t);
    return w;
  }

  // Over/under swap at every crossing: the tuple is rotated one position so
  // it starts from the new incoming under-strand.
  PDCode mirror() const {
    std::vector<CrossingTuple> out;
    out.reserve(crossings_.size());
    for (const CrossingTuple& t : crossings_) {
      if (sign(t) > 0)
        out.push_back({{t.e[1], t.e[2], t.e[3], t.e[0]}});
      else
        out.push_back({{t.e[3], t.e[0], t.e[1], t.e[2]}});
    }
    return PDCode(std::move(out));
  }

  // Wirtinger presentation: one generator per arc (over-strand pairs merge
  // their edges), one length-4 conjugation relator per crossing, and the
  // peripheral pair of the arc through base_edge as selected elements. The
  // longitude collects the over-arc generator with the crossing's sign at
  // every underpass, then meridian^(-writhe), so its total exponent sum
  // vanishes.
  Presentation wirtinger(unsigned base_edge = 1) const {
    if (crossings_.empty()) {
      // 0-crossing unknot: free of rank 1, empty longitude.
      Word meridian{{1}};
      return Presentation({"a"}, {}, {meridian, Word{}},
                          {{'m', 1}, {'l', 1}});
    }
    unsigned n2 = edge_count();
    if (base_edge < 1 || base_edge > n2)
      fail("base edge out of range");
    // Merge over pairs: edge -> arc representative.
    std::vector<unsigned> parent(n2 + 1);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
      while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const CrossingTuple& t : crossings_)
      parent[find(t.e[1])] = find(t.e[3]);
    // Name arcs in traversal order from the base edge.
    std::map<unsigned, std::size_t> arc_index;
    std::vector<std::string> names;
    auto naming = [&](std::size_t k) {
      if (crossing_count() <= 13)  // at most 26 arcs
        return std::string(1, char('a' + k));
      return "g" + std::to_string(k + 1);
    };
    for (unsigned step = 0; step < n2; ++step) {
      unsigned edge = (base_edge - 1 + step) % n2 + 1;
      unsigned root = find(edge);
      if (!arc_index.count(root)) {
        arc_index[root] = names.size();
        names.push_back(naming(names.size()));
      }
    }
    auto gen_of = [&](unsigned edge) {
      return std::int16_t(arc_index.at(find(edge)) + 1);
    };
    // out = over^-s * in * over^s at each crossing of sign s, recorded as
    // the length-4 relator out * over^-s * in^-1 * over^s.
    std::vector<Word> relators;
    for (const CrossingTuple& t : crossings_) {
      int s = sign(t);
      std::int16_t in = gen_of(t.e[0]);
      std::int16_t out = gen_of(t.e[2]);
      std::int16_t over = gen_of(t.e[1]);
      Word r;
      r.letters = {out, std::int16_t(s > 0 ? -over : over),
                   std::int16_t(-in), std::int16_t(s > 0 ? over : -over)};
      relators.push_back(std::move(r));
    }
    // Underpass met when the current edge is some crossing's a-edge.
    std::map<unsigned, const CrossingTuple*> under_at;
    for (const CrossingTuple& t : crossings_)
      under_at[t.e[0]] = &t;
    Word longitude;
    for (unsigned step = 0; step < n2; ++step) {
      unsigned edge = (base_edge - 1 + step) % n2 + 1;
      auto it = under_at.find(edge);
      if (it == under_at.end())
        continue;
      int s = sign(*it->second);
      std::int16_t over = gen_of(it->second->e[1]);
      longitude.letters.push_back(std::int16_t(s > 0 ? over : -over));
    }
    std::int16_t base_gen = gen_of(base_edge);
    int w = writhe();
    for (int k = 0; k < (w > 0 ? w : -w); ++k)
      longitude.letters.push_back(std::int16_t(w > 0 ? -base_gen : base_gen));
    Word meridian{{base_gen}};
    return Presentation(std::move(names), std::move(relators),
                        {meridian, longitude}, {{'m', 1}, {'l', 1}});
  }

private:
  void validate() const {
    if (crossings_.empty())
      return;
    unsigned n2 = edge_count();
    std::vector<unsigned> uses(n2 + 1, 0);
    std::vector<unsigned> in(n2 + 1, 0), out(n2 + 1, 0);
    for (const CrossingTuple& t : crossings_) {
      for (unsigned v : t.e) {
        if (v < 1 || v > n2)
          fail("edge label out of range 1..2n: " + std::to_string(v));
        ++uses[v];
      }
      if (t.e[2] != t.e[0] % n2 + 1)
        fail("under-strand must continue: c = a+1 (mod 2n)");
      int s = sign(t);  // validates the over pair
      ++in[t.e[0]];
      ++out[t.e[2]];
      ++in[s > 0 ? t.e[1] : t.e[3]];
      ++out[s > 0 ? t.e[3] : t.e[1]];
    }
    for (unsigned v = 1; v <= n2; ++v) {
      if (uses[v] != 2)
        fail("edge label " + std::to_string(v) + " must appear exactly twice");
      if (in[v] != 1 || out[v] != 1)
        fail("edge label " + std::to_string(v) +
             " must enter one crossing and leave one");
    }
  }

  std::vector<CrossingTuple> crossings_;
};

}  // namespace knotrep

#endif  // KNOTREP_PDCODE_HPP_
