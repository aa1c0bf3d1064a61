// Words in a free group: signed generator indices, reduction, evaluation.

#ifndef KNOTREP_WORD_HPP_
#define KNOTREP_WORD_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "perm.hpp"

namespace knotrep {

// A word over generators g1..gk: positive letter i means g_i, negative -i
// means g_i^-1. Words are kept as written; reduction is always explicit.
struct Word {
  std::vector<std::int16_t> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

inline Word invert(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(std::int16_t(-*it));
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

inline Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (std::int16_t x : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -x)
      out.letters.pop_back();
    else
      out.letters.push_back(x);
  }
  return out;
}

// Free reduction followed by stripping conjugate ends: "x w x^-1" -> "w".
inline Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  Word out;
  out.letters.assign(r.letters.begin() + lo, r.letters.begin() + hi);
  return out;
}

// Left-to-right product of generator images along the word; the empty word
// evaluates to the identity.
inline Perm evaluate(const Word& w, const std::vector<Perm>& images,
                     unsigned degree) {
  Perm acc = Perm::identity(degree);
  for (std::int16_t x : w.letters) {
    std::size_t i = std::size_t(x > 0 ? x : -x) - 1;
    if (i >= images.size())
      fail("word references generator beyond image vector");
    acc = x > 0 ? acc * images[i] : acc * images[i].inverse();
  }
  return acc;
}

inline Perm evaluate(const Word& w, const std::vector<Perm>& images) {
  if (images.empty())
    fail("cannot evaluate with an empty image vector");
  return evaluate(w, images, images[0].degree());
}

}  // namespace knotrep

#endif  // KNOTREP_WORD_HPP_
