// Permutations of {1..n} and disjoint-cycle notation.

#ifndef KNOTREP_PERM_HPP_
#define KNOTREP_PERM_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotrep {

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

// A bijection of {1..n}. Composition is read left to right: (p * q) first
// applies p, then q. Points are 1-based in the API, 0-based in storage.
class Perm {
public:
  Perm() = default;

  explicit Perm(std::vector<std::uint8_t> images0) : img_(std::move(images0)) {
    check_bijection();
  }

  static Perm identity(unsigned degree) {
    std::vector<std::uint8_t> v(degree);
    std::iota(v.begin(), v.end(), std::uint8_t(0));
    return Perm(unchecked{}, std::move(v));
  }

  // images[i] = image of point i+1, 1-based.
  static Perm from_images(const std::vector<unsigned>& images) {
    std::vector<std::uint8_t> v(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] < 1 || images[i] > images.size())
        fail("point image out of range");
      v[i] = std::uint8_t(images[i] - 1);
    }
    Perm p(unchecked{}, std::move(v));
    p.check_bijection();
    return p;
  }

  unsigned degree() const { return unsigned(img_.size()); }

  // Image of 1-based point x.
  unsigned apply(unsigned x) const { return img_[x - 1] + 1u; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i)
        return false;
    return true;
  }

  // Left-to-right product: (p * q)(x) = q(p(x)).
  Perm operator*(const Perm& q) const {
    if (degree() != q.degree())
      fail("degree mismatch in composition");
    std::vector<std::uint8_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      v[i] = q.img_[img_[i]];
    return Perm(unchecked{}, std::move(v));
  }

  Perm inverse() const {
    std::vector<std::uint8_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      v[img_[i]] = std::uint8_t(i);
    return Perm(unchecked{}, std::move(v));
  }

  // s^-1 * p * s; relabels every point x of p to s(x).
  Perm conjugated_by(const Perm& s) const {
    if (degree() != s.degree())
      fail("degree mismatch in conjugation");
    std::vector<std::uint8_t> v(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i)
      v[s.img_[i]] = s.img_[img_[i]];
    return Perm(unchecked{}, std::move(v));
  }

  // Least k >= 1 with p^k = id; lcm of cycle lengths.
  unsigned order() const {
    unsigned result = 1;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i])
        continue;
      unsigned len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  bool is_even() const {
    unsigned transpositions = 0;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i])
        continue;
      unsigned len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }
  friend bool operator==(const Perm& a, const Perm& b) = default;

  std::size_t hash() const {
    std::size_t h = img_.size();
    for (std::uint8_t x : img_)
      h = h * 1000003u + x;
    return h;
  }

private:
  struct unchecked {};
  Perm(unchecked, std::vector<std::uint8_t> v) : img_(std::move(v)) {}

  void check_bijection() const {
    std::vector<bool> seen(img_.size(), false);
    for (std::uint8_t x : img_) {
      if (x >= img_.size() || seen[x])
        fail("images do not form a bijection");
      seen[x] = true;
    }
  }

  std::vector<std::uint8_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

// Disjoint-cycle text: "(1 2)(3 4 5)"; "()" is the identity. The degree is
// not part of the notation and must be supplied.
inline Perm parse_cycles(std::string_view text, unsigned degree) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<bool> used(degree + 1, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
      ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<unsigned> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected point or ')' in cycle notation: " + std::string(text));
      unsigned pt = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        pt = pt * 10 + unsigned(text[i++] - '0');
      if (pt < 1 || pt > degree)
        fail("point out of range in cycle notation: " + std::to_string(pt));
      if (used[pt])
        fail("repeated point in cycle notation: " + std::to_string(pt));
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
      if (i < text.size() && text[i] == ',')
        ++i, skip_ws();
    }
    if (i >= text.size())
      fail("unbalanced '(' in cycle notation");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    any = true;
    skip_ws();
  }
  if (!any)
    fail("empty cycle text");
  return Perm::from_images(images);
}

// Cycles ordered by smallest moved point; fixed points omitted; identity
// prints as "()".
inline std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree() + 1, false);
  for (unsigned x = 1; x <= p.degree(); ++x) {
    if (seen[x] || p.apply(x) == x)
      continue;
    out += '(';
    unsigned y = x;
    bool first = true;
    do {
      if (!first)
        out += ' ';
      out += std::to_string(y);
      seen[y] = true;
      y = p.apply(y);
      first = false;
    } while (y != x);
    out += ')';
  }
  if (out.empty())
    return "()";
  return out;
}

}  // namespace knotrep

#endif  // KNOTREP_PERM_HPP_
