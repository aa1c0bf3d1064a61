// Invariants built on the homomorphism classes: the G-image of meridians,
// the G-index polynomial, and the chirality partition, together with
// isomorphism labels for the small subgroups that occur.

#ifndef KNOTREP_INVARIANTS_HPP_
#define KNOTREP_INVARIANTS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homsearch.hpp"

namespace knotrep {

struct SubgroupLabel {
  std::size_t order = 1;
  std::string name = "1";

  friend bool operator==(const SubgroupLabel&, const SubgroupLabel&) = default;
  // Table order: larger subgroups first, then by name.
  friend bool operator<(const SubgroupLabel& x, const SubgroupLabel& y) {
    if (x.order != y.order)
      return x.order > y.order;
    return x.name < y.name;
  }
};

// Names the isomorphism type of an explicitly listed subgroup. Covers every
// subgroup type of A5, S4, S5 and A6; anything else gets a structural
// fallback. The label depends only on the isomorphism type, so it is
// invariant under conjugation and automorphisms of the ambient group.
inline SubgroupLabel identify_subgroup(const std::vector<Perm>& elements) {
  if (elements.empty())
    fail("identify_subgroup: empty set");
  std::size_t n = elements.size();
  std::unordered_set<Perm, PermHash> set(elements.begin(), elements.end());
  if (set.size() != n)
    fail("identify_subgroup: repeated elements");
  for (const Perm& x : elements)
    for (const Perm& y : elements)
      if (!set.count(x * y))
        fail("identify_subgroup: set is not closed under products");

  if (n == 1)
    return {1, "1"};
  std::size_t exponent = 1;
  std::size_t involutions = 0;
  bool abelian = true;
  for (const Perm& x : elements) {
    exponent = std::lcm(exponent, std::size_t(x.order()));
    if (x.order() == 2)
      ++involutions;
  }
  for (std::size_t i = 0; i < n && abelian; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (elements[i] * elements[j] != elements[j] * elements[i]) {
        abelian = false;
        break;
      }
  auto cyclic_name = [](std::size_t k) {
    return "Z/" + std::to_string(k) + "Z";
  };
  if (abelian) {
    if (exponent == n)
      return {n, cyclic_name(n)};
    if (n == 4)
      return {4, "V4"};
    if (exponent * exponent == n)
      return {n, cyclic_name(exponent) + " x " + cyclic_name(exponent)};
    return {n, "abelian order " + std::to_string(n)};
  }
  // Dihedral of order 2k: a cyclic half plus k reflections.
  bool dihedral = n % 2 == 0 && involutions >= n / 2 &&
                  [&] {
                    for (const Perm& x : elements)
                      if (x.order() == n / 2)
                        return true;
                    return false;
                  }();
  switch (n) {
    case 6:
      return {6, "S3"};
    case 8:
      return involutions == 1 ? SubgroupLabel{8, "Q8"}
                              : SubgroupLabel{8, "D8"};
    case 10:
      return {10, "D10"};
    case 12:
      if (involutions == 3 && exponent == 6)
        return {12, "A4"};
      if (dihedral)
        return {12, "D12"};
      return {12, "nonabelian order 12"};
    case 20:
      if (dihedral)
        return {20, "D20"};
      return {20, "F20"};
    case 24: {
      bool central_involution = false;
      for (const Perm& z : elements) {
        if (z.is_identity())
          continue;
        bool central = true;
        for (const Perm& x : elements)
          if (z * x != x * z) {
            central = false;
            break;
          }
        if (central) {
          central_involution = true;
          break;
        }
      }
      return central_involution ? SubgroupLabel{24, "nonabelian order 24"}
                                : SubgroupLabel{24, "S4"};
    }
    case 60:
      return {60, "A5"};
    case 120:
      return {120, "S5"};
    case 360:
      return {360, "A6"};
    default:
      if (dihedral)
        return {n, "D" + std::to_string(n)};
      return {n, "nonabelian order " + std::to_string(n)};
  }
}

namespace detail {

inline std::vector<Perm> picked(const std::vector<Perm>& all,
                                const std::vector<std::size_t>& idx) {
  std::vector<Perm> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) {
    if (i >= all.size())
      fail("selector index out of range");
    out.push_back(all[i]);
  }
  return out;
}

// Normal closure of `seed` inside the subgroup generated by `sub_gens`.
inline std::vector<Perm> normal_closure_in(const std::vector<Perm>& seed,
                                           const std::vector<Perm>& sub_gens,
                                           unsigned degree) {
  std::vector<Perm> current = seed;
  for (;;) {
    std::vector<Perm> closed = subgroup_closure(current, degree);
    std::vector<Perm> extended = closed;
    bool grew = false;
    for (const Perm& g : sub_gens)
      for (const Perm& x : closed) {
        Perm c = x.conjugated_by(g);
        if (!std::binary_search(closed.begin(), closed.end(), c)) {
          extended.push_back(c);
          grew = true;
        }
      }
    if (!grew)
      return closed;
    current = std::move(extended);
  }
}

}  // namespace detail

// A surjection is proper when the images of the selected surface elements
// generate a proper subgroup.
inline bool is_proper(const Homomorphism& h,
                      const std::vector<std::size_t>& surface_selectors,
                      const TargetGroup& group) {
  if (!h.surjective)
    fail("is_proper requires a surjective homomorphism");
  auto gens = detail::picked(h.selected_images, surface_selectors);
  return subgroup_closure(gens, group.degree()).size() != group.size();
}

// Label of the normal closure of the meridian images inside the subgroup
// generated by all surface-selected images.
inline SubgroupLabel meridian_image(
    const Homomorphism& h, const std::vector<std::size_t>& meridian_selectors,
    const std::vector<std::size_t>& surface_selectors, const TargetGroup& group) {
  auto surface = detail::picked(h.selected_images, surface_selectors);
  auto meridians = detail::picked(h.selected_images, meridian_selectors);
  auto closure =
      detail::normal_closure_in(meridians, surface, group.degree());
  return identify_subgroup(closure);
}

// Multiset of meridian-image labels over the proper surjective classes.
using MeridianImageSet = std::vector<SubgroupLabel>;  // kept sorted

inline MeridianImageSet g_image(const Presentation& p, const TargetGroup& g,
                                const SearchOptions& opts = {}) {
  if (p.meridian_selectors().empty())
    fail("g_image needs meridian-tagged selected elements");
  SearchOptions o = opts;
  o.surjective_only = true;
  HomClassSet classes = enumerate_homs(p, g, o);
  auto surface = p.all_selectors();
  auto meridians = p.meridian_selectors();
  MeridianImageSet out;
  for (const Homomorphism& h : classes.classes)
    if (is_proper(h, surface, g))
      out.push_back(meridian_image(h, meridians, surface, g));
  std::sort(out.begin(), out.end());
  return out;
}

// Polynomial counting classes by the order of the associated meridian's
// image; a sparse map from order to class count.
struct IndexPolynomial {
  std::map<unsigned, std::uint64_t> coeff;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto& [i, c] : coeff)
      s += c;
    return s;
  }

  friend bool operator==(const IndexPolynomial&,
                         const IndexPolynomial&) = default;
};

inline IndexPolynomial g_index(const Presentation& p, const TargetGroup& g,
                               SelectedRole associated_meridian,
                               const SearchOptions& opts = {}) {
  auto sel = p.find_selected(associated_meridian);
  if (!sel)
    fail("g_index: presentation has no selected element tagged " +
         associated_meridian.str());
  SearchOptions o = opts;
  o.surjective_only = false;
  HomClassSet classes = enumerate_homs(p, g, o);
  IndexPolynomial poly;
  for (const Homomorphism& h : classes.classes)
    ++poly.coeff[h.selected_images[*sel].order()];
  return poly;
}

// Classes counted by (order of m-image, order of (m*l)-image). Defaults to
// surjective classes; include_all adds the rest of Hom(pi_1, G).
struct ChiralityTable {
  std::map<std::pair<unsigned, unsigned>, std::uint64_t> counts;

  std::map<unsigned, std::uint64_t> marginal() const {
    std::map<unsigned, std::uint64_t> m;
    for (auto& [ij, c] : counts)
      m[ij.first] += c;
    return m;
  }

  friend bool operator==(const ChiralityTable&,
                         const ChiralityTable&) = default;
};

inline ChiralityTable chirality_table(const Presentation& p,
                                      const TargetGroup& g,
                                      bool include_all = false,
                                      const SearchOptions& opts = {},
                                      SelectedRole m = {'m', 1},
                                      SelectedRole l = {'l', 1}) {
  auto mi = p.find_selected(m);
  auto li = p.find_selected(l);
  if (!mi || !li)
    fail("chirality_table needs selected elements tagged " + m.str() +
         " and " + l.str());
  SearchOptions o = opts;
  o.surjective_only = !include_all;
  HomClassSet classes = enumerate_homs(p, g, o);
  ChiralityTable table;
  for (const Homomorphism& h : classes.classes) {
    const Perm& pm = h.selected_images[*mi];
    const Perm& pl = h.selected_images[*li];
    ++table.counts[{pm.order(), (pm * pl).order()}];
  }
  return table;
}

// ---- text renderers ----

inline std::string format_gimage(const MeridianImageSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out += ", ";
    out += s[i].name;
  }
  out += "}";
  return out;
}

// Ascending powers, zero terms omitted: "4x+15x^2+16x^3+26x^5".
inline std::string format_gindex(const IndexPolynomial& poly) {
  std::string out;
  for (auto& [i, c] : poly.coeff) {
    if (c == 0)
      continue;
    if (!out.empty())
      out += '+';
    out += std::to_string(c);
    out += 'x';
    if (i != 1)
      out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

inline std::string format_chirality(const ChiralityTable& t) {
  std::string out;
  for (auto& [ij, c] : t.counts) {
    out += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
           "): " + std::to_string(c) + "\n";
  }
  return out;
}

}  // namespace knotrep

#endif  // KNOTREP_INVARIANTS_HPP_
