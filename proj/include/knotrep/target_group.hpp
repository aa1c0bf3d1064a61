// Finite permutation groups as explicit element sets, subgroup closure, and
// the automorphism actions used to identify homomorphisms.

#ifndef KNOTREP_TARGET_GROUP_HPP_
#define KNOTREP_TARGET_GROUP_HPP_

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "perm.hpp"

namespace knotrep {

// Smallest subgroup containing gens, as an explicit element set by
// breadth-first multiplication. Intended for subgroups of order up to a few
// hundred; `bound` guards against runaway input.
inline std::vector<Perm> subgroup_closure(const std::vector<Perm>& gens,
                                          unsigned degree,
                                          std::size_t bound = 20000) {
  for (const Perm& g : gens)
    if (g.degree() != degree)
      fail("generator degree mismatch in closure");
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > bound)
          fail("subgroup closure exceeds bound of " + std::to_string(bound));
        queue.push_back(next);
      }
    }
  }
  std::vector<Perm> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end());
  return result;
}

enum class GroupKind { symmetric, alternating, explicit_gens };

// Which identification of homomorphisms is in force. conj_sn conjugates by
// all of S_n (for A_n this realizes Aut(A_n) except at n = 6); inner
// conjugates by the group itself; full adds the exceptional outer
// automorphism of A_6.
enum class AutAction { conj_sn, inner, full };

inline std::string to_string(AutAction a) {
  switch (a) {
    case AutAction::conj_sn: return "sn";
    case AutAction::inner: return "inner";
    case AutAction::full: return "full";
  }
  return "?";
}

inline std::optional<AutAction> parse_aut_action(std::string_view s) {
  if (s == "sn") return AutAction::conj_sn;
  if (s == "inner") return AutAction::inner;
  if (s == "full") return AutAction::full;
  return std::nullopt;
}

namespace detail {

inline void enumerate_sym(unsigned n, std::vector<Perm>& out, bool even_only) {
  std::vector<unsigned> v(n);
  std::iota(v.begin(), v.end(), 1u);
  do {
    Perm p = Perm::from_images(v);
    if (!even_only || p.is_even())
      out.push_back(p);
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace detail

class TargetGroup {
public:
  static TargetGroup symmetric(unsigned n, AutAction action = AutAction::conj_sn) {
    TargetGroup g(GroupKind::symmetric, n, action);
    detail::enumerate_sym(n, g.elements_, false);
    g.finish();
    return g;
  }

  static TargetGroup alternating(unsigned n, AutAction action = AutAction::conj_sn) {
    TargetGroup g(GroupKind::alternating, n, action);
    detail::enumerate_sym(n, g.elements_, true);
    g.finish();
    return g;
  }

  static TargetGroup from_generators(std::vector<Perm> gens, unsigned degree,
                                     AutAction action = AutAction::conj_sn,
                                     std::size_t bound = 20000) {
    TargetGroup g(GroupKind::explicit_gens, degree, action);
    g.elements_ = subgroup_closure(gens, degree, bound);
    g.generators_ = std::move(gens);
    g.finish();
    return g;
  }

  // "A5", "S4", ... (degree 1..9).
  static TargetGroup parse(std::string_view spec, AutAction action = AutAction::conj_sn) {
    if (spec.size() >= 2 && (spec[0] == 'A' || spec[0] == 'S')) {
      unsigned n = 0;
      for (std::size_t i = 1; i < spec.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(spec[i])))
          { n = 0; break; }
        n = n * 10 + unsigned(spec[i] - '0');
      }
      if (n >= 1 && n <= 9)
        return spec[0] == 'A' ? alternating(n, action) : symmetric(n, action);
    }
    fail("unrecognized group spec: " + std::string(spec) +
         " (expected A<n> or S<n>)");
  }

  GroupKind kind() const { return kind_; }
  unsigned degree() const { return degree_; }
  AutAction action() const { return action_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }

  // Conjugators realizing the action (without the exceptional A6 part).
  const std::vector<Perm>& conjugators() const { return conjugators_; }

  // The exceptional outer automorphism of A6 as an element-wise table, or
  // nullptr when the action does not use one.
  const std::unordered_map<Perm, Perm, PermHash>* exceptional_aut() const {
    return outer_ ? &*outer_ : nullptr;
  }

  // Orbit of a single element under the action; used both for symmetry
  // breaking and for naming conjugacy classes.
  std::vector<Perm> element_orbit(const Perm& p) const {
    std::unordered_set<Perm, PermHash> orbit;
    for (const Perm& s : conjugators_) {
      Perm c = p.conjugated_by(s);
      orbit.insert(c);
      if (outer_)
        orbit.insert(outer_->at(c));
    }
    std::vector<Perm> v(orbit.begin(), orbit.end());
    std::sort(v.begin(), v.end());
    return v;
  }

  // Minimal representatives of the non-identity element orbits, ascending.
  const std::vector<Perm>& orbit_min_reps() const { return min_reps_; }

private:
  TargetGroup(GroupKind kind, unsigned degree, AutAction action)
      : kind_(kind), degree_(degree), action_(action) {
    if (degree < 1 || degree > 9)
      fail("group degree out of supported range 1..9");
  }

  void finish() {
    std::sort(elements_.begin(), elements_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i)
      index_.emplace(elements_[i], i);
    build_conjugators();
    if (action_ == AutAction::full && kind_ == GroupKind::alternating &&
        degree_ == 6)
      build_exceptional_aut();
    std::unordered_set<Perm, PermHash> covered;
    for (const Perm& p : elements_) {
      if (p.is_identity() || covered.count(p))
        continue;
      std::vector<Perm> orbit = element_orbit(p);
      min_reps_.push_back(orbit.front());
      covered.insert(orbit.begin(), orbit.end());
    }
    std::sort(min_reps_.begin(), min_reps_.end());
  }

  void build_conjugators() {
    if (action_ == AutAction::inner) {
      conjugators_ = elements_;
      return;
    }
    if (kind_ == GroupKind::symmetric) {
      conjugators_ = elements_;
      return;
    }
    std::vector<Perm> sym;
    detail::enumerate_sym(degree_, sym, false);
    if (kind_ == GroupKind::alternating) {
      conjugators_ = std::move(sym);
      return;
    }
    // Explicit subgroup: conjugation must preserve the element set, so use
    // the S_n-normalizer.
    for (const Perm& s : sym) {
      bool ok = true;
      for (const Perm& g : generators_)
        if (!contains(g.conjugated_by(s))) {
          ok = false;
          break;
        }
      if (ok)
        conjugators_.push_back(s);
    }
  }

  // A6 acts on the six cosets of a point-transitive A5 subgroup; relabeling
  // through that action gives an automorphism not induced by S6.
  void build_exceptional_aut() {
    const unsigned n = 6;
    std::vector<Perm> h_gens = {
        parse_cycles("(1 2 3 4 5)", n),   // z -> z+1 on {0..4}, points 1..5
        parse_cycles("(1 6)(2 5)", n)};   // z -> -1/z, infinity = point 6
    std::vector<Perm> h = subgroup_closure(h_gens, n);
    if (h.size() != 60)
      fail("internal: transitive A5 in A6 has wrong order");
    std::unordered_set<Perm, PermHash> h_set(h.begin(), h.end());
    // Coset representatives of H in A6.
    std::vector<Perm> reps;
    std::unordered_map<Perm, unsigned, PermHash> coset_of;
    for (const Perm& g : elements_) {
      bool found = false;
      for (unsigned r = 0; r < reps.size() && !found; ++r)
        if (h_set.count(g * reps[r].inverse()))
          { coset_of.emplace(g, r); found = true; }
      if (!found) {
        coset_of.emplace(g, unsigned(reps.size()));
        reps.push_back(g);
      }
    }
    if (reps.size() != 6)
      fail("internal: expected 6 cosets of A5 in A6");
    outer_.emplace();
    for (const Perm& g : elements_) {
      // Right multiplication permutes cosets: Hr -> Hrg.
      std::vector<unsigned> images(6);
      for (unsigned r = 0; r < 6; ++r)
        images[r] = coset_of.at(reps[r] * g) + 1;
      Perm image = Perm::from_images(images);
      if (!image.is_even())
        fail("internal: coset action left A6");
      outer_->emplace(g, image);
    }
  }

  GroupKind kind_;
  unsigned degree_;
  AutAction action_;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<Perm> conjugators_;
  std::optional<std::unordered_map<Perm, Perm, PermHash>> outer_;
  std::vector<Perm> min_reps_;
};

// Lexicographically minimal vector in the orbit of `images` under the
// group's action (simultaneous conjugation, plus the exceptional A6
// automorphism under AutAction::full).
inline std::vector<Perm> canonical_form(const std::vector<Perm>& images,
                                        const TargetGroup& group) {
  if (images.empty())
    return images;
  std::vector<Perm> best;
  std::vector<Perm> cand(images.size());
  auto consider = [&](const std::vector<Perm>& v) {
    if (best.empty() || v < best)
      best = v;
  };
  for (const Perm& s : group.conjugators()) {
    for (std::size_t i = 0; i < images.size(); ++i)
      cand[i] = images[i].conjugated_by(s);
    consider(cand);
    if (const auto* outer = group.exceptional_aut()) {
      std::vector<Perm> mapped(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i)
        mapped[i] = outer->at(cand[i]);
      consider(mapped);
    }
  }
  return best;
}

// Full orbit of an image vector under the action; orbit sizes feed the
// raw homomorphism count.
inline std::size_t orbit_size(const std::vector<Perm>& images,
                              const TargetGroup& group) {
  struct VecHash {
    std::size_t operator()(const std::vector<Perm>& v) const {
      std::size_t h = v.size();
      for (const Perm& p : v)
        h = h * 1000003u ^ p.hash();
      return h;
    }
  };
  std::unordered_set<std::vector<Perm>, VecHash> orbit;
  std::vector<Perm> cand(images.size());
  for (const Perm& s : group.conjugators()) {
    for (std::size_t i = 0; i < images.size(); ++i)
      cand[i] = images[i].conjugated_by(s);
    orbit.insert(cand);
    if (const auto* outer = group.exceptional_aut()) {
      std::vector<Perm> mapped(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i)
        mapped[i] = outer->at(cand[i]);
      orbit.insert(mapped);
    }
  }
  return orbit.size();
}

}  // namespace knotrep

#endif  // KNOTREP_TARGET_GROUP_HPP_
