// Enumeration of homomorphisms from a finitely presented group to a finite
// permutation group, deduplicated under the group's automorphism action.

#ifndef KNOTREP_HOMSEARCH_HPP_
#define KNOTREP_HOMSEARCH_HPP_

#include <atomic>
#include <cstdint>
#include <mutex>
#include <set>
#include <thread>
#include <vector>

#include "presentation.hpp"
#include "target_group.hpp"

namespace knotrep {

struct Homomorphism {
  std::vector<Perm> images;           // canonical generator images
  std::vector<Perm> selected_images;  // images of the selected elements
  bool surjective = false;
  std::uint64_t orbit_size = 0;       // orbit under the automorphism action
};

struct HomClassSet {
  std::vector<Homomorphism> classes;  // sorted by canonical images
  std::uint64_t raw_count = 0;        // total homomorphisms, all orbits
  AutAction action = AutAction::conj_sn;

  std::size_t count() const { return classes.size(); }
};

struct SearchOptions {
  bool surjective_only = false;
  std::uint64_t node_limit = 1000000000;
  unsigned jobs = 1;
};

class SearchLimitError : public std::runtime_error {
public:
  explicit SearchLimitError(const std::string& msg)
      : std::runtime_error(msg) {}
};

namespace detail {

// Relators recompiled to assignment-slot letters, scheduled at the step
// where their last generator gets a value.
struct CompiledRelator {
  std::vector<std::int16_t> letters;  // signed 1-based slot indices
  std::size_t fire_step = 0;
};

struct SearchPlan {
  std::vector<std::size_t> slot_to_gen;           // assignment order
  std::vector<std::vector<CompiledRelator>> fired;  // per step
};

// Static assignment order: repeatedly prefer a generator that completes a
// relator (it is then pinned down by an immediate check); otherwise take
// the most-constrained remaining generator. Ties break by generator index,
// so the order is a pure function of the presentation.
inline SearchPlan make_plan(const Presentation& p) {
  std::size_t n = p.generator_count();
  const auto& relators = p.relators();
  std::vector<std::vector<std::size_t>> gens_of(relators.size());
  for (std::size_t r = 0; r < relators.size(); ++r) {
    std::set<std::size_t> gens;
    for (std::int16_t x : relators[r].letters)
      gens.insert(std::size_t(x > 0 ? x : -x) - 1);
    gens_of[r].assign(gens.begin(), gens.end());
  }
  std::vector<bool> assigned(n, false);
  SearchPlan plan;
  plan.fired.resize(n);
  auto unassigned_in = [&](std::size_t r) {
    std::size_t cnt = 0;
    for (std::size_t g : gens_of[r])
      if (!assigned[g])
        ++cnt;
    return cnt;
  };
  while (plan.slot_to_gen.size() < n) {
    std::size_t pick = n;
    for (std::size_t r = 0; r < relators.size() && pick == n; ++r)
      if (unassigned_in(r) == 1)
        for (std::size_t g : gens_of[r])
          if (!assigned[g]) {
            pick = g;
            break;
          }
    if (pick == n) {
      std::size_t best_score = 0;
      for (std::size_t g = 0; g < n; ++g) {
        if (assigned[g])
          continue;
        std::size_t score = 1;
        for (std::size_t r = 0; r < relators.size(); ++r)
          if (unassigned_in(r) == 2)
            for (std::size_t h : gens_of[r])
              if (h == g)
                score += 1;
        if (pick == n || score > best_score) {
          pick = g;
          best_score = score;
        }
      }
    }
    assigned[pick] = true;
    plan.slot_to_gen.push_back(pick);
  }
  std::vector<std::size_t> gen_to_slot(n);
  for (std::size_t s = 0; s < n; ++s)
    gen_to_slot[plan.slot_to_gen[s]] = s;
  for (std::size_t r = 0; r < relators.size(); ++r) {
    CompiledRelator cr;
    std::size_t last = 0;
    for (std::int16_t x : relators[r].letters) {
      std::size_t slot = gen_to_slot[std::size_t(x > 0 ? x : -x) - 1];
      last = std::max(last, slot);
      cr.letters.push_back(std::int16_t(x > 0 ? std::int16_t(slot + 1)
                                              : -std::int16_t(slot + 1)));
    }
    cr.fire_step = last;
    if (!cr.letters.empty())
      plan.fired[last].push_back(std::move(cr));
  }
  return plan;
}

inline bool relator_holds(const CompiledRelator& r,
                          const std::vector<Perm>& slot_images,
                          const std::vector<Perm>& slot_inverses,
                          unsigned degree) {
  Perm acc = Perm::identity(degree);
  for (std::int16_t x : r.letters)
    acc = x > 0 ? acc * slot_images[std::size_t(x) - 1]
                : acc * slot_inverses[std::size_t(-x) - 1];
  return acc.is_identity();
}

struct VecLess {
  bool operator()(const std::vector<Perm>& a,
                  const std::vector<Perm>& b) const {
    return a < b;
  }
};

class Searcher {
public:
  Searcher(const Presentation& p, const TargetGroup& g,
           const SearchOptions& opts)
      : group_(g), opts_(opts), plan_(make_plan(p)),
        n_(p.generator_count()) {}

  // Enumerates image vectors with the first non-identity slot restricted to
  // minimal orbit representatives; every class keeps at least one member.
  std::set<std::vector<Perm>, VecLess> run() {
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < group_.size(); ++i)
      roots.push_back(i);
    unsigned jobs = std::max(1u, opts_.jobs);
    if (jobs == 1) {
      Worker w(*this);
      for (std::size_t root : roots)
        w.start_from_root(root);
      return std::move(w.found);
    }
    std::vector<Worker> workers(jobs, Worker(*this));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t)
      threads.emplace_back([&, t] {
        try {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= roots.size() || abort_.load(std::memory_order_relaxed))
              break;
            workers[t].start_from_root(roots[i]);
          }
        } catch (...) {
          {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error)
              error = std::current_exception();
          }
          abort_.store(true, std::memory_order_relaxed);
        }
      });
    for (auto& th : threads)
      th.join();
    if (error)
      std::rethrow_exception(error);
    std::set<std::vector<Perm>, VecLess> merged;
    for (Worker& w : workers)
      merged.merge(std::move(w.found));
    return merged;
  }

private:
  struct Worker {
    explicit Worker(Searcher& s)
        : owner(&s),
          slot_images(s.n_, Perm::identity(s.group_.degree())),
          slot_inverses(s.n_, Perm::identity(s.group_.degree())) {}

    // Runs the subtree where slot 0 takes the given element.
    void start_from_root(std::size_t element_index) {
      const Perm& g = owner->group_.elements()[element_index];
      if (!owner->admissible_first(g))
        return;
      assign(0, g);
      descend(1, !g.is_identity());
    }

    void assign(std::size_t slot, const Perm& g) {
      slot_images[slot] = g;
      slot_inverses[slot] = g.inverse();
    }

    void descend(std::size_t depth, bool seen_nonidentity) {
      if (owner->abort_.load(std::memory_order_relaxed))
        return;
      if (owner->nodes_.fetch_add(1, std::memory_order_relaxed) >
          owner->opts_.node_limit)
        throw SearchLimitError("search node limit exceeded (" +
                               std::to_string(owner->opts_.node_limit) + ")");
      for (const auto& r : owner->plan_.fired[depth - 1])
        if (!relator_holds(r, slot_images, slot_inverses,
                           owner->group_.degree()))
          return;
      if (depth == owner->n_) {
        std::vector<Perm> images(owner->n_);
        for (std::size_t s = 0; s < owner->n_; ++s)
          images[owner->plan_.slot_to_gen[s]] = slot_images[s];
        found.insert(canonical_form(images, owner->group_));
        return;
      }
      for (const Perm& g : owner->group_.elements()) {
        if (!seen_nonidentity && !g.is_identity() &&
            !owner->is_min_rep(g))
          continue;
        assign(depth, g);
        descend(depth + 1, seen_nonidentity || !g.is_identity());
      }
    }

    Searcher* owner;
    std::vector<Perm> slot_images;
    std::vector<Perm> slot_inverses;
    std::set<std::vector<Perm>, VecLess> found;
  };

  bool admissible_first(const Perm& g) const {
    return g.is_identity() || is_min_rep(g);
  }

  bool is_min_rep(const Perm& g) const {
    const auto& reps = group_.orbit_min_reps();
    return std::binary_search(reps.begin(), reps.end(), g);
  }

  const TargetGroup& group_;
  SearchOptions opts_;
  SearchPlan plan_;
  std::size_t n_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> abort_{false};

  friend struct Worker;
};

inline HomClassSet finalize(std::set<std::vector<Perm>, VecLess> canon,
                            const Presentation& p, const TargetGroup& g,
                            bool surjective_only) {
  HomClassSet out;
  out.action = g.action();
  for (const std::vector<Perm>& images : canon) {
    Homomorphism h;
    h.images = images;
    std::vector<Perm> closure_gens = images;
    h.surjective = subgroup_closure(closure_gens, g.degree()).size() == g.size();
    if (surjective_only && !h.surjective)
      continue;
    for (const Word& w : p.selected())
      h.selected_images.push_back(evaluate(w, images, g.degree()));
    h.orbit_size = orbit_size(images, g);
    out.raw_count += h.orbit_size;
    out.classes.push_back(std::move(h));
  }
  return out;
}

}  // namespace detail

// Backtracking enumeration over generator images with relators checked as
// soon as their generators are assigned and the first non-identity image
// restricted to orbit-minimal class representatives. Classes are
// deduplicated by canonical form and sorted, so the result is deterministic
// and independent of the worker count.
inline HomClassSet enumerate_homs(const Presentation& p, const TargetGroup& g,
                                  const SearchOptions& opts = {}) {
  detail::Searcher searcher(p, g, opts);
  return detail::finalize(searcher.run(), p, g, opts.surjective_only);
}

// Exhaustive oracle: tests every assignment of generator images. The search
// space |G|^generators must stay within `bound`.
inline HomClassSet brute_force_enumerate(const Presentation& p,
                                         const TargetGroup& g,
                                         std::uint64_t bound = 100000000,
                                         bool surjective_only = false) {
  std::size_t n = p.generator_count();
  double space = 1;
  for (std::size_t i = 0; i < n; ++i)
    space *= double(g.size());
  if (space > double(bound))
    fail("brute force space exceeds bound");
  std::set<std::vector<Perm>, detail::VecLess> canon;
  std::uint64_t raw = 0;
  std::vector<std::size_t> odo(n, 0);
  std::vector<Perm> images(n, Perm::identity(g.degree()));
  for (;;) {
    for (std::size_t i = 0; i < n; ++i)
      images[i] = g.elements()[odo[i]];
    bool ok = true;
    for (const Word& r : p.relators())
      if (!evaluate(r, images, g.degree()).is_identity()) {
        ok = false;
        break;
      }
    if (ok) {
      ++raw;
      canon.insert(canonical_form(images, g));
    }
    std::size_t i = 0;
    while (i < n && ++odo[i] == g.size())
      odo[i++] = 0;
    if (i == n)
      break;
  }
  HomClassSet out = detail::finalize(std::move(canon), p, g, surjective_only);
  // Cross-check: orbit sizes must account for every raw solution.
  if (!surjective_only && out.raw_count != raw)
    fail("orbit accounting mismatch in brute force enumeration");
  return out;
}

}  // namespace knotrep

#endif  // KNOTREP_HOMSEARCH_HPP_
